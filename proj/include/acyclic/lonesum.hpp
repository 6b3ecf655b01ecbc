#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "acyclic/combinum.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// Zero-one matrix, row-major with the column index fastest. For an n1 x n2
/// matrix, cell (i, j) sits at i*n2+j, the same index as edge (i, n1+j) of
/// complete_bipartite(n1, n2).
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells);

  /// Cell k is bit k of `mask`. Requires rows * cols <= 64.
  static BinaryMatrix from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { cells_.at(i * cols_ + j) = value ? 1 : 0; }

  std::size_t row_sum(std::size_t i) const;
  std::size_t col_sum(std::size_t j) const;

  /// Inverse of from_mask. Requires rows * cols <= 64.
  std::uint64_t to_mask() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Rows row_a < row_b and columns col_a < col_b holding [[1,0],[0,1]] or [[0,1],[1,0]].
struct ForbiddenWitness {
  std::size_t row_a = 0;
  std::size_t row_b = 0;
  std::size_t col_a = 0;
  std::size_t col_b = 0;

  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// Staircase test: order rows by row sum, descending, and require each row's
/// support to contain the next one's. When a consecutive pair fails, the two
/// rows plus a column from each side of the set difference form a witness.
std::optional<ForbiddenWitness> find_forbidden_submatrix(const BinaryMatrix& m);

inline bool is_lonesum(const BinaryMatrix& m) { return !find_forbidden_submatrix(m).has_value(); }

/// Staircase test on row bitmasks (bit j = column j).
bool rows_are_nested(std::vector<std::uint32_t> rows);

inline constexpr std::size_t kMaxLonesumCells = 24;

/// Number of n1 x n2 lonesum matrices by enumerating all 2^(n1*n2) of them.
/// Throws LimitExceeded above kMaxLonesumCells cells.
Nat count_lonesum_bruteforce(std::size_t n1, std::size_t n2);

/// Cell (i, j) is 1 iff edge (i, n1+j) points from block A to block B.
/// Throws ContractViolation if `o` is not an orientation of K_{n1,n2}.
BinaryMatrix orientation_to_matrix(const Orientation& o, std::size_t n1, std::size_t n2);

/// The orientation of complete_bipartite(m.rows(), m.cols()) encoded by `m`.
Orientation matrix_to_orientation(const BinaryMatrix& m);

/// True iff some a1, a2 in A and b1, b2 in B span a directed 4-cycle.
bool has_directed_4cycle(const Orientation& o, std::size_t n1, std::size_t n2);

class MatrixParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads one row per line as '0'/'1' characters with no separators. A blank
/// line or end of input terminates; empty input is the 0 x 0 matrix.
BinaryMatrix parse_matrix(std::istream& in);

/// Inverse of parse_matrix, one line per row with a trailing newline.
std::string format_matrix(const BinaryMatrix& m);

}  // namespace acyclic
