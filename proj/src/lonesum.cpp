#include "acyclic/lonesum.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>

#include "acyclic/errors.hpp"
#include "acyclic/parallel.hpp"

namespace acyclic {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows * cols) throw std::invalid_argument("cell count does not match dimensions");
  for (auto& c : cells_) {
    if (c > 1) throw std::invalid_argument("binary matrix entries must be 0 or 1");
  }
}

BinaryMatrix BinaryMatrix::from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask) {
  if (rows * cols > 64) throw LimitExceeded("mask form limited to 64 cells");
  BinaryMatrix m(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) m.cells_[k] = (mask >> k) & 1u;
  return m;
}

std::uint64_t BinaryMatrix::to_mask() const {
  if (cells_.size() > 64) throw LimitExceeded("mask form limited to 64 cells");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < cells_.size(); ++k) mask |= std::uint64_t{cells_[k]} << k;
  return mask;
}

std::size_t BinaryMatrix::row_sum(std::size_t i) const {
  auto first = cells_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return static_cast<std::size_t>(std::count(first, first + static_cast<std::ptrdiff_t>(cols_), 1));
}

std::size_t BinaryMatrix::col_sum(std::size_t j) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += cells_[i * cols_ + j];
  return s;
}

std::optional<ForbiddenWitness> find_forbidden_submatrix(const BinaryMatrix& m) {
  std::vector<std::size_t> sums(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) sums[i] = m.row_sum(i);
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });

  for (std::size_t r = 1; r < order.size(); ++r) {
    const std::size_t big = order[r - 1];
    const std::size_t small = order[r];
    // sums[big] >= sums[small], so a column only in `small` forces one only in `big`.
    std::optional<std::size_t> only_small;
    std::optional<std::size_t> only_big;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(small, j) && !m(big, j) && !only_small) only_small = j;
      if (m(big, j) && !m(small, j) && !only_big) only_big = j;
    }
    if (!only_small) continue;
    if (!only_big) throw ContractViolation("staircase test: larger row lacks a private column");
    return ForbiddenWitness{std::min(big, small), std::max(big, small), std::min(*only_small, *only_big),
                            std::max(*only_small, *only_big)};
  }
  return std::nullopt;
}

bool rows_are_nested(std::vector<std::uint32_t> rows) {
  std::sort(rows.begin(), rows.end(), [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if ((rows[r] & ~rows[r - 1]) != 0) return false;
  }
  return true;
}

Nat count_lonesum_bruteforce(std::size_t n1, std::size_t n2) {
  if (n1 * n2 > kMaxLonesumCells) {
    throw LimitExceeded("lonesum enumeration limited to " + std::to_string(kMaxLonesumCells) + " cells, got " +
                        std::to_string(n1 * n2));
  }
  const std::uint64_t total = std::uint64_t{1} << (n1 * n2);
  const std::uint64_t row_mask = (std::uint64_t{1} << n2) - 1;
  return Nat(detail::parallel_count(total, [=] {
    return [=, rows = std::vector<std::uint32_t>(n1)](std::uint64_t mask) mutable {
      for (std::size_t i = 0; i < n1; ++i) rows[i] = static_cast<std::uint32_t>((mask >> (i * n2)) & row_mask);
      return rows_are_nested(rows);
    };
  }));
}

namespace {

void check_complete_bipartite(const Orientation& o, std::size_t n1, std::size_t n2) {
  if (o.graph() != complete_bipartite(n1, n2)) {
    throw ContractViolation("orientation is not of K_{" + std::to_string(n1) + "," + std::to_string(n2) + "}");
  }
}

}  // namespace

BinaryMatrix orientation_to_matrix(const Orientation& o, std::size_t n1, std::size_t n2) {
  check_complete_bipartite(o, n1, n2);
  // Edge i*n2+j is (i, n1+j) with i the lower label: "up" means A to B.
  return BinaryMatrix::from_mask(n1, n2, o.bits());
}

Orientation matrix_to_orientation(const BinaryMatrix& m) {
  return Orientation(std::make_shared<const Graph>(complete_bipartite(m.rows(), m.cols())), m.to_mask());
}

bool has_directed_4cycle(const Orientation& o, std::size_t n1, std::size_t n2) {
  check_complete_bipartite(o, n1, n2);
  auto a_to_b = [&](std::size_t a, std::size_t b) { return o.points_up(a * n2 + b); };
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t a2 = a1 + 1; a2 < n1; ++a2)
      for (std::size_t b1 = 0; b1 < n2; ++b1)
        for (std::size_t b2 = b1 + 1; b2 < n2; ++b2) {
          // a1 -> b1 -> a2 -> b2 -> a1, or the same cycle reversed.
          const bool forward = a_to_b(a1, b1) && !a_to_b(a2, b1) && a_to_b(a2, b2) && !a_to_b(a1, b2);
          const bool backward = !a_to_b(a1, b1) && a_to_b(a2, b1) && !a_to_b(a2, b2) && a_to_b(a1, b2);
          if (forward || backward) return true;
        }
  return false;
}

BinaryMatrix parse_matrix(std::istream& in) {
  std::vector<std::uint8_t> cells;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) break;
    if (rows > 0 && line.size() != cols) {
      throw MatrixParseError("row " + std::to_string(rows) + " has " + std::to_string(line.size()) + " columns, expected " +
                             std::to_string(cols));
    }
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] != '0' && line[j] != '1') {
        throw MatrixParseError("row " + std::to_string(rows) + " column " + std::to_string(j) + ": expected '0' or '1'");
      }
      cells.push_back(line[j] == '1' ? 1 : 0);
    }
    cols = line.size();
    ++rows;
  }
  return BinaryMatrix(rows, cols, std::move(cells));
}

std::string format_matrix(const BinaryMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += m(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace acyclic
