#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acyclic/combinum.hpp"

namespace acyclic {

enum class TableFamily { Complete, PlusEdge, MinusEdge };
enum class TableFormat { Csv, Markdown, Json };

struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  /// "a..b" or a single "a".
  static IndexRange parse(const std::string& text);
};

struct TableRequest {
  TableFamily family = TableFamily::Complete;
  IndexRange n1{2, 7};
  IndexRange n2{2, 7};
  TableFormat format = TableFormat::Csv;
  /// Leave cells with n1 > n2 empty for the symmetric families.
  bool symmetric_blank = false;

  /// Throws DomainError for empty ranges or cells outside the family's domain.
  void validate() const;
};

/// Cell values row by row; nullopt marks a blanked cell.
std::vector<std::vector<std::optional<Nat>>> table_values(const TableRequest& req);

std::string render_table(const TableRequest& req);

TableFamily parse_family(const std::string& name);
TableFormat parse_format(const std::string& name);
std::string family_name(TableFamily f);

}  // namespace acyclic
