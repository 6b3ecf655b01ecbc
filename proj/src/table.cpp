#include "acyclic/table.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "acyclic/errors.hpp"
#include "acyclic/formulas.hpp"

namespace acyclic {

namespace {

std::size_t parse_index(const std::string& text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) throw DomainError("bad index '" + text + "'");
  return value;
}

bool is_symmetric(TableFamily f) { return f != TableFamily::PlusEdge; }

}  // namespace

IndexRange IndexRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_index(text);
    return {v, v};
  }
  return {parse_index(text.substr(0, dots)), parse_index(text.substr(dots + 2))};
}

void TableRequest::validate() const {
  if (n1.lo > n1.hi || n2.lo > n2.hi) throw DomainError("empty index range");
  if (family == TableFamily::PlusEdge && n1.lo < 2) throw DomainError("plus-edge table needs n1 >= 2");
  if (family == TableFamily::MinusEdge && (n1.lo < 1 || n2.lo < 1)) throw DomainError("minus-edge table needs n1, n2 >= 1");
}

std::vector<std::vector<std::optional<Nat>>> table_values(const TableRequest& req) {
  req.validate();
  std::vector<std::vector<std::optional<Nat>>> rows;
  for (auto a = req.n1.lo; a <= req.n1.hi; ++a) {
    auto& row = rows.emplace_back();
    for (auto b = req.n2.lo; b <= req.n2.hi; ++b) {
      if (req.symmetric_blank && is_symmetric(req.family) && a > b) {
        row.emplace_back(std::nullopt);
        continue;
      }
      switch (req.family) {
        case TableFamily::Complete: row.emplace_back(count_complete_bipartite(a, b)); break;
        case TableFamily::PlusEdge: row.emplace_back(count_plus_edge(a, b)); break;
        case TableFamily::MinusEdge: row.emplace_back(count_minus_edge(a, b)); break;
      }
    }
  }
  return rows;
}

std::string render_table(const TableRequest& req) {
  const auto values = table_values(req);
  auto cell = [](const std::optional<Nat>& v) { return v ? v->to_string() : std::string(); };
  std::ostringstream os;

  switch (req.format) {
    case TableFormat::Csv: {
      os << "n1\\n2";
      for (auto b = req.n2.lo; b <= req.n2.hi; ++b) os << ',' << b;
      os << '\n';
      for (std::size_t r = 0; r < values.size(); ++r) {
        os << req.n1.lo + r;
        for (const auto& v : values[r]) os << ',' << cell(v);
        os << '\n';
      }
      break;
    }
    case TableFormat::Markdown: {
      os << "| n1\\n2 |";
      for (auto b = req.n2.lo; b <= req.n2.hi; ++b) os << ' ' << b << " |";
      os << "\n|---|";
      for (auto b = req.n2.lo; b <= req.n2.hi; ++b) os << "---:|";
      os << '\n';
      for (std::size_t r = 0; r < values.size(); ++r) {
        os << "| " << req.n1.lo + r << " |";
        for (const auto& v : values[r]) os << ' ' << cell(v) << " |";
        os << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json doc;
      doc["family"] = family_name(req.family);
      auto& n2 = doc["n2"] = nlohmann::ordered_json::array();
      for (auto b = req.n2.lo; b <= req.n2.hi; ++b) n2.push_back(b);
      auto& rows = doc["rows"] = nlohmann::ordered_json::array();
      for (std::size_t r = 0; r < values.size(); ++r) {
        nlohmann::ordered_json row;
        row["n1"] = req.n1.lo + r;
        auto& vals = row["values"] = nlohmann::ordered_json::array();
        for (const auto& v : values[r]) {
          if (v) vals.push_back(v->to_string());
          else vals.push_back(nullptr);
        }
        rows.push_back(std::move(row));
      }
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

TableFamily parse_family(const std::string& name) {
  if (name == "complete") return TableFamily::Complete;
  if (name == "plus-edge") return TableFamily::PlusEdge;
  if (name == "minus-edge") return TableFamily::MinusEdge;
  throw DomainError("unknown table family '" + name + "' (complete, plus-edge, minus-edge)");
}

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "markdown") return TableFormat::Markdown;
  if (name == "json") return TableFormat::Json;
  throw DomainError("unknown format '" + name + "' (csv, markdown, json)");
}

std::string family_name(TableFamily f) {
  switch (f) {
    case TableFamily::Complete: return "complete";
    case TableFamily::PlusEdge: return "plus-edge";
    case TableFamily::MinusEdge: return "minus-edge";
  }
  return "?";
}

}  // namespace acyclic
