#include "acyclic/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "acyclic/chromatic.hpp"
#include "acyclic/combinum.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/formulas.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/lonesum.hpp"
#include "acyclic/table.hpp"
#include "acyclic/verify.hpp"

namespace acyclic {

namespace {

struct SpecOptions {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  bool plus_edge = false;
  bool minus_edge = false;

  void attach(CLI::App* cmd, bool required) {
    auto* a = cmd->add_option("--n1", n1, "size of block 1");
    auto* b = cmd->add_option("--n2", n2, "size of block 2");
    if (required) {
      a->required();
      b->required();
    }
    auto* plus = cmd->add_flag("--plus-edge", plus_edge,
                               "add an edge inside block 1 (for block 2, swap --n1 and --n2)");
    auto* minus = cmd->add_flag("--minus-edge", minus_edge, "delete one edge");
    plus->excludes(minus);
  }

  BipartiteSpec spec() const {
    auto mod = plus_edge ? Modification::PlusEdgeBlock1 : minus_edge ? Modification::MinusEdge : Modification::None;
    return {n1, n2, mod};
  }
};

// Parses "0-1,1-2,..." into edges.
std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw DomainError("bad edge '" + item + "', expected u-v");
    try {
      edges.push_back({static_cast<Vertex>(std::stoul(item.substr(0, dash))),
                       static_cast<Vertex>(std::stoul(item.substr(dash + 1)))});
    } catch (const std::logic_error&) {
      throw DomainError("bad edge '" + item + "', expected u-v");
    }
  }
  return edges;
}

int cmd_count(const SpecOptions& opts, bool verify, std::ostream& out, std::ostream& err) {
  const BipartiteSpec spec = opts.spec();
  const Nat value = count_acyclic(spec);
  if (!verify) {
    out << value << '\n';
    return kExitOk;
  }
  const Graph g = graph_for(spec);
  if (g.edge_count() > kMaxBruteForceEdges || g.vertex_count() > kMaxChromaticVertices) {
    out << value << '\n';
    err << "verify skipped: " << spec.describe() << " has " << g.edge_count() << " edges (brute-force cap "
        << kMaxBruteForceEdges << ")\n";
    return kExitOk;
  }
  const Nat brute = count_acyclic_bruteforce(g);
  const Nat stanley = stanley_count(g);
  const bool agree = value == brute && brute == stanley;
  out << value << (agree ? " AGREE" : " DISAGREE") << " (bruteforce " << brute << ", stanley " << stanley << ")\n";
  return agree ? kExitOk : kExitVerifyFailed;
}

int cmd_lonesum_check(const std::string& path, std::istream& in, std::ostream& out) {
  BinaryMatrix m;
  if (path.empty() || path == "-") {
    m = parse_matrix(in);
  } else {
    std::ifstream file(path);
    if (!file) throw MatrixParseError("cannot open " + path);
    m = parse_matrix(file);
  }
  if (auto w = find_forbidden_submatrix(m)) {
    out << "not-lonesum: rows (" << w->row_a << ',' << w->row_b << ") cols (" << w->col_a << ',' << w->col_b << ")\n";
  } else {
    out << "lonesum\n";
  }
  return kExitOk;
}

int cmd_verify_all(std::size_t max_n, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_verification(max_n)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "verification FAILED") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact acyclic orientation counts for complete bipartite graphs", "acyclic"};
  app.require_subcommand(1);

  SpecOptions count_opts;
  bool count_verify = false;
  auto* count = app.add_subcommand("count", "acyclic orientations of K_{n1,n2}, K+e1 or K-e");
  count_opts.attach(count, true);
  count->add_flag("--verify", count_verify, "cross-check with brute force and Stanley's identity");

  std::string family = "complete";
  std::string n1_range = "2..7";
  std::string n2_range = "2..7";
  std::string format = "csv";
  bool symmetric_blank = false;
  auto* table = app.add_subcommand("table", "table of counts over ranges of n1 and n2");
  table->add_option("family", family, "complete | plus-edge | minus-edge")->required();
  table->add_option("n1", n1_range, "n1 range, a..b");
  table->add_option("n2", n2_range, "n2 range, a..b");
  table->add_option("--format", format, "csv | markdown | json");
  table->add_flag("--symmetric-blank", symmetric_blank, "leave n1 > n2 cells empty for symmetric families");

  std::size_t pb_n = 0;
  std::size_t pb_m = 0;
  auto* pb = app.add_subcommand("polybernoulli", "poly-Bernoulli number B_n^(-m)");
  pb->add_option("n", pb_n)->required();
  pb->add_option("m", pb_m)->required();

  std::size_t st_n = 0;
  std::size_t st_k = 0;
  auto* st = app.add_subcommand("stirling", "Stirling number of the second kind S(n,k)");
  st->add_option("n", st_n)->required();
  st->add_option("k", st_k)->required();

  SpecOptions chrom_opts;
  std::optional<std::size_t> chrom_vertices;
  std::string chrom_edges;
  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial and (-1)^n P(-1)");
  chrom_opts.attach(chrom, false);
  auto* vopt = chrom->add_option("--vertices", chrom_vertices, "vertex count of an explicit graph");
  chrom->add_option("--edges", chrom_edges, "explicit edge list u-v,u-v,...")->needs(vopt);

  std::string ls_path;
  auto* ls_check = app.add_subcommand("lonesum-check", "test a 0/1 matrix (rows of 0/1 characters) for the lonesum property");
  ls_check->add_option("file", ls_path, "matrix file, '-' or omitted for standard input");

  std::size_t lc_n1 = 0;
  std::size_t lc_n2 = 0;
  bool lc_verify = false;
  auto* ls_count = app.add_subcommand("lonesum-count", "count n1 x n2 lonesum matrices by enumeration");
  ls_count->add_option("n1", lc_n1)->required();
  ls_count->add_option("n2", lc_n2)->required();
  ls_count->add_flag("--verify", lc_verify, "compare with the poly-Bernoulli number");

  std::size_t max_n = kMaxVerifyN;
  auto* verify = app.add_subcommand("verify-all", "run every cross-oracle check");
  verify->add_option("--max-n", max_n, "largest block size to check");

  std::vector<const char*> argv{"acyclic"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(count_opts, count_verify, out, err);
    if (*table) {
      TableRequest req{parse_family(family), IndexRange::parse(n1_range), IndexRange::parse(n2_range),
                       parse_format(format), symmetric_blank};
      out << render_table(req);
      return kExitOk;
    }
    if (*pb) {
      out << poly_bernoulli_neg(pb_n, pb_m) << '\n';
      return kExitOk;
    }
    if (*st) {
      out << stirling2(st_n, st_k) << '\n';
      return kExitOk;
    }
    if (*chrom) {
      Graph g;
      if (chrom_vertices) {
        g = Graph(*chrom_vertices, parse_edge_list(chrom_edges));
      } else {
        if (chrom->count("--n1") == 0 || chrom->count("--n2") == 0) {
          throw DomainError("chromatic needs --n1 and --n2, or --vertices with --edges");
        }
        g = graph_for(chrom_opts.spec());
      }
      out << "P(x) = " << chromatic_polynomial(g).to_string() << '\n';
      out << "acyclic orientations = " << stanley_count(g) << '\n';
      return kExitOk;
    }
    if (*ls_check) return cmd_lonesum_check(ls_path, in, out);
    if (*ls_count) {
      const Nat n = count_lonesum_bruteforce(lc_n1, lc_n2);
      if (!lc_verify) {
        out << n << '\n';
        return kExitOk;
      }
      const Nat expected = poly_bernoulli_neg(lc_n1, lc_n2);
      out << n << (n == expected ? " AGREE" : " DISAGREE") << " (poly-bernoulli " << expected << ")\n";
      return n == expected ? kExitOk : kExitVerifyFailed;
    }
    if (*verify) return cmd_verify_all(max_n, out);
  } catch (const ContractViolation& e) {
    err << "error: internal check failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace acyclic
