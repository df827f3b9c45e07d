// Command-line front end: analyze | verify | enumerate | construct.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "report_format.hpp"
#include "symdist/catalog.hpp"
#include "symdist/errors.hpp"
#include "symdist/family.hpp"
#include "symdist/graph6.hpp"
#include "symdist/iso.hpp"
#include "symdist/metric_dimension.hpp"
#include "symdist/parallel.hpp"
#include "symdist/symmetry.hpp"
#include "symdist/verify.hpp"

namespace {

using namespace symdist;
using nlohmann::ordered_json;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInvalidGraph = 4;

constexpr const char* kExpressionHelp = R"(Family expressions:
  K5, K(5)          complete graph        E5, E(5)      edgeless graph
  K(3,3), K(1,2,2)  complete multipartite P5, C5        path, cycle
  C5' (or H)        5-cycle plus a chord  T4, T(4)      broom tree
  co(X)             complement            3*K2          disjoint copies
  U(X,Y,...)        disjoint union        J(X,Y,...)    join
  B(P4;K1,E2,K1,K1) blow-up, one K<n>/E<n> part per base vertex
Example: J(K1,U(K1,2*K2)) is K_1 + (K_1 u 2K_2).)";

struct InputGraph {
  Graph graph;
  std::string expression;  // empty for graph6 input
};

// Family expression first; graph6 when that fails.
InputGraph parse_input(const std::string& text) {
  try {
    const FamilySpec spec = parse_family_expression(text);
    return {construct_family(spec), to_expression(spec)};
  } catch (const ParseError& expr_error) {
    try {
      return {parse_graph6(text), ""};
    } catch (const ParseError& g6_error) {
      throw ParseError("cannot read \"" + text + "\" as a family expression (" + expr_error.what() +
                       ") or as graph6 (" + g6_error.what() + ")");
    }
  }
}

// "6", "4..6" or "4,5,6".
std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        const auto comma = text.find(',', start);
        out.push_back(std::stoi(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  } catch (const std::exception&) {
    throw ParseError("cannot parse order range \"" + text + "\"");
  }
  if (out.empty()) throw ParseError("empty order range \"" + text + "\"");
  return out;
}

struct Options {
  std::string format;  // empty: subcommand default
  int jobs = 1;
  std::string graph6_file;
};

std::vector<Graph> load_external(const Options& opt) {
  if (opt.graph6_file.empty()) return {};
  return read_graph6_file(opt.graph6_file);
}

int run_analyze(const std::vector<std::string>& inputs, const Options& opt) {
  std::vector<InputGraph> graphs;
  for (const auto& text : inputs) graphs.push_back(parse_input(text));
  for (Graph& g : load_external(opt)) graphs.push_back({std::move(g), ""});
  if (graphs.empty()) throw ParseError("analyze needs a graph6 line, a family expression or --graph6-file");

  ordered_json all = ordered_json::array();
  for (const auto& in : graphs) {
    const ClassificationReport r = classify_graph(in.graph);
    if (opt.format == "json") {
      ordered_json j = cli::to_json(r);
      if (!in.expression.empty()) j["expression"] = in.expression;
      all.push_back(std::move(j));
    } else {
      if (!in.expression.empty()) std::cout << "expression:        " << in.expression << "\n";
      std::cout << cli::to_text(r) << "\n";
    }
  }
  if (opt.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kExitOk;
}

int run_verify(const std::string& subject, const std::optional<std::string>& orders, int max_dim,
               const Options& opt) {
  const std::vector<Graph> external = load_external(opt);
  std::vector<VerifyReport> reports;
  if (subject == "construction") {
    reports.push_back(verify_construction(max_dim, opt.jobs));
  } else {
    const std::vector<int> ns = parse_orders(orders.value_or(subject == "bound" ? "1..6" : "4..6"));
    const bool bound = subject == "bound";
    const std::optional<TheoremId> id = bound ? std::nullopt : std::optional(parse_theorem_id(subject));
    for (int n : ns) {
      if (external.empty() && n > kMaxEnumerationOrder) {
        throw SolverLimit("order " + std::to_string(n) + " needs --graph6-file (internal enumeration stops at " +
                          std::to_string(kMaxEnumerationOrder) + ")");
      }
      const std::vector<Graph> graphs = graphs_of_order(n, bound, external);
      reports.push_back(bound ? verify_bound(graphs, n, opt.jobs) : verify_theorem(*id, n, graphs, opt.jobs));
    }
  }
  bool pass = true;
  ordered_json all = ordered_json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    if (opt.format == "json") {
      all.push_back(cli::to_json(r));
    } else {
      std::cout << cli::to_text(r);
    }
  }
  if (opt.format == "json") {
    std::cout << ordered_json{{"verdict", pass ? "PASS" : "FAIL"}, {"reports", all}}.dump(2) << "\n";
  } else {
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

struct EnumerateFilters {
  std::optional<int> d;
  std::optional<int> dim;
  bool connected = false;
};

int run_enumerate(int n, const EnumerateFilters& f, const Options& opt) {
  const std::vector<Graph> external = load_external(opt);
  if (external.empty() && n > kMaxEnumerationOrder) {
    throw SolverLimit("order " + std::to_string(n) + " needs --graph6-file");
  }
  const std::vector<Graph> graphs = graphs_of_order(n, f.connected, external);
  struct Row {
    int d;
    std::optional<int> dim;
  };
  std::vector<Row> rows(graphs.size());
  parallel_for(graphs.size(), opt.jobs, [&](std::size_t i) {
    rows[i].d = distinguishing_number(graphs[i]);
    if (is_connected(graphs[i])) rows[i].dim = metric_dimension(graphs[i]).dim;
  });
  ordered_json all = ordered_json::array();
  if (opt.format != "json") std::cout << "graph6,n,edges,connected,D,dim\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (f.d && rows[i].d != *f.d) continue;
    if (f.dim && rows[i].dim != f.dim) continue;
    const Graph& g = graphs[i];
    if (opt.format == "json") {
      all.push_back({{"graph6", write_graph6(g)},
                     {"n", g.order()},
                     {"edges", g.edge_count()},
                     {"connected", is_connected(g)},
                     {"D", rows[i].d},
                     {"dim", rows[i].dim ? ordered_json(*rows[i].dim) : ordered_json(nullptr)}});
    } else {
      std::cout << write_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ','
                << (is_connected(g) ? 1 : 0) << ',' << rows[i].d << ','
                << (rows[i].dim ? std::to_string(*rows[i].dim) : std::string()) << "\n";
    }
  }
  if (opt.format == "json") std::cout << all.dump(2) << "\n";
  return kExitOk;
}

int run_construct(const std::optional<std::string>& expression, const std::vector<int>& pair,
                  const Options& opt) {
  Graph g;
  std::string label;
  if (!pair.empty()) {
    if (pair.size() != 2) throw ParseError("--pair expects D,dim");
    g = distinguishing_gap_graph(pair[0], pair[1]);
    label = "gap(D=" + std::to_string(pair[0]) + ",dim=" + std::to_string(pair[1]) + ")";
  } else if (expression) {
    const FamilySpec spec = parse_family_expression(*expression);
    g = construct_family(spec);
    label = to_expression(spec);
  } else {
    throw ParseError("construct needs a family expression or --pair D,dim");
  }
  if (opt.format == "json") {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    std::cout << ordered_json{{"name", label}, {"graph6", write_graph6(g)}, {"order", g.order()}, {"edges", edges}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << write_graph6(g) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metric dimension / distinguishing number toolkit"};
  app.footer(kExpressionHelp);
  app.require_subcommand(1);

  Options opt;
  opt.jobs = default_jobs();
  const auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", opt.format, "Output format (default " + formats.front() + ")")
        ->check(CLI::IsMember(formats));
    sub->add_option("--jobs", opt.jobs, "Worker threads (default: SYMMETRIC_JOBS or hardware)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--graph6-file", opt.graph6_file, "Read graphs from a graph6 file");
  };

  std::vector<std::string> analyze_inputs;
  auto* analyze = app.add_subcommand("analyze", "Invariants, twin structure and list matches of graphs");
  analyze->add_option("input", analyze_inputs, "graph6 line or family expression");
  add_common(analyze, {"json", "text"});

  std::string verify_subject;
  std::optional<std::string> verify_orders;
  int max_dim = 4;
  auto* verify = app.add_subcommand("verify", "Exhaustively check a theorem");
  verify->add_option("subject", verify_subject, "bound | construction | Dn | Dn1 | Dn2 | Dn3")->required();
  verify->add_option("--n", verify_orders, "Order, range (4..6) or list (4,5,6)");
  verify->add_option("--max", max_dim, "construction: largest metric dimension")->check(CLI::Range(2, 8));
  add_common(verify, {"json", "text"});

  int enum_order = 0;
  EnumerateFilters filters;
  auto* enumerate = app.add_subcommand("enumerate", "List one graph per isomorphism class as CSV");
  enumerate->add_option("--n", enum_order, "Order")->required();
  enumerate->add_option("--D", filters.d, "Keep graphs with this distinguishing number");
  enumerate->add_option("--dim", filters.dim, "Keep connected graphs with this metric dimension");
  enumerate->add_flag("--connected", filters.connected, "Connected graphs only");
  add_common(enumerate, {"csv", "json"});

  std::optional<std::string> construct_expr;
  std::vector<int> construct_pair;
  auto* construct = app.add_subcommand("construct", "Build a named graph and print its graph6");
  construct->add_option("expression", construct_expr, "Family expression");
  construct->add_option("--pair", construct_pair, "D,dim for the prescribed-gap construction")->delimiter(',');
  add_common(construct, {"text", "json"});

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      if (opt.format.empty()) opt.format = "json";
      return run_analyze(analyze_inputs, opt);
    }
    if (*verify) {
      if (opt.format.empty()) opt.format = "json";
      return run_verify(verify_subject, verify_orders, max_dim, opt);
    }
    if (*enumerate) {
      if (opt.format.empty()) opt.format = "csv";
      return run_enumerate(enum_order, filters, opt);
    }
    if (*construct) {
      if (opt.format.empty()) opt.format = "text";
      return run_construct(construct_expr, construct_pair, opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SolverLimit& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InvalidGraph& e) {
    std::cerr << "invalid graph: " << e.what() << "\n";
    return kExitInvalidGraph;
  } catch (const NotConnected& e) {
    std::cerr << "invalid graph: " << e.what() << "\n";
    return kExitInvalidGraph;
  }
  return kExitOk;
}
