// prismctl: command-line front end for the odd-prism extremal toolkit.
//
// Every report is a JSON object {"header": {...}, "result": ...} unless a
// graph6 or CSV format is requested. Exit status: 0 success, 1 verification
// failure, 2 usage or input error, 3 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oddprism/canonical.hpp"
#include "oddprism/graph.hpp"
#include "oddprism/patterns.hpp"
#include "oddprism/report.hpp"
#include "oddprism/search.hpp"
#include "oddprism/spectral.hpp"
#include "oddprism/turan.hpp"
#include "oddprism/words.hpp"

namespace {

using namespace oddprism;

constexpr const char* kToolVersion = "0.1.0";

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;
  std::string n;
  std::size_t k = 1;
  double tol = kDefaultTolerance;
  unsigned threads = 1;
  std::string format = "json";
  std::string graph6;
  std::string in;
  std::string out;
  bool seedless = false;
  // construct / spex
  std::optional<std::size_t> prism, complete, cycle, path, candidate;
  std::vector<std::size_t> bipartite, turan, ex_construction;
  // lemma24
  bool least_rotations = false;
  // ingest
  std::string mode = "edges";
  // checkfree
  bool generic = false;
  std::vector<std::string> argv;
};

std::size_t parse_count(const std::string& flag, const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a nonnegative integer, got '" + text + "'");
  }
  if (pos != text.size() || (!text.empty() && text.front() == '-'))
    throw UsageError(flag + ": expected a nonnegative integer, got '" + text + "'");
  return static_cast<std::size_t>(v);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_count("--n", text);
    return {n, n};
  }
  return {parse_count("--n", text.substr(0, dots)), parse_count("--n", text.substr(dots + 2))};
}

std::size_t require_n(const RunConfig& c) {
  if (c.n.empty()) throw UsageError("--n is required for " + c.subcommand);
  return parse_count("--n", c.n);
}

Json header(const RunConfig& c) {
  Json h;
  h["tool"] = "prismctl";
  h["version"] = kToolVersion;
  h["argv"] = c.argv;
  return h;
}

std::string wrap(const RunConfig& c, Json result) {
  Json doc;
  doc["header"] = header(c);
  doc["result"] = std::move(result);
  return doc.dump(2) + "\n";
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("--in: cannot open '" + path + "'");
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with(">>graph6<<")) continue;
    lines.push_back(line);
  }
  return lines;
}

Graph decode_or_usage(const std::string& text) {
  try {
    return graph6_decode(text);
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("--graph6: ") + e.what());
  }
}

std::optional<Graph> named_construction(const RunConfig& c) {
  std::vector<Graph> picked;
  if (c.prism) picked.push_back(odd_prism(*c.prism));
  if (c.complete) picked.push_back(make_complete(*c.complete));
  if (c.cycle) picked.push_back(make_cycle(*c.cycle));
  if (c.path) picked.push_back(make_path(*c.path));
  if (c.candidate) picked.push_back(spex_candidate(*c.candidate));
  if (!c.bipartite.empty()) {
    if (c.bipartite.size() != 2) throw UsageError("--bipartite takes S T");
    picked.push_back(make_complete_bipartite(c.bipartite[0], c.bipartite[1]));
  }
  if (!c.turan.empty()) {
    if (c.turan.size() != 2) throw UsageError("--turan takes N R");
    picked.push_back(make_turan(c.turan[0], c.turan[1]));
  }
  if (!c.ex_construction.empty()) {
    if (c.ex_construction.size() > 2) throw UsageError("--ex-construction takes N [NA]");
    const std::size_t n = c.ex_construction[0];
    const std::size_t na = c.ex_construction.size() == 2 ? c.ex_construction[1] : ex_formula(n).n_a;
    picked.push_back(ex_extremal_construction(n, na));
  }
  if (picked.size() > 1) throw UsageError("choose exactly one construction");
  if (picked.empty()) return std::nullopt;
  return picked.front();
}

// Graph inputs in order: --graph6, then --in lines, then a named construction.
std::vector<std::pair<std::string, Graph>> input_graphs(const RunConfig& c) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!c.graph6.empty()) out.emplace_back(c.graph6, decode_or_usage(c.graph6));
  if (!c.in.empty()) {
    std::size_t line_no = 0;
    for (const auto& line : read_lines(c.in)) {
      ++line_no;
      try {
        out.emplace_back(line, graph6_decode(line));
      } catch (const Graph6Error& e) {
        throw UsageError("--in record " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (auto g = named_construction(c)) out.emplace_back(graph6_encode(*g), *g);
  if (out.empty()) throw UsageError(c.subcommand + ": no input graph (use --graph6, --in or a construction flag)");
  return out;
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.threads = c.threads;
  o.deterministic = c.seedless;
  if (c.subcommand == "brutespex" || c.subcommand == "ingest" || c.subcommand == "verify")
    o.tolerance = c.tol == kDefaultTolerance ? kSearchTolerance : c.tol;
  return o;
}

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("--format " + c.format + " is not available for " + c.subcommand);
}

struct Outcome {
  std::string text;
  int code = kOk;
};

Outcome dispatch(const RunConfig& c) {
  const std::string& cmd = c.subcommand;
  if (cmd == "construct") {
    check_format(c, {"graph6", "json"});
    auto g = named_construction(c);
    if (!g) throw UsageError("construct: choose a construction flag");
    if (c.format == "json") {
      Json r;
      r["graph6"] = graph6_encode(*g);
      r["order"] = g->order();
      r["edges"] = g->edge_count();
      return {wrap(c, r)};
    }
    return {graph6_encode(*g) + "\n"};
  }
  if (cmd == "spex") {
    check_format(c, {"json"});
    Json results = Json::array();
    for (const auto& [g6, g] : input_graphs(c)) {
      Json r = to_json(spectral_radius(g, c.tol));
      r["graph6"] = g6;
      r["order"] = g.order();
      results.push_back(std::move(r));
    }
    return {wrap(c, results.size() == 1 ? results.front() : results)};
  }
  if (cmd == "exformula") {
    check_format(c, {"json"});
    const auto n = require_n(c);
    const auto ex = ex_formula(n);
    return {wrap(c, to_json(n, ex, ex_extremal_construction(n, ex.n_a)))};
  }
  if (cmd == "candidate") {
    check_format(c, {"json"});
    const auto n = require_n(c);
    const Graph g = spex_candidate(n);
    const auto closed = spex_closed_form(n);
    Json r = to_json(closed);
    r["graph6"] = graph6_encode(g);
    r["iterative_radius"] = spectral_radius(g, c.tol).radius;
    r["dense_radius"] = dense_spectral_radius(g);
    r["dense_sides_with"] = std::abs(r["dense_radius"].get<double>() - closed.value) <=
                                    std::abs(r["dense_radius"].get<double>() - closed.as_printed_value)
                                ? "quotient determinant"
                                : "as printed";
    r["factorisation"] = to_json(apex_factorisation_report(closed.n1, closed.n2));
    r["rayleigh_lower_bound"] = rayleigh_lower_bound(g);
    return {wrap(c, r)};
  }
  if (cmd == "checkfree") {
    check_format(c, {"json"});
    Json results = Json::array();
    bool all_free = true;
    for (const auto& [g6, g] : input_graphs(c)) {
      std::optional<Embedding> witness =
          c.generic ? contains_subgraph(g, odd_prism(c.k)) : find_odd_prism(g, c.k).embedding;
      Json r;
      r["graph6"] = g6;
      r["k"] = c.k;
      r["free"] = !witness.has_value();
      r["witness"] = witness ? to_json(*witness) : Json(nullptr);
      all_free = all_free && !witness;
      results.push_back(std::move(r));
    }
    (void)all_free;
    return {wrap(c, results.size() == 1 ? results.front() : results)};
  }
  if (cmd == "lemma24") {
    check_format(c, {"json"});
    auto report = verify_word_lemma(c.k, {c.least_rotations, c.threads});
    if (c.seedless) report.elapsed_ms = 0.0;
    return {wrap(c, to_json(report)), report.misses == 0 ? kOk : kVerificationFailed};
  }
  if (cmd == "corollary25") {
    check_format(c, {"json"});
    auto report = verify_colouring_corollary(c.k, c.threads);
    if (c.seedless) report.elapsed_ms = 0.0;
    return {wrap(c, to_json(report)), report.verified() ? kOk : kVerificationFailed};
  }
  if (cmd == "bruteex" || cmd == "brutespex") {
    check_format(c, {"json", "graph6"});
    const auto n = require_n(c);
    const auto cert = cmd == "bruteex" ? brute_force_ex(n, c.k, search_options(c))
                                       : brute_force_spex(n, c.k, search_options(c));
    if (c.format == "graph6") {
      std::string text;
      for (const auto& w : cert.witnesses) text += w.graph6 + "\n";
      return {text};
    }
    return {wrap(c, to_json(cert))};
  }
  if (cmd == "ingest") {
    check_format(c, {"json"});
    if (c.in.empty()) throw UsageError("ingest: --in FILE (or -) is required");
    Objective mode;
    if (c.mode == "edges")
      mode = Objective::kEdges;
    else if (c.mode == "spectral")
      mode = Objective::kSpectral;
    else
      throw UsageError("--mode must be edges or spectral");
    std::ifstream file;
    std::istream* in = &std::cin;
    if (c.in != "-") {
      file.open(c.in);
      if (!file) throw UsageError("--in: cannot open '" + c.in + "'");
      in = &file;
    }
    try {
      return {wrap(c, to_json(ingest_graph6_stream(*in, c.k, mode, search_options(c))))};
    } catch (const StreamError& e) {
      throw UsageError(std::string("ingest: ") + e.what());
    }
  }
  if (cmd == "verify") {
    check_format(c, {"json", "csv"});
    if (c.n.empty()) throw UsageError("--n LO..HI is required for verify");
    const auto [lo, hi] = parse_range(c.n);
    const auto report = verify_theorems(lo, hi, c.k, search_options(c));
    if (c.format == "csv") {
      std::string argv;
      for (const auto& a : c.argv) argv += (argv.empty() ? "" : " ") + a;
      return {"# prismctl " + std::string(kToolVersion) + ": " + argv + "\n" + to_csv(report)};
    }
    return {wrap(c, to_json(report))};
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  for (int i = 0; i < argc; ++i) cfg.argv.emplace_back(argv[i]);

  CLI::App app{"Odd-prism extremal toolkit: constructions, spectra, lemma checks and brute-force searches"};
  app.require_subcommand(1, 1);
  app.add_option("--format", cfg.format, "Output format: json, csv or graph6")->check(CLI::IsMember({"json", "csv", "graph6"}));
  app.add_option("--out", cfg.out, "Write the report to FILE instead of standard output");
  app.add_option("--threads", cfg.threads, "Worker threads for exhaustive runs")->check(CLI::Range(1U, 256U));
  app.add_flag("--seedless", cfg.seedless, "Deterministic reports: scheduling-independent pruning, zeroed timings");
  app.fallthrough();

  auto add_graph_inputs = [&](CLI::App* sub) {
    sub->add_option("--graph6", cfg.graph6, "Input graph as a graph6 string");
    sub->add_option("--in", cfg.in, "File with one graph6 per line ('-' for stdin)");
  };
  auto add_constructions = [&](CLI::App* sub) {
    sub->add_option("--prism", cfg.prism, "Odd prism C_{2k+1} x K_2 with this k");
    sub->add_option("--complete", cfg.complete, "Complete graph K_N");
    sub->add_option("--cycle", cfg.cycle, "Cycle C_N");
    sub->add_option("--path", cfg.path, "Path P_N");
    sub->add_option("--candidate", cfg.candidate, "K_1 joined with T(N-1,2)");
    sub->add_option("--bipartite", cfg.bipartite, "Complete bipartite K_{S,T}")->expected(2);
    sub->add_option("--turan", cfg.turan, "Turan graph T(N,R)")->expected(2);
    sub->add_option("--ex-construction", cfg.ex_construction, "K_{NA,N-NA} plus P4-extremal overlay")->expected(1, 2);
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "Prism parameter k (>= 1)")->check(CLI::PositiveNumber); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Number of vertices"); };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", cfg.tol, "Convergence tolerance")->check(CLI::PositiveNumber); };

  auto* construct = app.add_subcommand("construct", "Emit a named construction as graph6");
  add_constructions(construct);
  auto* spex = app.add_subcommand("spex", "Spectral radius and Perron vector of a graph");
  add_graph_inputs(spex);
  add_constructions(spex);
  add_tol(spex);
  auto* exformula = app.add_subcommand("exformula", "Evaluate the edge Turan closed form");
  add_n(exformula);
  auto* candidate = app.add_subcommand("candidate", "K_1 v T(n-1,2): closed form, dense check and factorisation gap");
  add_n(candidate);
  add_tol(candidate);
  auto* checkfree = app.add_subcommand("checkfree", "Test a graph for an odd prism subgraph");
  add_graph_inputs(checkfree);
  add_constructions(checkfree);
  add_k(checkfree);
  checkfree->add_flag("--generic", cfg.generic, "Use the generic subgraph matcher instead of the prism search");
  auto* lemma = app.add_subcommand("lemma24", "Exhaustively check the unavoidable factor set on odd cyclic words");
  add_k(lemma);
  lemma->add_flag("--least-rotations", cfg.least_rotations, "Only check least rotations");
  auto* corollary = app.add_subcommand("corollary25", "Exhaustively check all two-colourings of the odd prism");
  add_k(corollary);
  auto* bruteex = app.add_subcommand("bruteex", "Exact ex(n, prism) by exhaustive search");
  add_n(bruteex);
  add_k(bruteex);
  auto* brutespex = app.add_subcommand("brutespex", "Exact spex(n, prism) by exhaustive search");
  add_n(brutespex);
  add_k(brutespex);
  add_tol(brutespex);
  auto* ingest = app.add_subcommand("ingest", "Extremal certificate from a graph6 stream");
  ingest->add_option("--in", cfg.in, "File with one graph6 per line ('-' for stdin)");
  ingest->add_option("--mode", cfg.mode, "edges or spectral");
  add_k(ingest);
  add_tol(ingest);
  auto* verify = app.add_subcommand("verify", "Brute-force optima against both closed forms over a range of n");
  verify->add_option("--n", cfg.n, "Range LO..HI");
  add_k(verify);
  add_tol(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    outcome = dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "prismctl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "prismctl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "prismctl: internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (cfg.out.empty()) {
    std::cout << outcome.text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      std::cerr << "prismctl: --out: cannot open '" << cfg.out << "'\n";
      return kUsage;
    }
    file << outcome.text;
  }
  return outcome.code;
}
