#include "ecol/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ecol/builtins.hpp"
#include "ecol/graph6.hpp"
#include "ecol/report.hpp"
#include "ecol/solver.hpp"
#include "ecol/structures.hpp"
#include "ecol/verify.hpp"

namespace ecol::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> load_records(const std::string& input, std::istream& in) {
  if (input == "-") return read_lines(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input);
    if (!file) throw UsageError("cannot open " + input);
    return read_lines(file);
  }
  if (auto g = named_graph(input)) return {encode_graph6(*g)};
  throw UsageError("no such file or built-in graph: " + input);
}

struct Parsed {
  std::size_t line;
  std::string g6;
  Graph graph;
};

std::vector<Parsed> parse_all(const std::vector<std::string>& records) {
  std::vector<Parsed> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string& r = records[i];
    if (r.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      Graph g = parse_graph6(r);
      out.push_back({i + 1, encode_graph6(g), std::move(g)});
    } catch (const ParseError& ex) {
      throw UsageError("line " + std::to_string(i + 1) + ": " + ex.what());
    }
  }
  return out;
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}
  bool records() const { return cfg_.format == OutputFormat::Records; }
  void record(const Record& r) { out_ << r.dump() << '\n'; }
  void text(const std::string& s) { out_ << s; }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::string join_set(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

Record coloring_record(const PartialColoring& c) {
  Record arr = Record::array();
  const Graph& g = c.host();
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    arr.push_back({e.u, e.v, c.color(static_cast<EdgeId>(id))});
  }
  return arr;
}

Edge pick_edge(const RunConfig& cfg, const Graph& g) {
  if (g.size() == 0) throw UsageError("graph has no edges");
  if (!cfg.edge) return g.edge(0);
  auto [u, v] = *cfg.edge;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw UsageError("--edge " + std::to_string(u) + "," + std::to_string(v) + " is not an edge");
  return make_edge(u, v);
}

void run_structure(const RunConfig& cfg, const Parsed& p, Emitter& em) {
  const Graph& g = p.graph;
  const Edge e = pick_edge(cfg, g);
  ColoringSample s = enumerate_colorings(g, e, g.max_degree(), 1, cfg.seed);
  std::vector<std::string> items;
  if (!s.colorings.empty()) {
    const PartialColoring& c = s.colorings.front();
    if (cfg.command == "fan") {
      for (Vertex x : {e.u, e.v}) items.push_back(format_multifan(c, maximal_multifan(c, x)));
    } else if (cfg.command == "kpaths") {
      for (const KiersteadPath& k : find_kierstead_paths(c, cfg.max_path_edges)) items.push_back(format_kierstead(c, k));
    } else if (cfg.command == "forks") {
      for (const ForkConfig& f : find_forks(c)) items.push_back(format_fork(f));
    } else {
      for (bool shrt : {false, true})
        for (const BranchConfig& b : find_branches(c, shrt)) items.push_back(format_branch(b));
    }
  }
  if (em.records()) {
    Record r;
    r["graph"] = p.g6;
    r["edge"] = {e.u, e.v};
    r["k"] = g.max_degree();
    r["coloring"] = s.colorings.empty() ? Record(nullptr) : coloring_record(s.colorings.front());
    r["structures"] = items;
    em.record(r);
    return;
  }
  if (s.colorings.empty()) {
    em.text(p.g6 + " edge=" + to_string(e) + " no Δ-coloring of G - e\n");
    return;
  }
  em.text(p.g6 + " edge=" + to_string(e) + " k=" + std::to_string(g.max_degree()) + "\n");
  em.text(dump_coloring(s.colorings.front()));
  for (const std::string& it : items) em.text(it + "\n");
}

void run_graph_command(const RunConfig& cfg, const Parsed& p, Emitter& em) {
  const Graph& g = p.graph;
  const std::string& cmd = cfg.command;
  Record r;
  r["graph"] = p.g6;
  std::string text;
  if (cmd == "chi") {
    int chi = chromatic_index(g);
    r["chi"] = chi;
    text = std::to_string(chi);
  } else if (cmd == "classify") {
    if (g.size() == 0) {
      r["class"] = nullptr;
      text = "edgeless";
    } else {
      text = to_string(classify(g));
      r["class"] = text;
    }
  } else if (cmd == "critical") {
    auto dc = is_delta_critical(g);
    r["delta_critical"] = dc ? Record(*dc) : Record(nullptr);
    text = dc ? (*dc ? "true" : "false") : "n/a";
  } else if (cmd == "overfull") {
    bool of = is_overfull(g);
    r["overfull"] = of;
    r["deficiency"] = deficiency(g);
    text = of ? "true" : "false";
  } else if (cmd == "subgraphs") {
    std::vector<std::vector<Vertex>> subs;
    try {
      subs = find_overfull_subgraphs(g, cfg.cap);
    } catch (const SearchRefused& ex) {
      throw UsageError(ex.what());
    }
    r["subgraphs"] = subs;
    for (const auto& s : subs) text += (text.empty() ? "" : " ") + join_set(s);
    if (subs.empty()) text = "none";
  } else if (cmd == "color") {
    ColoringCertificate cert = vizing_color(g);
    if (em.records()) {
      r["colors_used"] = cert.colors_used;
      r["coloring"] = coloring_record(cert.coloring);
    } else {
      em.text("colors " + std::to_string(cert.colors_used) + "\n" + dump_coloring(cert.coloring));
      return;
    }
  }
  if (em.records())
    em.record(r);
  else
    em.text(text + "\n");
}

std::vector<LemmaId> targets(const std::string& t) {
  if (t == "all") return all_lemmas();
  if (auto id = parse_lemma_id(t)) return {*id};
  throw UsageError("unknown verify target '" + t + "'");
}

int run_verify(const RunConfig& cfg, const std::vector<std::string>& records, Emitter& em) {
  ScanConfig sc;
  sc.sampling = SamplingPolicy{cfg.exhaustive_limit, cfg.budget, cfg.seed};
  sc.subgraph_cap = cfg.cap;
  sc.jobs = cfg.jobs;
  std::size_t violations = 0;
  std::size_t parse_failures = 0;
  for (LemmaId id : targets(cfg.target)) {
    auto entries = verify_corpus(id, records, sc);
    for (const CorpusEntry& e : entries) {
      if (!e.parse_error.empty()) {
        if (em.records()) {
          Record r;
          r["type"] = "parse_error";
          r["line"] = e.line;
          r["error"] = e.parse_error;
          em.record(r);
        } else {
          em.text("parse-error line=" + std::to_string(e.line) + " " + e.parse_error + "\n");
        }
        continue;
      }
      if (!e.report) continue;
      if (em.records())
        em.record(report_record(*e.report, cfg.timing));
      else
        em.text(format_report(*e.report, cfg.timing));
    }
    CorpusSummary sum = summarize(id, entries);
    violations += sum.violations;
    parse_failures += sum.parse_failures;
    if (id == LemmaId::Conjecture) {
      ConjectureScan scan = scan_conjecture(records, sc);
      if (em.records())
        em.record(conjecture_record(scan));
      else
        em.text(format_conjecture(scan));
    } else if (em.records()) {
      em.record(summary_record(sum));
    } else {
      em.text(format_summary(sum));
    }
  }
  if (violations > 0) return kExitViolations;
  return parse_failures > 0 ? kExitUsage : kExitOk;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"chi",  "classify", "critical", "overfull", "subgraphs", "color",
                                              "fan",  "kpaths",   "forks",    "branches", "verify"};
  return names;
}

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) {
    err << "ecol: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  }
  try {
    if (cfg.command == "verify") targets(cfg.target);
    std::vector<std::string> records = load_records(cfg.input, in);
    Emitter em(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, records, em);
    std::vector<Parsed> graphs = parse_all(records);
    const bool structure = cfg.command == "fan" || cfg.command == "kpaths" || cfg.command == "forks" ||
                           cfg.command == "branches";
    for (const Parsed& p : graphs) {
      if (structure)
        run_structure(cfg, p, em);
      else
        run_graph_command(cfg, p, em);
    }
    return kExitOk;
  } catch (const std::exception& ex) {
    out.flush();
    err << "ecol: " << ex.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-coloring toolkit and lemma checker for small graphs", "ecol"};
  RunConfig cfg;
  std::vector<std::string> positional;
  std::string format = "text";
  std::string edge;

  app.add_option("command", cfg.command, "chi classify critical overfull subgraphs color fan kpaths forks branches verify")
      ->required();
  app.add_option("args", positional, "[verify target] [input: file, built-in key or -]");
  app.add_option("--seed", cfg.seed, "coloring sampler seed");
  app.add_option("--budget", cfg.budget, "colorings sampled per edge when not exhaustive");
  app.add_option("--exhaustive", cfg.exhaustive_limit, "enumerate all colorings up to this many");
  app.add_option("--cap", cfg.cap, "largest order for the overfull-subgraph search")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--edge", edge, "edge u,v for structure commands");
  app.add_option("--max-edges", cfg.max_path_edges, "longest Kierstead path for kpaths");
  app.add_flag("--timing", cfg.timing, "include elapsed times in verify reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "ecol: " << ex.what() << '\n';
    return kExitUsage;
  }

  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) {
    err << "ecol: unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  }
  std::size_t at = 0;
  if (cfg.command == "verify") {
    if (positional.empty()) {
      err << "ecol: verify needs a target\n";
      return kExitUsage;
    }
    cfg.target = positional[at++];
  }
  if (at < positional.size()) cfg.input = positional[at++];
  if (at < positional.size()) {
    err << "ecol: unexpected argument '" << positional[at] << "'\n";
    return kExitUsage;
  }
  cfg.format = format == "records" ? OutputFormat::Records : OutputFormat::Text;
  if (!edge.empty()) {
    int u = 0, v = 0;
    char comma = 0;
    std::istringstream es(edge);
    if (!(es >> u >> comma >> v) || comma != ',' || !es.eof()) {
      err << "ecol: --edge expects u,v\n";
      return kExitUsage;
    }
    cfg.edge = std::pair{u, v};
  }
  return run(cfg, in, out, err);
}

}  // namespace ecol::cli
