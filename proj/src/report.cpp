#include "ecol/report.hpp"

#include <sstream>
#include <stdexcept>

namespace ecol {

namespace {

std::string quoted(const std::string& s) { return Record(s).dump(); }

double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

}  // namespace

Record witness_record(const Witness& w) {
  Record r;
  r["lemma"] = w.lemma;
  r["graph"] = w.graph;
  if (w.edge)
    r["edge"] = {w.edge->first, w.edge->second};
  else
    r["edge"] = nullptr;
  r["k"] = w.k;
  r["coloring"] = w.coloring;
  r["structure"] = w.structure;
  r["condition"] = w.condition;
  return r;
}

Witness witness_from_record(const Record& r) {
  try {
    Witness w;
    w.lemma = r.at("lemma").get<std::string>();
    w.graph = r.at("graph").get<std::string>();
    const auto& e = r.at("edge");
    if (!e.is_null()) w.edge = std::pair{e.at(0).get<Vertex>(), e.at(1).get<Vertex>()};
    w.k = r.at("k").get<int>();
    w.coloring = r.at("coloring").get<std::string>();
    w.structure = r.at("structure").get<std::string>();
    w.condition = r.at("condition").get<std::string>();
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad witness record: ") + ex.what());
  }
}

Record report_record(const VerificationReport& rep, bool timing) {
  Record r;
  r["type"] = "report";
  r["lemma"] = rep.lemma;
  r["graph"] = rep.graph;
  r["applicable"] = rep.applicable;
  r["note"] = rep.note;
  r["instances_checked"] = rep.instances_checked;
  r["applicable_instances"] = rep.applicable_instances;
  r["vacuous"] = rep.vacuous();
  r["violations"] = Record::array();
  for (const Witness& w : rep.violations) r["violations"].push_back(witness_record(w));
  if (timing) r["elapsed_ms"] = millis(rep.elapsed);
  return r;
}

Record summary_record(const CorpusSummary& s) {
  Record r;
  r["type"] = "summary";
  r["lemma"] = s.lemma;
  r["graphs"] = s.graphs;
  r["parse_failures"] = s.parse_failures;
  r["skipped_disconnected"] = s.skipped_disconnected;
  r["not_applicable"] = s.not_applicable;
  r["vacuous_graphs"] = s.vacuous_graphs;
  r["instances_checked"] = s.instances_checked;
  r["applicable_instances"] = s.applicable_instances;
  r["violations"] = s.violations;
  return r;
}

Record conjecture_record(const ConjectureScan& s) {
  Record r = summary_record(s.summary);
  r["delta_critical"] = s.delta_critical;
  r["hypothesis_holds"] = s.hypothesis_holds;
  r["counterexamples"] = s.counterexamples;
  r["boundary_cases"] = s.boundary_cases;
  r["boundary_graphs"] = s.boundary_graphs;
  r["niessen_checked"] = s.niessen_checked;
  r["niessen_exceptions"] = s.niessen_exceptions;
  r["niessen_refused"] = s.niessen_refused;
  return r;
}

std::string format_report(const VerificationReport& r, bool timing) {
  std::ostringstream out;
  out << r.lemma << ' ' << r.graph;
  if (!r.applicable) {
    out << " not-applicable";
  } else {
    out << " instances=" << r.instances_checked << " applicable=" << r.applicable_instances
        << " violations=" << r.violations.size() << (r.vacuous() ? " vacuous" : "");
  }
  if (!r.note.empty()) out << " note=" << quoted(r.note);
  if (timing) out << " elapsed_ms=" << millis(r.elapsed);
  out << '\n';
  for (const Witness& w : r.violations) {
    out << "  violation";
    if (w.edge) out << " edge=" << w.edge->first << ',' << w.edge->second;
    out << " structure=" << quoted(w.structure) << " condition=" << quoted(w.condition) << '\n';
  }
  return out.str();
}

std::string format_summary(const CorpusSummary& s) {
  std::ostringstream out;
  out << "summary " << s.lemma << " graphs=" << s.graphs << " parse_failures=" << s.parse_failures
      << " skipped_disconnected=" << s.skipped_disconnected << " not_applicable=" << s.not_applicable
      << " vacuous_graphs=" << s.vacuous_graphs << " instances=" << s.instances_checked
      << " applicable=" << s.applicable_instances << " violations=" << s.violations << '\n';
  return out.str();
}

std::string format_conjecture(const ConjectureScan& s) {
  std::ostringstream out;
  out << format_summary(s.summary);
  out << "conjecture delta_critical=" << s.delta_critical << " hypothesis_holds=" << s.hypothesis_holds
      << " counterexamples=" << s.counterexamples << " boundary_cases=" << s.boundary_cases << '\n';
  for (const std::string& g : s.boundary_graphs) out << "  boundary " << g << '\n';
  out << "niessen checked=" << s.niessen_checked << " exceptions=" << s.niessen_exceptions
      << " refused=" << s.niessen_refused << '\n';
  return out.str();
}

}  // namespace ecol
