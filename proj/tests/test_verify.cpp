#include <doctest.h>

#include "ecol/builtins.hpp"
#include "ecol/graph6.hpp"
#include "ecol/report.hpp"
#include "ecol/verify.hpp"
#include "support.hpp"

using namespace ecol;

namespace {

void check_accounting(const VerificationReport& r) {
  CHECK(r.instances_checked >= r.applicable_instances);
  CHECK(r.applicable_instances >= r.violations.size());
  CHECK(r.vacuous() == (r.applicable_instances == 0));
  for (const Witness& w : r.violations) CHECK(replay(w));
}

VerificationReport run(LemmaId id, const Graph& g) {
  VerificationReport r = verify(id, g);
  check_accounting(r);
  return r;
}

}  // namespace

TEST_CASE("lemma ids") {
  CHECK(parse_lemma_id("2.1") == LemmaId::Val);
  CHECK(parse_lemma_id("val") == LemmaId::Val);
  CHECK(parse_lemma_id("2.8") == LemmaId::ShortBranch);
  CHECK(parse_lemma_id("theorem1") == LemmaId::Theorem1);
  CHECK(parse_lemma_id("conjecture") == LemmaId::Conjecture);
  CHECK_FALSE(parse_lemma_id("2.9").has_value());
  for (LemmaId id : all_lemmas()) CHECK(parse_lemma_id(lemma_name(id)) == id);
}

TEST_CASE("VAL") {
  auto c5 = run(LemmaId::Val, cycle_graph(5));
  CHECK(c5.applicable);
  CHECK(c5.instances_checked == 10);
  CHECK(c5.applicable_instances == 10);
  CHECK(c5.violations.empty());
  CHECK_FALSE(run(LemmaId::Val, complete_graph(4)).applicable);
  // K5 is Class 2 but no edge is critical.
  auto k5 = run(LemmaId::Val, complete_graph(5));
  CHECK(k5.applicable);
  CHECK(k5.instances_checked == 20);
  CHECK(k5.vacuous());
  auto ps = run(LemmaId::Val, petersen_minus_vertex());
  CHECK(ps.applicable_instances == 24);
  CHECK(ps.violations.empty());
}

TEST_CASE("multi-fan lemma") {
  auto c5 = run(LemmaId::MultiFan, cycle_graph(5));
  // 5 edges, 2 colorings each, both endpoints.
  CHECK(c5.applicable_instances == 20);
  CHECK(c5.violations.empty());
  CHECK(run(LemmaId::MultiFan, complete_graph(5)).violations.empty());
  CHECK_FALSE(run(LemmaId::MultiFan, complete_graph(4)).applicable);
  auto ps = run(LemmaId::MultiFan, petersen_minus_vertex());
  CHECK_FALSE(ps.vacuous());
  CHECK(ps.violations.empty());

  LemmaContext ctx(cycle_graph(5));
  auto none = verify_multifan_lemma(ctx, SamplingPolicy{0, 0, 0});
  CHECK(none.vacuous());
}

TEST_CASE("Kierstead lemma") {
  auto c5 = run(LemmaId::Kierstead, cycle_graph(5));
  CHECK(c5.violations.empty());
  CHECK_FALSE(c5.vacuous());
  CHECK(run(LemmaId::Kierstead, complete_graph(5)).violations.empty());
  // C3: a path of three edges needs four vertices.
  auto k3 = run(LemmaId::Kierstead, complete_graph(3));
  CHECK(k3.applicable);
  CHECK(k3.vacuous());
}

TEST_CASE("degree dichotomy and xy existence") {
  CHECK(run(LemmaId::DegreeDichotomy, cycle_graph(5)).vacuous());
  CHECK_FALSE(run(LemmaId::DegreeDichotomy, complete_graph(5)).applicable);
  CHECK(run(LemmaId::XyExistence, cycle_graph(5)).note == "overfull");
  CHECK_FALSE(run(LemmaId::XyExistence, complete_graph(5)).applicable);
  // P*: 3 * 2 <= 2 * 3 - 9 + 2 fails, so nothing qualifies.
  CHECK(run(LemmaId::XyExistence, petersen_minus_vertex()).vacuous());
}

TEST_CASE("fork, branch, short-branch") {
  CHECK(run(LemmaId::Fork, cycle_graph(5)).vacuous());
  auto c7 = run(LemmaId::Fork, cycle_graph(7));
  CHECK(c7.applicable);
  CHECK(c7.vacuous());
  CHECK(c7.violations.empty());
  CHECK(run(LemmaId::Branch, cycle_graph(5)).vacuous());
  CHECK(run(LemmaId::ShortBranch, complete_graph(3)).vacuous());
  auto ps = run(LemmaId::ShortBranch, petersen_minus_vertex());
  CHECK(ps.violations.empty());
  auto pb = run(LemmaId::Branch, petersen_minus_vertex());
  CHECK(pb.violations.empty());
}

TEST_CASE("theorem1 and conjecture single graphs") {
  CHECK(run(LemmaId::Theorem1, cycle_graph(5)).vacuous());
  CHECK(run(LemmaId::Theorem1, complete_graph(3)).vacuous());
  CHECK_FALSE(run(LemmaId::Theorem1, complete_graph(5)).applicable);
  auto ps = run(LemmaId::Conjecture, petersen_minus_vertex());
  CHECK(ps.violations.empty());
  CHECK(ps.note.find("boundary") != std::string::npos);
  CHECK(run(LemmaId::Conjecture, cycle_graph(5)).violations.empty());
}

TEST_CASE("instance checks on hand-built colorings") {
  Graph tree(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}});
  auto c = PartialColoring::from_edges(tree, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}, {{3, 5}, 1}, {{4, 6}, 1}});
  auto br = check_branch_instance(c);
  CHECK(br.applicable);
  CHECK_FALSE(br.violation.has_value());

  Graph shrt(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  auto s = PartialColoring::from_edges(shrt, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}});
  auto sb = check_short_branch_instance(s);
  CHECK(sb.applicable);
  // Both x and y have degree 1 < Δ = 3 here: the tree is not critical, so the
  // check flags it.
  REQUIRE(sb.violation.has_value());
  CHECK(sb.violation->structure == "short-branch a=0 b=1 u=2 x=3 y=4 bu=1 ux=2 uy=3");
}

TEST_CASE("synthetic violations replay from their witnesses") {
  // C4 is Class 1; with 01 uncolored and 2 colors both ends miss 2.
  Graph c4 = cycle_graph(4);
  auto col = PartialColoring::from_edges(c4, 2, {{{1, 2}, 1}, {{2, 3}, 2}, {{0, 3}, 1}});
  auto mf = check_multifan_instance(col, 0);
  REQUIRE(mf.violation.has_value());
  Witness w{"multifan", encode_graph6(c4), std::pair{0, 1}, 2, dump_coloring(col), mf.violation->structure,
            mf.violation->condition};
  CHECK(replay(w));
  // Round trip through the record form.
  CHECK(replay(witness_from_record(witness_record(w))));
  Witness tampered = w;
  tampered.condition = "something else";
  CHECK_FALSE(replay(tampered));

  Graph p3 = path_graph(3);
  auto val = check_val_instance(p3, 1, 0);
  REQUIRE(val.violation.has_value());
  CHECK(replay({"val", encode_graph6(p3), std::pair{1, 0}, 0, "", val.violation->structure, val.violation->condition}));
  CHECK_FALSE(check_val_instance(cycle_graph(5), 0, 1).violation.has_value());

  Graph star = star_graph(4);
  auto th = check_theorem1_instance(star);
  CHECK(th.applicable);
  REQUIRE(th.violation.has_value());
  CHECK(replay({"theorem1", encode_graph6(star), std::nullopt, 0, "", th.violation->structure, th.violation->condition}));

  auto cj = check_conjecture_instance(cycle_graph(4));
  REQUIRE(cj.violation.has_value());
  CHECK(replay({"conjecture", encode_graph6(cycle_graph(4)), std::nullopt, 0, "", cj.violation->structure,
                cj.violation->condition}));

  CHECK_THROWS(replay({"nope", "Bw", std::nullopt, 0, "", "", ""}));
}

TEST_CASE("reports are deterministic per seed") {
  Graph ps = petersen_minus_vertex();
  SamplingPolicy small{10, 5, 77};
  auto a = report_record(verify(LemmaId::MultiFan, ps, small)).dump();
  auto b = report_record(verify(LemmaId::MultiFan, ps, small)).dump();
  CHECK(a == b);
  CHECK(a.find("elapsed") == std::string::npos);
}

TEST_CASE("corpus scan order and summaries do not depend on worker count") {
  auto records = testing::corpus_records(6);
  records.insert(records.begin() + 3, "not graph6 !");
  records.insert(records.begin() + 5, "");
  records.push_back("A?");  // two isolated vertices
  ScanConfig one;
  ScanConfig four;
  four.jobs = 4;
  auto a = verify_corpus(LemmaId::Kierstead, records, one);
  auto b = verify_corpus(LemmaId::Kierstead, records, four);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == records.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].line == b[i].line);
    CHECK(a[i].parse_error == b[i].parse_error);
    REQUIRE(a[i].report.has_value() == b[i].report.has_value());
    if (a[i].report) CHECK(report_record(*a[i].report).dump() == report_record(*b[i].report).dump());
  }
  auto s = summarize(LemmaId::Kierstead, a);
  CHECK(s.parse_failures == 1);
  CHECK(s.skipped_disconnected == 1);
  CHECK(s.violations == 0);
  CHECK(summary_record(s).dump() == summary_record(summarize(LemmaId::Kierstead, b)).dump());
}

TEST_CASE("conjecture scan on small families") {
  std::vector<std::string> pstar{encode_graph6(petersen_minus_vertex())};
  auto s = scan_conjecture(pstar, ScanConfig{});
  CHECK(s.counterexamples == 0);
  CHECK(s.boundary_cases == 1);
  CHECK(s.hypothesis_holds == 0);

  std::vector<std::string> cycles;
  for (int n : {5, 7, 9}) cycles.push_back(encode_graph6(cycle_graph(n)));
  auto c = scan_conjecture(cycles, ScanConfig{});
  CHECK(c.delta_critical == 3);
  CHECK(c.hypothesis_holds == 1);
  CHECK(c.counterexamples == 0);
  CHECK(c.niessen_checked == 1);
  CHECK(c.niessen_exceptions == 0);
}
