#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "matdec/decomposer.hpp"
#include "oracle.hpp"

using namespace matdec;

namespace {

DecompositionProblem problem(const std::string& key, const MinorClass& cls) {
  const CatalogEntry& e = catalog_entry(key);
  return {e.matroid, *e.side, 3, cls, {}};
}

std::set<std::string> failing_keys(const CheckReport& r) {
  std::set<std::string> out;
  for (const auto* list : {&r.condition_i, &r.condition_ii, &r.condition_iii})
    for (const auto& v : *list)
      if (v.outcome == Outcome::Fail) out.insert(v.key);
  return out;
}

}  // namespace

TEST_CASE("hypotheses on R12") {
  const auto h = check_hypotheses(problem("R12", regular_class()));
  CHECK(h.size() == 6);
  for (const auto& v : h) CHECK(v.passed());
}

TEST_CASE("a side that is not a union of circuits is a hypothesis failure") {
  DecompositionProblem p = problem("R12", regular_class());
  p.a = make_subset({1, 2, 3, 4, 5, 6});
  const auto [verdict, report] = certify(p);
  CHECK(verdict.kind == Verdict::Kind::HypothesisFailure);
  CHECK(!verdict.reasons.empty());
  p.a = make_subset({1, 99});
  CHECK_THROWS_AS(certify(p), Error);
}

TEST_CASE("conditions (i) and (ii) for R12") {
  const DecompositionProblem p = problem("R12", regular_class());
  Counts c;
  const auto i = check_condition_i(p, {}, &c);
  CHECK(i.size() == 51);
  CHECK(c.checked == 4);
  CHECK(c.excluded == 47);
  CHECK(std::all_of(i.begin(), i.end(), [](const ConditionVerdict& v) { return v.passed(); }));
  const auto ii = check_condition_ii(p);
  CHECK(std::count_if(ii.begin(), ii.end(), [](const ConditionVerdict& v) { return v.outcome == Outcome::Pass; }) == 4);
}

TEST_CASE("X is not certified for all binary matroids") {
  const auto [verdict, report] = certify(problem("X", all_binary_class()));
  CHECK(verdict.kind == Verdict::Kind::NotCertified);
  CHECK(!verdict.witnesses.empty());
  const BinaryMatroid& z = builtin("Z");
  const bool z_witness = std::any_of(verdict.witnesses.begin(), verdict.witnesses.end(), [&](const ConditionVerdict& v) {
    return v.candidate && v.condition == Condition::IIId && are_isomorphic(v.candidate->result, z);
  });
  CHECK(z_witness);
}

TEST_CASE("serial and parallel certification produce identical reports") {
  std::mt19937_64 rng(62);
  std::vector<DecompositionProblem> problems = {problem("X", all_binary_class())};
  for (int t = 0; t < 3; ++t) {
    const oracle::Instance inst = oracle::random_instance(rng, 8, 10, true);
    problems.push_back({inst.n, inst.n.subset_of(inst.a), 3, all_binary_class(), {}});
  }
  for (auto& p : problems) {
    p.options.cross_validate = true;
    p.options.emit_tables = true;
    const auto [vs, rs] = certify(p, Execution::serial());
    const auto [vp, rp] = certify(p, Execution::parallel(4));
    CHECK(render_report(rs, ReportFormat::Markdown) == render_report(rp, ReportFormat::Markdown));
    CHECK(render_report(rs, ReportFormat::Json) == render_report(rp, ReportFormat::Json));
  }
}

TEST_CASE("R12 is certified; the all-matching-cases reading is stricter") {
  DecompositionProblem p = problem("R12", regular_class());
  const auto [verdict, report] = certify(p);
  CHECK(verdict.certified());
  CHECK(report.counts_iii.pruned > 0);

  p.options.all_matching_cases = true;
  const auto [strict, strict_report] = certify(p);
  CHECK(strict.kind == Verdict::Kind::NotCertified);
  std::set<std::string> keys;
  for (const auto& w : strict.witnesses) keys.insert(w.key);
  CHECK(keys.count("iii:v=001100 w=000011 b=0"));
}

TEST_CASE("pruning never changes the verdict or the failing set") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 25; ++t) {
    const oracle::Instance inst = oracle::random_instance(rng, 6, 9, true);
    DecompositionProblem p{inst.n, inst.n.subset_of(inst.a), 3, all_binary_class(), {}};
    const auto [v1, r1] = certify(p);
    p.options.use_pruning = false;
    const auto [v2, r2] = certify(p);
    CHECK(v1.kind == v2.kind);
    CHECK(failing_keys(r1) == failing_keys(r2));
    CHECK(r2.counts_iii.constructed >= r1.counts_iii.constructed);
    CHECK(r2.counts_iii.pruned == 0);
  }
}

TEST_CASE("json report structure") {
  const auto [verdict, report] = certify(problem("X", all_binary_class()));
  const auto j = nlohmann::json::parse(render_report(report, ReportFormat::Json));
  for (const char* k : {"problem", "hypothesis", "condition_i", "condition_ii", "condition_iii", "summary"})
    CHECK(j.contains(k));
  CHECK(j["summary"]["verdict"] == "NotCertified");
  CHECK(j["condition_i"].size() == report.condition_i.size());
  const std::string md = render_report(report, ReportFormat::Markdown);
  CHECK(md.find("NotCertified") != std::string::npos);
}

TEST_CASE("corollary fast path for a 4-element circuit-cocircuit") {
  DecompositionProblem p = problem("AG32", all_binary_class());
  const Verdict fast = corollary_1_2_check(p);
  const auto [full, report] = certify(p);
  CHECK(fast.kind == full.kind);

  CHECK_THROWS_AS(corollary_1_2_check(problem("R12", regular_class())), Error);
  DecompositionProblem w{builtin("W4"), make_subset({1, 2, 5, 6}), 3, regular_class(), {}};
  CHECK_THROWS_AS(corollary_1_2_check(w), Error);
  CHECK(is_wheel(builtin("W4")));
  CHECK_FALSE(is_wheel(builtin("R12")));
}
