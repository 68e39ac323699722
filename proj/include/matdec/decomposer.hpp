#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matdec/execution.hpp"
#include "matdec/growth.hpp"
#include "matdec/matroid.hpp"
#include "matdec/minor.hpp"

namespace matdec {

struct CheckOptions {
  bool use_pruning = true;
  bool cross_validate = false;
  bool emit_tables = false;
  /// Condition (iii): require the consequent of every matching case pattern
  /// instead of only the governing one.
  bool all_matching_cases = false;
};

struct DecompositionProblem {
  BinaryMatroid n;
  GroundSubset a;
  std::size_t k = 3;
  MinorClass cls;
  CheckOptions options;
};

/// III marks a two-element growth that matches none of the case patterns.
enum class Condition { Hyp, I, II, IIIa, IIIb, IIIc, IIId, III };
enum class Outcome { Pass, Fail, Excluded, Pruned };

std::string_view to_string(Condition c);
std::string_view to_string(Outcome o);

struct LambdaValue {
  std::string name;  // "A", "A+e", "M/f: A", ...
  GroundSubset set;
  std::size_t value = 0;
};

struct ConditionVerdict {
  Condition condition = Condition::Hyp;
  std::string subject;
  std::string key;  // stable candidate key, e.g. "iii:v=001100,w=000011,b=0"
  std::optional<GrowthCandidate> candidate;
  Outcome outcome = Outcome::Pass;
  std::vector<LambdaValue> lambdas;
  std::vector<Condition> cases;  // case patterns that matched (condition iii)
  std::optional<TriangleOrTriad> escape;
  std::optional<Circuit> circuit;
  std::optional<Circuit> cocircuit;
  std::string note;
  std::optional<bool> oracle_passed;
  std::string oracle_note;

  bool passed() const noexcept { return outcome != Outcome::Fail; }
};

struct Verdict {
  enum class Kind { Certified, NotCertified, HypothesisFailure };
  Kind kind = Kind::Certified;
  std::vector<ConditionVerdict> witnesses;  // failing verdicts (NotCertified)
  std::vector<std::string> reasons;         // failed hypotheses

  bool certified() const noexcept { return kind == Kind::Certified; }
};

std::string_view to_string(Verdict::Kind kind);

struct Counts {
  std::size_t generated = 0;
  std::size_t pruned = 0;
  std::size_t constructed = 0;
  std::size_t checked = 0;
  std::size_t excluded = 0;

  Counts& operator+=(const Counts& o);
};

struct CheckReport {
  DecompositionProblem problem;
  std::vector<ConditionVerdict> hypothesis;
  std::vector<ConditionVerdict> condition_i;
  std::vector<ConditionVerdict> condition_ii;
  std::vector<ConditionVerdict> condition_iii;
  Counts counts_i, counts_ii, counts_iii;
  std::vector<std::string> mismatches;  // candidate keys where the two formulations disagree
  Verdict verdict;

  Counts total() const;
};

std::vector<ConditionVerdict> check_hypotheses(const DecompositionProblem& p);
std::vector<ConditionVerdict> check_condition_i(const DecompositionProblem& p, const Execution& exec = {},
                                                Counts* counts = nullptr);
std::vector<ConditionVerdict> check_condition_ii(const DecompositionProblem& p, const Execution& exec = {},
                                                 Counts* counts = nullptr);
/// Verdicts in (v, w, b) order; pruned candidates are kept with outcome Pruned.
std::vector<ConditionVerdict> check_condition_iii(const DecompositionProblem& p, const Execution& exec = {},
                                                  Counts* counts = nullptr);

/// The circuit/cocircuit formulation evaluated over the same candidates as
/// conditions (i), (ii) and (iii), without pruning.
std::vector<ConditionVerdict> oracle_2_2_check(const DecompositionProblem& p, const Execution& exec = {});

std::pair<Verdict, CheckReport> certify(const DecompositionProblem& p, const Execution& exec = {});

/// Fast path for k = 3 when A is a 4-element circuit and cocircuit of a
/// 3-connected non-wheel N. Throws PreconditionUnmet naming the failed premise.
Verdict corollary_1_2_check(const DecompositionProblem& p, const Execution& exec = {});

/// True if m is isomorphic to the wheel of its rank.
bool is_wheel(const BinaryMatroid& m);

enum class ReportFormat { Markdown, Json };
std::string render_report(const CheckReport& report, ReportFormat format);

}  // namespace matdec
