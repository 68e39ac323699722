#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matdec/execution.hpp"
#include "matdec/matroid.hpp"

namespace matdec {

/// One row of a published growth table, re-derived.
struct TableRow {
  std::string group;      // e.g. "Q13 with column [001100]"
  std::string listed;     // vector as printed in the source table
  std::string evaluated;  // vector actually used (differs only for flagged typos)
  std::string flag;       // why `evaluated` differs from `listed`; empty otherwise
  bool listed_has_minor = false;  // the table's "F7 or F7*-minor" column
  bool valid_growth = false;      // cosimple coextension / simple extension
  bool regular = false;
  std::size_t parent_lambda = 0;  // lambda(A) in the single-element parent that is not the table's base
  std::optional<std::size_t> lambda_ae;  // lambda_M(A + e), recorded for regular rows
  std::string lambda_text;               // "λ{3, 4, 8, 9, 12, 13, 14} = 2" under positional labels

  /// Verdict agrees with the listed column and regular rows keep lambda(A + e) = 2.
  bool matches() const noexcept { return valid_growth && regular == !listed_has_minor && (!regular || lambda_ae == 2u); }
};

struct TableReproduction {
  std::string title;
  std::string base_note;
  std::vector<TableRow> rows;
  std::vector<std::string> group_flags;  // typos in a group header, counted once each

  bool all_match() const noexcept;
  std::size_t flagged() const noexcept;
  std::string render() const;
};

/// Regular cosimple single-element coextensions of R12 + [001100] (14 rows).
TableReproduction r12_coextension_table(const Execution& exec = {});
/// Regular simple single-element extensions of the coextensions of R12 (8 rows).
TableReproduction r12_extension_table(const Execution& exec = {});

struct NarrativeCheck {
  std::string claim;
  std::string observed;
  bool holds = false;
};

struct CounterexampleReproduction {
  std::vector<NarrativeCheck> checks;

  bool all_hold() const noexcept;
  std::string render() const;
};

/// The X / Y / Z / Z' / Q13 checks showing that lambda(A + e + f) = 2 alone is
/// not acceptable, including a certification run on X.
CounterexampleReproduction counterexample_checks(const Execution& exec = {});

/// Both R12 tables as one deterministic document.
std::string reproduce_r12(const Execution& exec = {});
std::string reproduce_counterexample(const Execution& exec = {});

}  // namespace matdec
