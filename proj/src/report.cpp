#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "matdec/catalog.hpp"
#include "matdec/decomposer.hpp"

namespace matdec {

namespace {

using Json = nlohmann::ordered_json;
using Labels = std::map<ElementId, std::uint32_t>;

Lineage lineage_for(const CheckReport& r, const ConditionVerdict& v) {
  Lineage l{r.problem.n, {}};
  if (!v.candidate) return l;
  const GrowthCandidate& c = *v.candidate;
  if (c.kind == GrowthKind::ExtensionColumn) return l.extended(*c.e);
  if (c.kind == GrowthKind::CoextensionRow) return l.coextended(*c.f);
  return l.extended(*c.e).coextended(*c.f);
}

Labels labels_for(const CheckReport& r, const ConditionVerdict& v) { return lineage_labels(lineage_for(r, v)); }

std::string lambda_text(const LambdaValue& l, const Labels& labels) {
  return "λ" + format_labelled(l.set, labels) + " = " + std::to_string(l.value);
}

const LambdaValue* find_lambda(const ConditionVerdict& v, std::string_view name) {
  for (const auto& l : v.lambdas) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

/// Short human evidence for a passing or failing verdict, in positional labels.
std::string evidence(const CheckReport& r, const ConditionVerdict& v) {
  if (v.outcome == Outcome::Excluded) return "";
  if (v.outcome == Outcome::Pruned) return "case (a), not constructed";
  const Labels labels = labels_for(r, v);
  const std::size_t target = r.problem.k - 1;
  std::vector<std::string> parts;
  if (v.condition == Condition::I || v.condition == Condition::II) {
    for (const auto& l : v.lambdas) {
      if (l.value == target) parts.push_back(lambda_text(l, labels));
    }
    if (parts.empty()) {
      for (const auto& l : v.lambdas) parts.push_back(lambda_text(l, labels));
    }
  } else {
    std::vector<Condition> shown = v.cases;
    if (!r.problem.options.all_matching_cases && v.condition != Condition::III) shown = {v.condition};
    for (Condition c : shown) {
      if (c == Condition::IIIa) parts.push_back("λ_{M/f}(A) = λ_{M\\e}(A) = " + std::to_string(target));
      const LambdaValue* l = c == Condition::IIIb ? find_lambda(v, "A+f")
                             : c == Condition::IIIc ? find_lambda(v, "A+e")
                                                    : nullptr;
      if (l && l->value == target) {
        parts.push_back(lambda_text(*l, labels));
      } else if (c != Condition::IIIa) {
        if (v.escape) {
          GroundSubset s(v.escape->elements.begin(), v.escape->elements.end());
          parts.push_back(std::string(v.escape->kind == CircuitKind::Circuit ? "triangle " : "triad ") +
                          format_labelled(normalized(s), labels));
        } else {
          parts.push_back(std::string(to_string(c)) + " unmet");
          if (l) parts.push_back(lambda_text(*l, labels));
          if (const LambdaValue* all = find_lambda(v, "A+e+f")) parts.push_back(lambda_text(*all, labels));
        }
      }
    }
    if (v.cases.empty()) parts.push_back("no case pattern applies");
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

std::string bits_of(const ConditionVerdict& v, bool row) {
  const GrowthCandidate& c = *v.candidate;
  if (c.kind == GrowthKind::ExtensionColumn) return c.v->to_string();
  if (c.kind == GrowthKind::CoextensionRow) return c.w->to_string();
  return (row ? c.w->to_string() : c.v->to_string()) + (*c.corner ? "1" : "0");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json verdict_json(const CheckReport& r, const ConditionVerdict& v) {
  Json j;
  j["condition"] = std::string(to_string(v.condition));
  j["subject"] = v.subject;
  j["key"] = v.key;
  j["outcome"] = std::string(to_string(v.outcome));
  if (v.candidate) {
    const GrowthCandidate& c = *v.candidate;
    if (c.v) j["v"] = c.v->to_string();
    if (c.w) j["w"] = c.w->to_string();
    if (c.corner) j["b"] = *c.corner ? 1 : 0;
    if (c.e) j["e"] = id_value(*c.e);
    if (c.f) j["f"] = id_value(*c.f);
  }
  Json lambdas = Json::array();
  for (const auto& l : v.lambdas) {
    Json lj;
    lj["name"] = l.name;
    Json ids = Json::array();
    for (ElementId x : l.set) ids.push_back(id_value(x));
    lj["set"] = ids;
    lj["value"] = l.value;
    lambdas.push_back(lj);
  }
  j["lambdas"] = lambdas;
  if (!v.cases.empty()) {
    Json cases = Json::array();
    for (Condition c : v.cases) cases.push_back(std::string(to_string(c)));
    j["cases"] = cases;
  }
  if (v.escape) {
    Json ids = Json::array();
    for (ElementId x : v.escape->elements) ids.push_back(id_value(x));
    j["escape"] = {{"kind", v.escape->kind == CircuitKind::Circuit ? "triangle" : "triad"}, {"elements", ids}};
  }
  if (v.candidate || v.condition != Condition::Hyp) j["evidence"] = evidence(r, v);
  if (!v.note.empty()) j["note"] = v.note;
  if (v.oracle_passed) {
    j["oracle"] = {{"passed", *v.oracle_passed}, {"note", v.oracle_note}};
  }
  return j;
}

/// Verdicts listed in full: everything except pruned and excluded candidates.
bool listed(const ConditionVerdict& v) { return v.outcome == Outcome::Pass || v.outcome == Outcome::Fail; }

struct TableGroup {
  std::string parent;
  std::vector<const ConditionVerdict*> rows;
};

/// Two-element growths grouped by the parent that is a single-element growth
/// of N in the class: by v (coextension rows) or by w (extension columns).
std::vector<TableGroup> table_groups(const CheckReport& r, bool by_column) {
  std::map<std::string, TableGroup> groups;
  std::vector<std::string> order;
  const auto& parents = by_column ? r.condition_i : r.condition_ii;
  for (const auto& pv : parents) {
    if (pv.outcome != Outcome::Pass) continue;
    const std::string key = by_column ? pv.candidate->v->to_string() : pv.candidate->w->to_string();
    order.push_back(key);
    groups[key].parent = std::string(by_column ? "N + column [" : "N + row [") + key + "]";
  }
  for (const auto& v : r.condition_iii) {
    if (v.outcome == Outcome::Pruned) continue;
    const std::string key = by_column ? v.candidate->v->to_string() : v.candidate->w->to_string();
    const auto it = groups.find(key);
    if (it != groups.end()) it->second.rows.push_back(&v);
  }
  std::vector<TableGroup> out;
  for (const auto& key : order) out.push_back(groups[key]);
  return out;
}

std::string excluded_text(const CheckReport& r, const ConditionVerdict& v) {
  if (r.problem.cls.excluded.empty()) return "n/a";
  return v.outcome == Outcome::Excluded ? "YES" : "No";
}

void markdown_tables(std::ostringstream& out, const CheckReport& r) {
  const std::string cls = r.problem.cls.name;
  out << "\n## Two-element growths by single-element parent\n";
  for (bool by_column : {true, false}) {
    out << "\n### " << (by_column ? "Cosimple coextensions of passing extensions"
                                  : "Simple extensions of passing coextensions")
        << "\n";
    for (const TableGroup& g : table_groups(r, by_column)) {
      out << "\n" << g.parent << "\n\n";
      out << "| " << (by_column ? "Coext. row" : "Ext. column") << " | outside " << cls << " | "
          << "3-separation or triad |\n|---|---|---|\n";
      if (g.rows.empty()) out << "| (none) | | |\n";
      for (const auto* v : g.rows) {
        out << "| [" << bits_of(*v, by_column) << "] | " << excluded_text(r, *v) << " | " << evidence(r, *v)
            << (v->outcome == Outcome::Fail ? " (FAIL)" : "") << " |\n";
      }
    }
  }
}

std::string render_markdown(const CheckReport& r) {
  std::ostringstream out;
  const DecompositionProblem& p = r.problem;
  GroundSubset b;
  for (ElementId x : p.n.elements()) {
    if (!std::binary_search(p.a.begin(), p.a.end(), x)) b.push_back(x);
  }
  out << "# Decomposition check: " << p.n.name() << "\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| matroid | " << p.n.name() << " (n = " << p.n.size() << ", r = " << p.n.rank() << ") |\n";
  out << "| side A | " << format_subset(p.a) << " |\n";
  out << "| side B | " << format_subset(normalized(b)) << " |\n";
  out << "| k | " << p.k << " |\n";
  out << "| class | " << p.cls.name << " |\n";
  out << "| pruning | " << (p.options.use_pruning ? "on" : "off") << " |\n";
  out << "| cross-validation | " << (p.options.cross_validate ? "on" : "off") << " |\n";
  out << "\nElement ids of N equal their column positions, so ids and positional labels agree on N. "
         "New elements are e = " << id_value(p.n.fresh_id()) << " and f = " << id_value(p.n.fresh_id()) + 1
      << "; evidence below uses positional labels.\n";

  out << "\n## Hypotheses\n\n| check | result | detail |\n|---|---|---|\n";
  for (const auto& h : r.hypothesis) {
    out << "| " << h.subject << " | " << to_string(h.outcome) << " | " << h.note << " |\n";
  }

  auto single = [&](const char* title, const std::vector<ConditionVerdict>& list, const Counts& c, bool coext) {
    out << "\n## " << title << "\n\n";
    out << c.generated << " candidates, " << c.checked << " in class, " << c.excluded << " outside.\n\n";
    out << "| " << (coext ? "row" : "column") << " | in class | λ(A) | " << (coext ? "λ(A∪f)" : "λ(A∪e)")
        << " | result | evidence |" << (p.options.cross_validate ? " oracle |" : "") << "\n";
    out << "|---|---|---|---|---|---|" << (p.options.cross_validate ? "---|" : "") << "\n";
    for (const auto& v : list) {
      const bool inside = v.outcome != Outcome::Excluded;
      out << "| [" << bits_of(v, coext) << "] | " << yes_no(inside) << " | "
          << (inside ? std::to_string(v.lambdas[0].value) : "") << " | "
          << (inside ? std::to_string(v.lambdas[1].value) : "") << " | " << to_string(v.outcome) << " | "
          << evidence(r, v) << " |";
      if (p.options.cross_validate) out << " " << (v.oracle_passed ? (*v.oracle_passed ? "pass" : "fail") : "") << " |";
      out << "\n";
    }
  };
  if (r.verdict.kind != Verdict::Kind::HypothesisFailure) {
    single("Condition (i): simple single-element extensions", r.condition_i, r.counts_i, false);
    single("Condition (ii): cosimple single-element coextensions", r.condition_ii, r.counts_ii, true);

    out << "\n## Condition (iii): two-element growths\n\n";
    const Counts& c = r.counts_iii;
    out << c.generated << " (v, w, b) triples in scope of a legitimate parent, " << c.pruned << " pruned, "
        << c.constructed << " constructed, " << c.checked << " checked, " << c.excluded << " outside "
        << p.cls.name << ".\n\n";
    out << "| v | w | b | λ_{M/f}(A), λ_{M/f}(A∪e) | λ_{M\\e}(A), λ_{M\\e}(A∪f) | cases | result | evidence |"
        << (p.options.cross_validate ? " oracle |" : "") << "\n";
    out << "|---|---|---|---|---|---|---|---|" << (p.options.cross_validate ? "---|" : "") << "\n";
    for (const auto& v : r.condition_iii) {
      if (!listed(v)) continue;
      const GrowthCandidate& g = *v.candidate;
      std::string cases;
      for (Condition cc : v.cases) cases += (cases.empty() ? "" : ", ") + std::string(to_string(cc));
      out << "| " << g.v->to_string() << " | " << g.w->to_string() << " | " << (*g.corner ? 1 : 0) << " | "
          << v.lambdas[0].value << ", " << v.lambdas[1].value << " | " << v.lambdas[2].value << ", "
          << v.lambdas[3].value << " | " << (cases.empty() ? "none" : cases) << " | " << to_string(v.outcome)
          << " | " << evidence(r, v) << " |";
      if (p.options.cross_validate) out << " " << (v.oracle_passed ? (*v.oracle_passed ? "pass" : "fail") : "") << " |";
      out << "\n";
    }
    if (p.options.emit_tables) markdown_tables(out, r);
  }

  out << "\n## Summary\n\n| condition | generated | pruned | constructed | checked | outside class |\n"
         "|---|---|---|---|---|---|\n";
  auto row = [&](const char* name, const Counts& c) {
    out << "| " << name << " | " << c.generated << " | " << c.pruned << " | " << c.constructed << " | " << c.checked
        << " | " << c.excluded << " |\n";
  };
  row("(i)", r.counts_i);
  row("(ii)", r.counts_ii);
  row("(iii)", r.counts_iii);
  row("total", r.total());
  if (p.options.cross_validate) {
    out << "\nCross-validation: " << r.mismatches.size() << " disagreement(s) between the λ form and the "
        << "circuit/cocircuit form.\n";
    for (const auto& k : r.mismatches) out << "- " << k << "\n";
  }
  out << "\nVerdict: **" << to_string(r.verdict.kind) << "**\n";
  for (const auto& reason : r.verdict.reasons) out << "- failed hypothesis: " << reason << "\n";
  for (const auto& w : r.verdict.witnesses) {
    out << "- " << to_string(w.condition) << " fails for " << w.subject << ": " << evidence(r, w) << "\n";
  }
  if (r.verdict.kind == Verdict::Kind::NotCertified) {
    out << "\nA negative verdict only means the checklist is not met; it does not show that N fails to be a "
           "decomposer.\n";
  }
  return out.str();
}

std::string render_json(const CheckReport& r) {
  const DecompositionProblem& p = r.problem;
  Json j;
  Json side = Json::array();
  for (ElementId x : p.a) side.push_back(id_value(x));
  j["problem"] = {{"matroid", p.n.name()},
                  {"elements", p.n.size()},
                  {"rank", p.n.rank()},
                  {"side", side},
                  {"k", p.k},
                  {"class", p.cls.name},
                  {"pruning", p.options.use_pruning},
                  {"cross_validate", p.options.cross_validate}};
  auto list = [&](const std::vector<ConditionVerdict>& vs, bool all) {
    Json a = Json::array();
    for (const auto& v : vs) {
      if (all || listed(v)) a.push_back(verdict_json(r, v));
    }
    return a;
  };
  j["hypothesis"] = list(r.hypothesis, true);
  j["condition_i"] = list(r.condition_i, true);
  j["condition_ii"] = list(r.condition_ii, true);
  j["condition_iii"] = list(r.condition_iii, false);
  const Counts t = r.total();
  j["summary"] = {{"generated", t.generated},
                  {"pruned", t.pruned},
                  {"constructed", t.constructed},
                  {"checked", t.checked},
                  {"excluded", t.excluded},
                  {"verdict", std::string(to_string(r.verdict.kind))}};
  if (p.options.cross_validate) {
    j["summary"]["mismatches"] = r.mismatches;
  }
  Json witnesses = Json::array();
  for (const auto& w : r.verdict.witnesses) witnesses.push_back(w.key);
  j["summary"]["witnesses"] = witnesses;
  j["summary"]["reasons"] = r.verdict.reasons;
  if (p.options.emit_tables) {
    Json tables = Json::array();
    for (bool by_column : {true, false}) {
      for (const TableGroup& g : table_groups(r, by_column)) {
        Json rows = Json::array();
        for (const auto* v : g.rows) {
          rows.push_back({{"added", bits_of(*v, by_column)},
                          {"outside_class", v->outcome == Outcome::Excluded},
                          {"outcome", std::string(to_string(v->outcome))},
                          {"evidence", evidence(r, *v)}});
        }
        tables.push_back({{"parent", g.parent}, {"rows", rows}});
      }
    }
    j["tables"] = tables;
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_report(const CheckReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(report) : render_markdown(report);
}

}  // namespace matdec
