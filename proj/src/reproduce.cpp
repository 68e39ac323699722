#include "matdec/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "matdec/decomposer.hpp"
#include "matdec/growth.hpp"
#include "matdec/minor.hpp"

namespace matdec {

namespace {

using gf2::Vector;

struct Listed {
  std::string group;
  std::string listed;
  std::string evaluated;
  bool has_minor;
  std::string flag;
};

GroundSubset with(GroundSubset s, std::initializer_list<ElementId> extra) {
  s.insert(s.end(), extra);
  return normalized(std::move(s));
}

std::string lambda_label(const GroundSubset& s, std::size_t value, const std::map<ElementId, std::uint32_t>& labels) {
  return "λ" + format_labelled(s, labels) + " = " + std::to_string(value);
}

std::string row_bits(const std::string& s) { return "[" + s + "]"; }

const std::vector<Listed>& coextension_rows() {
  static const std::vector<Listed> rows = [] {
    const std::string g = "Q13 with column [001100]";
    std::vector<Listed> r = {
        {g, "0000110", "0000110", false, ""}, {g, "0000111", "0000111", true, ""},
        {g, "1100000", "1100000", false, ""}, {g, "1100001", "1100001", true, ""},
        {g, "1100110", "1100110", false, ""}, {g, "1100111", "1100111", true, ""},
        {g, "0011000", "0011000", false, ""}, {g, "0011001", "0011001", true, ""},
        {g, "1110001", "1110001", true, ""},  {g, "1101001", "1101001", true, ""},
        {g, "0010110", "0010111", true,
         "listed row [0010110] is row 5 of the B side unchanged, which gives a coextension that is not cosimple; "
         "evaluated as [0010111], row 5 with its last entry reversed"},
        {g, "0001111", "0001111", true, ""},  {g, "0010001", "0010001", true, ""},
        {g, "0001001", "0001001", true, ""},
    };
    return r;
  }();
  return rows;
}

const std::vector<Listed>& extension_rows() {
  static const std::vector<Listed> rows = [] {
    std::vector<Listed> r = {
        {"P13* with row [000011]", "0011000", "0011000", false, ""},
        {"P13* with row [000011]", "00110001", "0011001", true,
         "listed column [00110001] has 8 entries; columns here have 7, evaluated as [0011001]"},
        {"P13* with row [110000]", "0011000", "0011000", false, ""},
        {"P13* with row [110000]", "0011001", "0011001", true, ""},
        {"P13* with row [110011]", "0011000", "0011000", false, ""},
        {"P13* with row [110011]", "0011001", "0011001", true, ""},
        {"Q13* with row [001100]", "0011000", "0011000", false, ""},
        {"Q13* with row [001100]", "0011001", "0011001", true, ""},
    };
    return r;
  }();
  return rows;
}

/// Row groups whose header is itself a typo in the source table.
std::string group_flag(const std::string& group) {
  if (group == "P13* with row [000011]")
    return "listed as \"P13* with row [0000011]\" (7 entries); coextension rows of R12 have 6, "
           "evaluated as [000011]";
  if (group == "P13* with row [110011]")
    return "listed as \"P13* with row [1100011]\" (7 entries); coextension rows of R12 have 6, "
           "evaluated as [110011]";
  return "";
}

std::string group_row(const std::string& group) {
  const auto open = group.find('[');
  return group.substr(open + 1, group.find(']') - open - 1);
}

std::string mark(bool b) { return b ? "YES" : "No"; }

}  // namespace

bool TableReproduction::all_match() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.matches(); });
}

std::size_t TableReproduction::flagged() const noexcept {
  return group_flags.size() +
         static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return !r.flag.empty(); }));
}

std::string TableReproduction::render() const {
  std::ostringstream out;
  out << "## " << title << "\n\n" << base_note << "\n\n";
  out << "| Base | Listed | Evaluated | Valid growth | λ(A) in parent | F7 or F7*-minor (listed) "
         "| F7 or F7*-minor (computed) | 3-separation | Match |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  std::vector<std::string> flags = group_flags;
  for (const TableRow& r : rows) {
    out << "| " << r.group << " | " << row_bits(r.listed) << " | " << row_bits(r.evaluated) << " | "
        << (r.valid_growth ? "yes" : "no") << " | " << r.parent_lambda << " | " << mark(r.listed_has_minor) << " | "
        << mark(!r.regular) << " | " << r.lambda_text << " | " << (r.matches() ? "ok" : "MISMATCH") << " |\n";
    if (!r.flag.empty()) flags.push_back(r.group + ", " + row_bits(r.listed) + ": " + r.flag);
  }
  const std::size_t ok = static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.matches(); }));
  out << "\nRows: " << rows.size() << ", matching: " << ok << ", flagged typos: " << flagged() << "\n";
  if (!flags.empty()) {
    out << "\nFlagged:\n";
    for (const auto& f : flags) out << "- " << f << "\n";
  }
  return out.str();
}

TableReproduction r12_coextension_table(const Execution& exec) {
  const CatalogEntry& entry = catalog_entry("R12");
  const BinaryMatroid& r12 = entry.matroid;
  const GroundSubset& a = *entry.side;
  const ElementId e = r12.fresh_id();
  const BinaryMatroid q13 = extend(r12, Vector::from_string("001100"), e);
  const ElementId f = q13.fresh_id();
  const auto labels = lineage_labels(Lineage{r12, {}}.extended(e).coextended(f));

  TableReproduction t;
  t.title = "Regular cosimple single-element coextensions of Q13";
  t.base_note = "Q13 = R12 extended by column [001100] (e = " + std::to_string(labels.at(e)) +
                "), coextended by each row (f = " + std::to_string(labels.at(f)) + "). A = " +
                format_labelled(a, labels) + " under positional labels; the parent is M\\e.";
  const auto& listed = coextension_rows();
  t.rows.resize(listed.size());
  for_each_index(listed.size(), exec, [&](std::size_t i) {
    const Listed& l = listed[i];
    TableRow& r = t.rows[i];
    r.group = l.group;
    r.listed = l.listed;
    r.evaluated = l.evaluated;
    r.flag = l.flag;
    r.listed_has_minor = l.has_minor;
    const BinaryMatroid m = coextend(q13, Vector::from_string(l.evaluated), f);
    r.valid_growth = is_cosimple(m);
    r.parent_lambda = lambda(delete_elements(m, {e}), a);
    r.regular = is_regular(m);
    if (r.regular) {
      const GroundSubset ae = with(a, {e});
      r.lambda_ae = lambda(m, ae);
      r.lambda_text = lambda_label(ae, *r.lambda_ae, labels);
    }
  });
  return t;
}

TableReproduction r12_extension_table(const Execution& exec) {
  const CatalogEntry& entry = catalog_entry("R12");
  const BinaryMatroid& r12 = entry.matroid;
  const GroundSubset& a = *entry.side;
  const ElementId f = r12.fresh_id();
  const ElementId e = make_id(id_value(f) + 1);
  const auto labels = lineage_labels(Lineage{r12, {}}.coextended(f).extended(e));

  TableReproduction t;
  t.title = "Regular simple single-element extensions of P13* and Q13*";
  t.base_note = "Each base is R12 coextended by the given row (f = " + std::to_string(labels.at(f)) +
                "), extended by each column (e = " + std::to_string(labels.at(e)) + "). A = " +
                format_labelled(a, labels) + " under positional labels; the parent is M/f.";
  const auto& listed = extension_rows();
  for (const Listed& l : listed) {
    const std::string gf = l.group + ": " + group_flag(l.group);
    if (gf.size() > l.group.size() + 2 && std::find(t.group_flags.begin(), t.group_flags.end(), gf) == t.group_flags.end())
      t.group_flags.push_back(gf);
  }
  t.rows.resize(listed.size());
  for_each_index(listed.size(), exec, [&](std::size_t i) {
    const Listed& l = listed[i];
    TableRow& r = t.rows[i];
    r.group = l.group;
    r.listed = l.listed;
    r.evaluated = l.evaluated;
    r.listed_has_minor = l.has_minor;
    r.flag = l.flag;
    const BinaryMatroid base = coextend(r12, Vector::from_string(group_row(l.group)), f);
    const BinaryMatroid m = extend(base, Vector::from_string(l.evaluated), e);
    r.valid_growth = is_simple(m);
    r.parent_lambda = lambda(contract_elements(m, {f}), a);
    r.regular = is_regular(m);
    if (r.regular) {
      const GroundSubset ae = with(a, {e});
      r.lambda_ae = lambda(m, ae);
      r.lambda_text = lambda_label(ae, *r.lambda_ae, labels);
    }
  });
  return t;
}

std::string reproduce_r12(const Execution& exec) {
  std::ostringstream out;
  out << "# R12 growth tables\n\n";
  out << r12_coextension_table(exec).render() << "\n" << r12_extension_table(exec).render();
  return out.str();
}

bool CounterexampleReproduction::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const NarrativeCheck& c) { return c.holds; });
}

std::string CounterexampleReproduction::render() const {
  std::ostringstream out;
  out << "# Counterexample: lambda(A + e + f) = 2 is not enough\n\n";
  out << "| Claim | Observed | Holds |\n|---|---|---|\n";
  for (const auto& c : checks) out << "| " << c.claim << " | " << c.observed << " | " << (c.holds ? "yes" : "NO") << " |\n";
  out << "\nChecks: " << checks.size() << ", holding: "
      << std::count_if(checks.begin(), checks.end(), [](const NarrativeCheck& c) { return c.holds; }) << "\n";
  return out.str();
}

CounterexampleReproduction counterexample_checks(const Execution& exec) {
  CounterexampleReproduction rep;
  auto add = [&](std::string claim, std::string observed, bool holds) {
    rep.checks.push_back({std::move(claim), std::move(observed), holds});
  };

  const CatalogEntry& xe = catalog_entry("X");
  const BinaryMatroid& x = xe.matroid;
  const GroundSubset& a = *xe.side;
  const CatalogEntry& ze = catalog_entry("Z");
  const BinaryMatroid& y = builtin("Y");
  const BinaryMatroid& z = ze.matroid;
  const auto labels = positional_labels(z, *ze.lineage);
  const ElementId e = ze.lineage->steps[0].second;
  const ElementId f = ze.lineage->steps[1].second;
  const std::string a_text = format_subset(a);

  const SeparationClass sx = classify_separation(x, a, 3);
  add("X: (A, B) with A = " + a_text + " is an exact non-minimal 3-separation",
      "λ_X(A) = " + std::to_string(sx.lambda) + ", " + std::string(to_string(sx.kind)),
      sx.kind == SeparationKind::ExactNonMinimal);

  const std::size_t ly = lambda(y, a);
  add("Y = X + [11000]: λ_Y(A) = 2", "λ_Y(A) = " + std::to_string(ly), ly == 2);

  add("Z = Y coextended by [110011]: f is labelled 6 and e is labelled 12",
      "f = " + std::to_string(labels.at(f)) + ", e = " + std::to_string(labels.at(e)),
      labels.at(f) == 6 && labels.at(e) == 12);

  const std::size_t lz = lambda(z, a);
  add("λ_Z(A) ≠ 2", "λ_Z(A) = " + std::to_string(lz), lz != 2);
  const GroundSubset af = with(a, {f});
  const std::size_t lzf = lambda(z, af);
  add("λ_Z(A ∪ {6}) ≠ 2", lambda_label(af, lzf, labels), lzf != 2);

  const auto tt = triangles_triads_through_pair(z, e, f);
  const ElementMask am = z.mask_of(a);
  std::size_t escapes = 0;
  for (const auto& t : tt) {
    for (ElementId g : t.elements)
      if (g != e && g != f && (am & (ElementMask{1} << z.position_of(g)))) ++escapes;
  }
  add("no triad or triangle {e, f, g} with g ∈ A", std::to_string(escapes) + " found", escapes == 0);

  const GroundSubset aef = with(a, {e, f});
  const std::size_t lzef = lambda(z, aef);
  add("λ_Z(A ∪ {6, 12}) = 2", lambda_label(aef, lzef, labels), lzef == 2);

  const ElementMask ef = (ElementMask{1} << z.position_of(e)) | (ElementMask{1} << z.position_of(f));
  const ElementMask bef = (z.full_mask() & ~am) | ef;
  const auto rs = circuits_containing_within(z, ef, bef);
  add("Z has a circuit R with {6, 12} ⊆ R ⊆ B ∪ {6, 12}",
      rs.empty() ? "none" : "R = " + format_labelled(z.subset_of(rs.front()), labels), !rs.empty());
  const auto d = cocircuit_through_within_mask(z, z.position_of(f), bef);
  add("Z has no cocircuit D with 6 ∈ D ⊆ B ∪ {6, 12}",
      d ? "D = " + format_labelled(z.subset_of(*d), labels) : "none", !d.has_value());

  const std::size_t lzp = lambda(builtin("Zprime"), a);
  add("Z' = Y coextended by [111001]: λ_Z'(A) = 2", "λ_Z'(A) = " + std::to_string(lzp), lzp == 2);

  const BinaryMatroid both = coextend(z, Vector::from_string("111001"));
  const BinaryMatroid& q13 = builtin("Q13_sec5");
  const bool iso = are_isomorphic(both, q13).has_value();
  add("Y coextended by [110011] and [111001] is isomorphic to the displayed Q13", iso ? "isomorphic" : "not isomorphic",
      iso);
  const bool i4c = is_n_connected(q13, 3, exec) && is_internally_4_connected(q13, exec);
  add("the displayed Q13 is internally 4-connected", i4c ? "yes" : "no", i4c);

  DecompositionProblem p{x, a, 3, all_binary_class(), {}};
  const auto [verdict, report] = certify(p, exec);
  add("certify(X, A, k = 3, all binary matroids) is not certified", std::string(to_string(verdict.kind)),
      verdict.kind == Verdict::Kind::NotCertified);
  std::string witness = "none";
  bool found = false;
  for (const auto& v : verdict.witnesses) {
    if (!v.candidate || v.candidate->kind != GrowthKind::TwoElement) continue;
    if (!are_isomorphic(v.candidate->result, z)) continue;
    found = true;
    witness = v.key + ", failing " + std::string(to_string(v.condition));
    std::vector<std::string> pats;
    for (Condition c : v.cases) pats.push_back(std::string(to_string(c)));
    witness += " (patterns:";
    for (const auto& s : pats) witness += " " + s;
    witness += ")";
    break;
  }
  add("a failing two-element growth of X is isomorphic to Z", witness, found);
  return rep;
}

std::string reproduce_counterexample(const Execution& exec) { return counterexample_checks(exec).render(); }

}  // namespace matdec
