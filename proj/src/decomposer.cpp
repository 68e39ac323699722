#include "matdec/decomposer.hpp"

#include <algorithm>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"

namespace matdec {

using gf2::Vector;
using gf2::Word;

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Hyp: return "hypothesis";
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::IIIa: return "iii(a)";
    case Condition::IIIb: return "iii(b)";
    case Condition::IIIc: return "iii(c)";
    case Condition::IIId: return "iii(d)";
    case Condition::III: return "iii";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Excluded: return "excluded";
    case Outcome::Pruned: return "pruned";
  }
  return "?";
}

std::string_view to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Certified: return "Certified";
    case Verdict::Kind::NotCertified: return "NotCertified";
    case Verdict::Kind::HypothesisFailure: return "HypothesisFailure";
  }
  return "?";
}

Counts& Counts::operator+=(const Counts& o) {
  generated += o.generated;
  pruned += o.pruned;
  constructed += o.constructed;
  checked += o.checked;
  excluded += o.excluded;
  return *this;
}

Counts CheckReport::total() const {
  Counts out = counts_i;
  out += counts_ii;
  out += counts_iii;
  return out;
}

namespace {

enum class Mode { Lambda, Oracle, Both };

bool run_lambda(Mode m) { return m != Mode::Oracle; }
bool run_oracle(Mode m) { return m != Mode::Lambda; }

ElementMask bit(std::size_t pos) { return ElementMask{1} << pos; }

GroundSubset with(GroundSubset s, std::initializer_list<ElementId> extra) {
  s.insert(s.end(), extra.begin(), extra.end());
  return normalized(std::move(s));
}

LambdaValue lambda_value(const BinaryMatroid& m, std::string name, const GroundSubset& s) {
  return {std::move(name), s, lambda(m, s)};
}

Circuit as_circuit(const BinaryMatroid& m, ElementMask mask, CircuitKind kind) {
  return {kind, m.subset_of(mask)};
}

/// Triangles or triads {e, f, g} with g in A, in the order of triangles_triads_through_pair.
std::vector<TriangleOrTriad> escapes(const BinaryMatroid& m, ElementId e, ElementId f, const GroundSubset& a,
                                     std::optional<CircuitKind> only = std::nullopt) {
  std::vector<TriangleOrTriad> out;
  for (const TriangleOrTriad& t : triangles_triads_through_pair(m, e, f)) {
    if (only && t.kind != *only) continue;
    const bool g_in_a = std::any_of(t.elements.begin(), t.elements.end(), [&](ElementId x) {
      return x != e && x != f && std::binary_search(a.begin(), a.end(), x);
    });
    if (g_in_a) out.push_back(t);
  }
  return out;
}

std::string describe(const TriangleOrTriad& t) {
  GroundSubset s(t.elements.begin(), t.elements.end());
  return std::string(t.kind == CircuitKind::Circuit ? "triangle " : "triad ") + format_subset(normalized(s));
}

/// Condition (i) for an extension by e, or (ii) for a coextension by f: the
/// element `x` is the new one.
void evaluate_single(const DecompositionProblem& p, ConditionVerdict& v, ElementId x, bool coext, Mode mode) {
  const BinaryMatroid& m = v.candidate->result;
  const std::size_t target = p.k - 1;
  const GroundSubset ax = with(p.a, {x});
  if (run_lambda(mode)) {
    const LambdaValue la = lambda_value(m, "A", p.a);
    const LambdaValue lax = lambda_value(m, coext ? "A+f" : "A+e", ax);
    v.lambdas = {la, lax};
    const bool ok_a = la.value == target;
    const bool ok_ax = lax.value == target;
    v.outcome = (ok_a || ok_ax) ? Outcome::Pass : Outcome::Fail;
    if (ok_a && ok_ax) {
      v.note = "both branches";
    } else if (ok_a) {
      v.note = "lambda(A) = k-1";
    } else if (ok_ax) {
      v.note = coext ? "lambda(A+f) = k-1" : "lambda(A+e) = k-1";
    } else {
      v.note = "neither branch holds";
    }
  }
  if (run_oracle(mode)) {
    const std::size_t pos = m.position_of(x);
    const ElementMask am = m.mask_of(p.a);
    const ElementMask bm = m.full_mask() & ~am & ~bit(pos);
    const CircuitKind kind = coext ? CircuitKind::Cocircuit : CircuitKind::Circuit;
    auto search = [&](ElementMask within) {
      return coext ? cocircuit_through_within_mask(m, pos, within) : circuit_through_within_mask(m, pos, within);
    };
    std::optional<ElementMask> found = search(bm | bit(pos));
    std::string side = "B";
    if (!found) {
      found = search(am | bit(pos));
      side = "A";
    }
    const bool ok = found.has_value();
    if (ok) {
      (coext ? v.cocircuit : v.circuit) = as_circuit(m, *found, kind);
      v.oracle_note = std::string(coext ? "cocircuit through f in " : "circuit through e in ") + side +
                      (coext ? "+f" : "+e");
    } else {
      v.oracle_note = coext ? "no cocircuit through f inside A+f or B+f" : "no circuit through e inside A+e or B+e";
    }
    if (mode == Mode::Oracle) {
      v.outcome = ok ? Outcome::Pass : Outcome::Fail;
      v.note = v.oracle_note;
    } else {
      v.oracle_passed = ok;
    }
  }
}

std::vector<ConditionVerdict> run_single(const DecompositionProblem& p, const Execution& exec, Counts* counts,
                                         bool coext, Mode mode) {
  std::vector<GrowthCandidate> cands =
      coext ? cosimple_coextension_candidates(p.n) : simple_extension_candidates(p.n);
  std::vector<ConditionVerdict> out(cands.size());
  for_each_index(cands.size(), exec, [&](std::size_t i) {
    ConditionVerdict& v = out[i];
    v.condition = coext ? Condition::II : Condition::I;
    const Vector& vec = coext ? *cands[i].w : *cands[i].v;
    v.subject = std::string(coext ? "row " : "column ") + vec.to_string();
    v.key = std::string(coext ? "ii:w=" : "i:v=") + vec.to_string();
    v.candidate = std::move(cands[i]);
    if (!in_class(v.candidate->result, p.cls)) {
      v.outcome = Outcome::Excluded;
      v.note = "outside " + p.cls.name;
      return;
    }
    evaluate_single(p, v, coext ? *v.candidate->f : *v.candidate->e, coext, mode);
  });
  if (counts) {
    Counts c;
    c.generated = c.constructed = out.size();
    for (const auto& v : out) (v.outcome == Outcome::Excluded ? c.excluded : c.checked)++;
    *counts = c;
  }
  return out;
}

/// What condition (iii) needs to know about one parent: M/f = N + v or M\e = coextend(N, w).
struct Parent {
  bool legit = false;     // simple extension / cosimple coextension
  bool in_class = false;
  std::size_t lam_a = 0;  // lambda(A)
  std::size_t lam_ax = 0; // lambda(A + new element)
};

std::vector<Vector> all_vectors(std::size_t len) {
  std::vector<Vector> out;
  for (Word x = 0; x < (Word{1} << len); ++x) out.push_back(Vector::from_word(x, len));
  std::sort(out.begin(), out.end());
  return out;
}

void evaluate_pair(const DecompositionProblem& p, ConditionVerdict& v, const Parent& pv, const Parent& pw,
                   Mode mode) {
  const GrowthCandidate& c = *v.candidate;
  const BinaryMatroid& m = c.result;
  const ElementId e = *c.e;
  const ElementId f = *c.f;
  const std::size_t target = p.k - 1;
  const bool p1 = pv.lam_a == target, p2 = pv.lam_ax == target;
  const bool q1 = pw.lam_a == target, q2 = pw.lam_ax == target;

  if (run_lambda(mode)) {
    v.lambdas = {
        {"M/f: A", p.a, pv.lam_a},
        {"M/f: A+e", with(p.a, {e}), pv.lam_ax},
        {"M\\e: A", p.a, pw.lam_a},
        {"M\\e: A+f", with(p.a, {f}), pw.lam_ax},
    };
    if (p1 && q1) {
      v.condition = Condition::IIIa;
      v.cases = {Condition::IIIa};
      v.outcome = Outcome::Pass;
      v.note = "case (a)";
    } else {
      const LambdaValue l_af = lambda_value(m, "A+f", with(p.a, {f}));
      const LambdaValue l_ae = lambda_value(m, "A+e", with(p.a, {e}));
      const LambdaValue l_aef = lambda_value(m, "A+e+f", with(p.a, {e, f}));
      v.lambdas.insert(v.lambdas.end(), {l_af, l_ae, l_aef});
      const std::vector<TriangleOrTriad> esc = escapes(m, e, f, p.a);
      if (!esc.empty()) v.escape = esc.front();
      const std::string escape_text = esc.empty() ? std::string() : describe(esc.front());

      // Every pattern that matches, with whether its consequent holds.
      std::vector<std::pair<Condition, bool>> matched;
      std::vector<std::string> notes;
      auto consider = [&](Condition cond, bool holds, const std::string& how) {
        matched.emplace_back(cond, holds);
        v.cases.push_back(cond);
        notes.push_back(std::string(to_string(cond)) + (holds ? " by " + how : " fails"));
      };
      if (p1 && q2) {
        const bool lam = l_af.value == target;
        consider(Condition::IIIb, lam || !esc.empty(), lam ? "lambda(A+f) = k-1" : escape_text);
      }
      if (p2 && q1) {
        const bool lam = l_ae.value == target;
        consider(Condition::IIIc, lam || !esc.empty(), lam ? "lambda(A+e) = k-1" : escape_text);
      }
      if (p2 && q2) consider(Condition::IIId, !esc.empty(), escape_text);

      // The governing case: lambda(A) takes precedence over lambda(A + new
      // element) on each parent, so the four cases partition the candidates.
      std::optional<Condition> governing;
      if (p1) {
        if (q2) governing = Condition::IIIb;
      } else if (q1) {
        if (p2) governing = Condition::IIIc;
      } else if (p2 && q2) {
        governing = Condition::IIId;
      }

      if (matched.empty()) {
        v.condition = Condition::III;
        v.outcome = Outcome::Pass;
        v.note = "no case pattern applies";
      } else if (p.options.all_matching_cases) {
        const auto bad = std::find_if(matched.begin(), matched.end(), [](const auto& x) { return !x.second; });
        v.condition = bad == matched.end() ? matched.front().first : bad->first;
        v.outcome = bad == matched.end() ? Outcome::Pass : Outcome::Fail;
      } else {
        const auto it = std::find_if(matched.begin(), matched.end(),
                                     [&](const auto& x) { return x.first == *governing; });
        v.condition = *governing;
        v.outcome = it->second ? Outcome::Pass : Outcome::Fail;
      }
      for (std::size_t i = 0; i < notes.size(); ++i) v.note += (i ? "; " : "") + notes[i];
    }
  }

  if (run_oracle(mode)) {
    const std::size_t e_pos = m.position_of(e), f_pos = m.position_of(f);
    const ElementMask am = m.mask_of(p.a);
    const ElementMask ef = bit(e_pos) | bit(f_pos);
    const ElementMask bef = (m.full_mask() & ~am) | ef;
    const bool rc = !circuits_containing_within(m, ef, bef).empty();
    const bool rd = !cocircuits_containing_within(m, ef, bef).empty();
    bool ok = true;
    std::vector<std::string> notes;
    if (rc) {
      const auto d_f = cocircuit_through_within_mask(m, f_pos, bef);
      const auto triads = escapes(m, e, f, p.a, CircuitKind::Cocircuit);
      if (d_f) {
        v.cocircuit = as_circuit(m, *d_f, CircuitKind::Cocircuit);
        notes.push_back("circuit R: cocircuit D_f in B+e+f");
      } else if (!triads.empty()) {
        notes.push_back("circuit R: " + describe(triads.front()));
      } else {
        notes.push_back("circuit R: no cocircuit D_f in B+e+f and no triad with g in A");
        ok = false;
      }
    }
    if (rd) {
      const auto c_e = circuit_through_within_mask(m, e_pos, bef);
      const auto triangles = escapes(m, e, f, p.a, CircuitKind::Circuit);
      if (c_e) {
        v.circuit = as_circuit(m, *c_e, CircuitKind::Circuit);
        notes.push_back("cocircuit R: circuit C_e in B+e+f");
      } else if (!triangles.empty()) {
        notes.push_back("cocircuit R: " + describe(triangles.front()));
      } else {
        notes.push_back("cocircuit R: no circuit C_e in B+e+f and no triangle with g in A");
        ok = false;
      }
    }
    if (!rc && !rd) notes.push_back("no circuit or cocircuit R with e, f in R inside B+e+f");
    v.oracle_note.clear();
    for (std::size_t i = 0; i < notes.size(); ++i) v.oracle_note += (i ? "; " : "") + notes[i];
    if (mode == Mode::Oracle) {
      v.outcome = ok ? Outcome::Pass : Outcome::Fail;
      v.note = v.oracle_note;
      v.condition = Condition::III;
    } else {
      v.oracle_passed = ok;
    }
  }
}

std::vector<ConditionVerdict> run_pairs(const DecompositionProblem& p, const Execution& exec, Counts* counts,
                                        Mode mode, bool prune) {
  const BinaryMatroid& n = p.n;
  if (!is_simple(n)) throw Error(ErrorKind::NotSimple, n.name() + " is not simple");
  if (!is_cosimple(n)) throw Error(ErrorKind::NotCosimple, n.name() + " is not cosimple");
  const std::vector<Vector> vs = all_vectors(n.rank());
  const std::vector<Vector> ws = all_vectors(n.corank());
  const ElementId e = n.fresh_id();
  const ElementId f = ElementId{id_value(e) + 1};

  std::vector<Parent> pv(vs.size()), pw(ws.size());
  for_each_index(vs.size() + ws.size(), exec, [&](std::size_t i) {
    const bool is_v = i < vs.size();
    const BinaryMatroid parent = is_v ? extend(n, vs[i], e) : coextend(n, ws[i - vs.size()], f);
    Parent& out = is_v ? pv[i] : pw[i - vs.size()];
    const Word word = is_v ? vs[i].to_word() : ws[i - vs.size()].to_word();
    out.legit = word != 0 && (is_v ? std::find(n.columns().begin(), n.columns().end(), word) == n.columns().end()
                                   : std::find(n.dual_columns().begin(), n.dual_columns().end(), word) ==
                                         n.dual_columns().end());
    out.in_class = in_class(parent, p.cls);
    out.lam_a = lambda(parent, p.a);
    out.lam_ax = lambda(parent, with(p.a, {is_v ? e : f}));
  });

  const std::size_t target = p.k - 1;
  std::vector<std::vector<ConditionVerdict>> per_v(vs.size());
  std::vector<Counts> per_v_counts(vs.size());
  for_each_index(vs.size(), exec, [&](std::size_t iv) {
    auto& out = per_v[iv];
    Counts& cnt = per_v_counts[iv];
    for (std::size_t iw = 0; iw < ws.size(); ++iw) {
      if (!pv[iv].legit && !pw[iw].legit) continue;
      for (bool corner : {false, true}) {
        ++cnt.generated;
        ConditionVerdict v;
        v.condition = Condition::III;
        v.subject = "v=" + vs[iv].to_string() + " w=" + ws[iw].to_string() + " b=" + (corner ? "1" : "0");
        v.key = "iii:" + v.subject;
        if (prune && pv[iv].lam_a == target && pw[iw].lam_a == target) {
          ++cnt.pruned;
          GrowthCandidate c;
          c.kind = GrowthKind::TwoElement;
          c.v = vs[iv];
          c.w = ws[iw];
          c.corner = corner;
          c.e = e;
          c.f = f;
          c.contraction_parent_simple = pv[iv].legit;
          c.deletion_parent_cosimple = pw[iw].legit;
          v.candidate = std::move(c);
          v.condition = Condition::IIIa;
          v.outcome = Outcome::Pruned;
          v.note = "both parents satisfy lambda(A) = k-1";
          out.push_back(std::move(v));
          continue;
        }
        ++cnt.constructed;
        GrowthCandidate c;
        c.kind = GrowthKind::TwoElement;
        c.result = two_element_growth(n, vs[iv], ws[iw], corner, e, f);
        if (!is_simple(c.result) || !is_cosimple(c.result)) continue;
        c.v = vs[iv];
        c.w = ws[iw];
        c.corner = corner;
        c.e = e;
        c.f = f;
        c.contraction_parent_simple = pv[iv].legit;
        c.deletion_parent_cosimple = pw[iw].legit;
        v.candidate = std::move(c);
        if (!pv[iv].in_class || !pw[iw].in_class) {
          v.outcome = Outcome::Excluded;
          v.note = std::string(!pv[iv].in_class ? "M/f" : "M\\e") + " outside " + p.cls.name;
          ++cnt.excluded;
        } else if (!in_class(v.candidate->result, p.cls)) {
          v.outcome = Outcome::Excluded;
          v.note = "outside " + p.cls.name;
          ++cnt.excluded;
        } else {
          ++cnt.checked;
          evaluate_pair(p, v, pv[iv], pw[iw], mode);
        }
        out.push_back(std::move(v));
      }
    }
  });

  std::vector<ConditionVerdict> all;
  Counts total;
  for (std::size_t iv = 0; iv < vs.size(); ++iv) {
    std::move(per_v[iv].begin(), per_v[iv].end(), std::back_inserter(all));
    total += per_v_counts[iv];
  }
  if (counts) *counts = total;
  return all;
}

ConditionVerdict hypothesis(std::string subject, bool ok, std::string note) {
  ConditionVerdict v;
  v.condition = Condition::Hyp;
  v.subject = std::move(subject);
  v.key = "hyp:" + v.subject;
  v.outcome = ok ? Outcome::Pass : Outcome::Fail;
  v.note = std::move(note);
  return v;
}

void validate_problem(const DecompositionProblem& p) {
  if (p.k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  for (ElementId x : p.a) p.n.position_of(x);
}

}  // namespace

std::vector<ConditionVerdict> check_hypotheses(const DecompositionProblem& p) {
  validate_problem(p);
  std::vector<ConditionVerdict> out;
  const BinaryMatroid& n = p.n;
  out.push_back(hypothesis("N simple", is_simple(n), ""));
  out.push_back(hypothesis("N cosimple", is_cosimple(n), ""));
  out.push_back(hypothesis("N in class", in_class(n, p.cls), p.cls.name));
  const ElementMask am = n.mask_of(p.a);
  if (am == 0 || am == n.full_mask()) {
    out.push_back(hypothesis("exact separation", false, "A must be a nonempty proper subset"));
  } else {
    const SeparationClass sc = classify_separation_mask(n, am, p.k);
    out.push_back(hypothesis("exact separation", sc.is_exact(),
                             "lambda(A) = " + std::to_string(sc.lambda) + ", " + std::string(to_string(sc.kind))));
  }
  out.push_back(hypothesis("A union of circuits", side_is_union_of_circuits_mask(n, am), ""));
  out.push_back(hypothesis("A union of cocircuits", side_is_union_of_cocircuits_mask(n, am), ""));
  return out;
}

std::vector<ConditionVerdict> check_condition_i(const DecompositionProblem& p, const Execution& exec,
                                                Counts* counts) {
  validate_problem(p);
  return run_single(p, exec, counts, false, Mode::Lambda);
}

std::vector<ConditionVerdict> check_condition_ii(const DecompositionProblem& p, const Execution& exec,
                                                 Counts* counts) {
  validate_problem(p);
  return run_single(p, exec, counts, true, Mode::Lambda);
}

std::vector<ConditionVerdict> check_condition_iii(const DecompositionProblem& p, const Execution& exec,
                                                  Counts* counts) {
  validate_problem(p);
  return run_pairs(p, exec, counts, Mode::Lambda, p.options.use_pruning);
}

std::vector<ConditionVerdict> oracle_2_2_check(const DecompositionProblem& p, const Execution& exec) {
  validate_problem(p);
  std::vector<ConditionVerdict> out = run_single(p, exec, nullptr, false, Mode::Oracle);
  for (auto& v : run_single(p, exec, nullptr, true, Mode::Oracle)) out.push_back(std::move(v));
  for (auto& v : run_pairs(p, exec, nullptr, Mode::Oracle, false)) out.push_back(std::move(v));
  return out;
}

std::pair<Verdict, CheckReport> certify(const DecompositionProblem& p, const Execution& exec) {
  CheckReport report;
  report.problem = p;
  report.hypothesis = check_hypotheses(p);
  Verdict verdict;
  for (const auto& h : report.hypothesis) {
    if (!h.passed()) verdict.reasons.push_back(h.subject + (h.note.empty() ? "" : " (" + h.note + ")"));
  }
  if (!verdict.reasons.empty()) {
    verdict.kind = Verdict::Kind::HypothesisFailure;
    report.verdict = verdict;
    return {verdict, report};
  }

  const Mode mode = p.options.cross_validate ? Mode::Both : Mode::Lambda;
  report.condition_i = run_single(p, exec, &report.counts_i, false, mode);
  report.condition_ii = run_single(p, exec, &report.counts_ii, true, mode);
  report.condition_iii = run_pairs(p, exec, &report.counts_iii, mode, p.options.use_pruning);

  for (const auto* list : {&report.condition_i, &report.condition_ii, &report.condition_iii}) {
    for (const auto& v : *list) {
      if (!v.passed()) verdict.witnesses.push_back(v);
      if (v.oracle_passed && *v.oracle_passed != v.passed()) report.mismatches.push_back(v.key);
    }
  }
  verdict.kind = verdict.witnesses.empty() ? Verdict::Kind::Certified : Verdict::Kind::NotCertified;
  report.verdict = verdict;
  return {verdict, report};
}

bool is_wheel(const BinaryMatroid& m) {
  if (m.rank() < 3 || m.size() != 2 * m.rank()) return false;
  return are_isomorphic(m, wheel(m.rank())).has_value();
}

Verdict corollary_1_2_check(const DecompositionProblem& p, const Execution& exec) {
  validate_problem(p);
  const BinaryMatroid& n = p.n;
  auto unmet = [](const std::string& what) { throw Error(ErrorKind::PreconditionUnmet, what); };
  if (p.k != 3) unmet("k must be 3");
  if (p.a.size() != 4) unmet("A must have exactly 4 elements");
  const ElementMask am = n.mask_of(p.a);
  if (!is_circuit_mask(n, am)) unmet("A is not a circuit");
  if (!is_cocircuit_mask(n, am)) unmet("A is not a cocircuit");
  if (n.size() - p.a.size() < 4) unmet("(A, B) is not a non-minimal separation");
  if (!is_n_connected(n, 3, exec)) unmet("N is not 3-connected");
  if (is_wheel(n)) unmet("N is a wheel");
  if (!in_class(n, p.cls)) unmet("N is outside " + p.cls.name);

  std::vector<GrowthCandidate> growths = simple_extension_candidates(n);
  for (auto& c : cosimple_coextension_candidates(n)) growths.push_back(std::move(c));
  std::vector<std::optional<ConditionVerdict>> failures(growths.size());
  for_each_index(growths.size(), exec, [&](std::size_t i) {
    const GrowthCandidate& c = growths[i];
    if (!is_n_connected(c.result, 3) || !in_class(c.result, p.cls)) return;
    const ElementMask a = c.result.mask_of(p.a);
    const bool circuit = is_circuit_mask(c.result, a);
    const bool cocircuit = is_cocircuit_mask(c.result, a);
    if (circuit && cocircuit) return;
    ConditionVerdict v;
    const bool coext = c.kind == GrowthKind::CoextensionRow;
    v.condition = coext ? Condition::II : Condition::I;
    v.subject = std::string(coext ? "row " : "column ") + (coext ? c.w : c.v)->to_string();
    v.key = std::string(coext ? "ii:w=" : "i:v=") + (coext ? c.w : c.v)->to_string();
    v.outcome = Outcome::Fail;
    v.note = std::string("A is no longer a ") + (circuit ? "cocircuit" : "circuit");
    v.candidate = c;
    failures[i] = std::move(v);
  });
  Verdict out;
  for (auto& f : failures) {
    if (f) out.witnesses.push_back(std::move(*f));
  }
  out.kind = out.witnesses.empty() ? Verdict::Kind::Certified : Verdict::Kind::NotCertified;
  return out;
}

}  // namespace matdec
