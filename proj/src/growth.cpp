#include "matdec/growth.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace matdec {

using gf2::Vector;
using gf2::Word;

namespace {

Word full_word(std::size_t bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

void require_space(std::size_t dim, const char* what) {
  if (dim >= 63 || (std::size_t{1} << dim) > kGrowthSpaceCap) {
    throw Error(ErrorKind::DimensionCapExceeded,
                std::string(what) + ": vector space of dimension " + std::to_string(dim) + " is too large to enumerate");
  }
}

}  // namespace

BinaryMatroid extend(const BinaryMatroid& n, const Vector& v, std::optional<ElementId> e) {
  if (v.size() != n.rank()) {
    throw Error(ErrorKind::LengthMismatch, "extension column has length " + std::to_string(v.size()) +
                                               ", expected rank " + std::to_string(n.rank()));
  }
  std::vector<ElementId> elements(n.elements().begin(), n.elements().end());
  elements.push_back(e.value_or(n.fresh_id()));
  std::vector<std::size_t> basis(n.basis_positions().begin(), n.basis_positions().end());
  return BinaryMatroid::from_standard(n.rep().with_column(v), std::move(basis), std::move(elements), n.name(),
                                      n.next_id_value());
}

BinaryMatroid coextend(const BinaryMatroid& n, const Vector& w, std::optional<ElementId> f) {
  if (w.size() != n.corank()) {
    throw Error(ErrorKind::LengthMismatch, "coextension row has length " + std::to_string(w.size()) +
                                               ", expected corank " + std::to_string(n.corank()));
  }
  Vector row(n.size() + 1);
  for (std::size_t k : w.support()) row.set(n.nonbasis_positions()[k], true);
  row.set(n.size(), true);
  const gf2::Matrix rep = n.rep().with_column(Vector(n.rank())).with_row(row);
  std::vector<std::size_t> basis(n.basis_positions().begin(), n.basis_positions().end());
  basis.push_back(n.size());
  std::vector<ElementId> elements(n.elements().begin(), n.elements().end());
  elements.push_back(f.value_or(n.fresh_id()));
  return BinaryMatroid::from_standard(rep, std::move(basis), std::move(elements), n.name(), n.next_id_value());
}

BinaryMatroid two_element_growth(const BinaryMatroid& n, const Vector& v, const Vector& w, bool corner,
                                 std::optional<ElementId> e, std::optional<ElementId> f) {
  const BinaryMatroid ext = extend(n, v, e);
  Vector row(w.size() + 1);
  for (std::size_t k : w.support()) row.set(k, true);
  row.set(w.size(), corner);
  if (w.size() != n.corank()) {
    throw Error(ErrorKind::LengthMismatch, "coextension row has length " + std::to_string(w.size()) +
                                               ", expected corank " + std::to_string(n.corank()));
  }
  return coextend(ext, row, f);
}

bool passes_column_prefilter(const BinaryMatroid& n, Word v) {
  if (std::popcount(v) < 2) return false;
  return std::find(n.columns().begin(), n.columns().end(), v) == n.columns().end();
}

bool passes_row_prefilter(const BinaryMatroid& n, Word w) {
  if (std::popcount(w) < 2) return false;
  return std::find(n.dual_columns().begin(), n.dual_columns().end(), w) == n.dual_columns().end();
}

std::vector<GrowthCandidate> simple_extension_candidates(const BinaryMatroid& n) {
  if (!is_simple(n)) throw Error(ErrorKind::NotSimple, n.name() + " is not simple");
  require_space(n.rank(), "simple_extension_candidates");
  std::vector<GrowthCandidate> out;
  const ElementId e = n.fresh_id();
  for (Word v = 1; v <= full_word(n.rank()); ++v) {
    if (!passes_column_prefilter(n, v)) continue;
    GrowthCandidate c;
    c.kind = GrowthKind::ExtensionColumn;
    c.v = Vector::from_word(v, n.rank());
    c.result = extend(n, *c.v, e);
    c.e = e;
    if (is_simple(c.result)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const GrowthCandidate& a, const GrowthCandidate& b) { return *a.v < *b.v; });
  return out;
}

std::vector<GrowthCandidate> cosimple_coextension_candidates(const BinaryMatroid& n) {
  if (!is_cosimple(n)) throw Error(ErrorKind::NotCosimple, n.name() + " is not cosimple");
  require_space(n.corank(), "cosimple_coextension_candidates");
  std::vector<GrowthCandidate> out;
  const ElementId f = n.fresh_id();
  for (Word w = 1; w <= full_word(n.corank()); ++w) {
    if (!passes_row_prefilter(n, w)) continue;
    GrowthCandidate c;
    c.kind = GrowthKind::CoextensionRow;
    c.w = Vector::from_word(w, n.corank());
    c.result = coextend(n, *c.w, f);
    c.f = f;
    if (is_cosimple(c.result)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const GrowthCandidate& a, const GrowthCandidate& b) { return *a.w < *b.w; });
  return out;
}

void for_each_two_element_growth(const BinaryMatroid& n, const std::function<void(const GrowthCandidate&)>& visit) {
  if (!is_simple(n)) throw Error(ErrorKind::NotSimple, n.name() + " is not simple");
  if (!is_cosimple(n)) throw Error(ErrorKind::NotCosimple, n.name() + " is not cosimple");
  require_space(n.rank() + n.corank() + 1, "two_element_growths");
  const ElementId e = n.fresh_id();
  const ElementId f = ElementId{id_value(e) + 1};

  std::vector<Vector> vs, ws;
  for (Word v = 0; v <= full_word(n.rank()); ++v) vs.push_back(Vector::from_word(v, n.rank()));
  for (Word w = 0; w <= full_word(n.corank()); ++w) ws.push_back(Vector::from_word(w, n.corank()));
  std::sort(vs.begin(), vs.end());
  std::sort(ws.begin(), ws.end());

  for (const Vector& v : vs) {
    const Word vw = v.to_word();
    const bool contraction_parent_simple =
        vw != 0 && std::find(n.columns().begin(), n.columns().end(), vw) == n.columns().end();
    for (const Vector& w : ws) {
      const Word ww = w.to_word();
      const bool deletion_parent_cosimple =
          ww != 0 && std::find(n.dual_columns().begin(), n.dual_columns().end(), ww) == n.dual_columns().end();
      if (!contraction_parent_simple && !deletion_parent_cosimple) continue;
      for (bool corner : {false, true}) {
        GrowthCandidate c;
        c.kind = GrowthKind::TwoElement;
        c.result = two_element_growth(n, v, w, corner, e, f);
        if (!is_simple(c.result) || !is_cosimple(c.result)) continue;
        c.v = v;
        c.w = w;
        c.corner = corner;
        c.e = e;
        c.f = f;
        c.contraction_parent_simple = contraction_parent_simple;
        c.deletion_parent_cosimple = deletion_parent_cosimple;
        visit(c);
      }
    }
  }
}

std::vector<GrowthCandidate> two_element_growths(const BinaryMatroid& n) {
  std::vector<GrowthCandidate> out;
  for_each_two_element_growth(n, [&](const GrowthCandidate& c) { out.push_back(c); });
  return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

struct Census {
  std::vector<std::vector<std::uint32_t>> signature;  // per position
  std::vector<ElementMask> circuits;
};

Census census(const BinaryMatroid& m) {
  Census out;
  out.circuits = circuit_masks(m);
  const std::vector<ElementMask> cocircs = cocircuit_masks(m);
  const std::size_t n = m.size();
  out.signature.assign(n, std::vector<std::uint32_t>(2 * (n + 1), 0));
  for (ElementMask c : out.circuits) {
    const auto size = static_cast<std::size_t>(std::popcount(c));
    for (ElementMask w = c; w != 0; w &= w - 1) ++out.signature[static_cast<std::size_t>(std::countr_zero(w))][size];
  }
  for (ElementMask c : cocircs) {
    const auto size = static_cast<std::size_t>(std::popcount(c));
    for (ElementMask w = c; w != 0; w &= w - 1) {
      ++out.signature[static_cast<std::size_t>(std::countr_zero(w))][n + 1 + size];
    }
  }
  return out;
}

}  // namespace

std::optional<Bijection> are_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b, std::size_t cap) {
  require_within_cap(a.size(), cap, "are_isomorphic");
  require_within_cap(b.size(), cap, "are_isomorphic");
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  const std::size_t n = a.size();
  const Census ca = census(a);
  const Census cb = census(b);
  if (ca.circuits.size() != cb.circuits.size()) return std::nullopt;
  {
    auto sa = ca.signature, sb = cb.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ca.signature[i] == cb.signature[j]) candidates[i].push_back(j);
    }
  }
  // Most constrained elements first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return candidates[x].size() < candidates[y].size(); });
  std::vector<std::size_t> rank_in_order(n);
  for (std::size_t k = 0; k < n; ++k) rank_in_order[order[k]] = k;

  // Each circuit of a is checked once its last element (in search order) is placed.
  std::vector<std::vector<ElementMask>> completes_at(n);
  for (ElementMask c : ca.circuits) {
    std::size_t last = 0;
    for (ElementMask w = c; w != 0; w &= w - 1) {
      last = std::max(last, rank_in_order[static_cast<std::size_t>(std::countr_zero(w))]);
    }
    completes_at[last].push_back(c);
  }
  const std::unordered_set<ElementMask> target(cb.circuits.begin(), cb.circuits.end());

  std::vector<std::size_t> image(n, n);
  ElementMask used = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y : candidates[x]) {
      if ((used >> y) & 1U) continue;
      image[x] = y;
      bool consistent = true;
      for (ElementMask c : completes_at[depth]) {
        ElementMask mapped = 0;
        for (ElementMask w = c; w != 0; w &= w - 1) {
          mapped |= ElementMask{1} << image[static_cast<std::size_t>(std::countr_zero(w))];
        }
        if (!target.contains(mapped)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      used |= ElementMask{1} << y;
      if (place(depth + 1)) return true;
      used &= ~(ElementMask{1} << y);
    }
    image[x] = n;
    return false;
  };
  if (!place(0)) return std::nullopt;

  Bijection out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(a.elements()[i], b.elements()[image[i]]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsoClass> iso_classes(const std::vector<BinaryMatroid>& matroids, std::size_t cap) {
  std::vector<IsoClass> classes;
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    bool placed = false;
    for (IsoClass& cls : classes) {
      if (are_isomorphic(matroids[cls.members.front()], matroids[i], cap)) {
        cls.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(IsoClass{i, {i}});
  }
  for (IsoClass& cls : classes) {
    std::vector<Circuit> best;
    for (std::size_t idx : cls.members) {
      std::vector<Circuit> list = circuits(matroids[idx]);
      if (idx == cls.members.front() || list < best) {
        best = std::move(list);
        cls.representative = idx;
      }
    }
  }
  return classes;
}

}  // namespace matdec
