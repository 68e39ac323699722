#include "matdec/minor.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "matdec/catalog.hpp"

namespace matdec {

using gf2::Word;
using gf2::XorBasis;

namespace {

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return out;
}

/// Linear embedding of t into the quotient columns `reps` (one per position of
/// m; positions outside `avail` are unusable). Returns chosen positions, one per
/// element of t in t's column order.
std::optional<std::vector<std::size_t>> embed(const BinaryMatroid& t, const std::vector<Word>& reps,
                                              ElementMask avail) {
  std::unordered_map<Word, std::vector<std::size_t>> by_rep;
  std::vector<Word> values;
  for (ElementMask w = avail; w != 0; w &= w - 1) {
    const auto pos = static_cast<std::size_t>(std::countr_zero(w));
    auto& slot = by_rep[reps[pos]];
    if (slot.empty()) values.push_back(reps[pos]);
    slot.push_back(pos);
  }
  std::sort(values.begin(), values.end());

  const std::size_t rt = t.rank();
  // Nonbasis columns of t grouped by the depth at which they become determined.
  std::vector<std::vector<Word>> due(rt + 1);
  for (std::size_t j : t.nonbasis_positions()) {
    const Word c = t.columns()[j];
    due[c == 0 ? 0 : static_cast<std::size_t>(std::bit_width(c))].push_back(c);
  }

  std::vector<Word> image(rt, 0);
  std::unordered_map<Word, std::size_t> used;
  auto fits = [&](Word v) {
    auto it = by_rep.find(v);
    return it != by_rep.end() && used[v] < it->second.size();
  };
  auto combine = [&](Word c) {
    Word v = 0;
    for (Word w = c; w != 0; w &= w - 1) v ^= image[static_cast<std::size_t>(std::countr_zero(w))];
    return v;
  };
  // Claims the requirements that become fixed at `depth`; rolls back on failure.
  auto claim = [&](std::size_t depth) {
    std::size_t done = 0;
    for (Word c : due[depth]) {
      const Word v = combine(c);
      if (!fits(v)) break;
      ++used[v];
      ++done;
    }
    if (done == due[depth].size()) return true;
    for (std::size_t i = 0; i < done; ++i) --used[combine(due[depth][i])];
    return false;
  };
  auto release = [&](std::size_t depth) {
    for (Word c : due[depth]) --used[combine(c)];
  };

  std::function<bool(std::size_t, const XorBasis&)> place = [&](std::size_t depth, const XorBasis& basis) -> bool {
    if (depth == rt) return true;
    for (Word v : values) {
      if (v == 0 || !fits(v)) continue;
      XorBasis next = basis;
      if (!next.insert(v)) continue;
      image[depth] = v;
      ++used[v];
      if (claim(depth + 1)) {
        if (place(depth + 1, next)) return true;
        release(depth + 1);
      }
      --used[v];
    }
    return false;
  };
  if (!claim(0)) return std::nullopt;
  if (!place(0, XorBasis{})) return std::nullopt;

  std::unordered_map<Word, std::size_t> next_free;
  std::vector<std::size_t> chosen(t.size());
  std::size_t row = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const Word v = t.is_basis_position(j) ? image[row++] : combine(t.columns()[j]);
    chosen[j] = by_rep[v][next_free[v]++];
  }
  return chosen;
}

std::optional<MinorWitness> search(const BinaryMatroid& m, const BinaryMatroid& t) {
  if (t.rank() > m.rank() || t.corank() > m.corank()) return std::nullopt;
  const std::size_t n = m.size();
  const std::size_t d = m.rank() - t.rank();
  const auto cols = m.columns();

  std::unordered_set<ElementMask> seen_flats;
  std::vector<std::size_t> chosen;
  std::optional<MinorWitness> found;

  std::function<void(std::size_t, const XorBasis&)> grow = [&](std::size_t start, const XorBasis& basis) {
    if (found) return;
    if (chosen.size() == d) {
      ElementMask flat = 0;
      std::vector<Word> reps(n);
      for (std::size_t j = 0; j < n; ++j) {
        reps[j] = basis.reduce(cols[j]);
        if (reps[j] == 0) flat |= ElementMask{1} << j;
      }
      if (!seen_flats.insert(flat).second) return;
      ElementMask con = 0;
      for (std::size_t j : chosen) con |= ElementMask{1} << j;
      const auto image = embed(t, reps, m.full_mask() & ~con);
      if (!image) return;
      ElementMask keep = 0;
      for (std::size_t j : *image) keep |= ElementMask{1} << j;
      found = MinorWitness{m.subset_of(con), m.subset_of(m.full_mask() & ~con & ~keep)};
      return;
    }
    for (std::size_t j = start; j + (d - chosen.size()) <= n; ++j) {
      XorBasis next = basis;
      if (!next.insert(cols[j])) continue;
      chosen.push_back(j);
      grow(j + 1, next);
      chosen.pop_back();
      if (found) return;
    }
  };
  grow(0, XorBasis{});
  return found;
}

}  // namespace

std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& target, std::size_t cap) {
  require_within_cap(m.size(), cap, "has_minor");
  require_within_cap(target.size(), kMaxTargetSize, "has_minor target");
  if (target.rank() > m.rank() || target.corank() > m.corank()) return std::nullopt;
  const double direct = choose(m.size(), m.rank() - target.rank());
  const double dualized = choose(m.size(), m.corank() - target.corank());
  if (dualized < direct) {
    auto w = search(dual(m), dual(target));
    if (!w) return std::nullopt;
    return MinorWitness{w->del, w->con};
  }
  return search(m, target);
}

const MinorClass& regular_class() {
  static const MinorClass cls{"regular", {builtin("F7"), builtin("F7dual")}};
  return cls;
}

const MinorClass& all_binary_class() {
  static const MinorClass cls{"all-binary", {}};
  return cls;
}

bool in_class(const BinaryMatroid& m, const MinorClass& cls, std::size_t cap) {
  return std::none_of(cls.excluded.begin(), cls.excluded.end(),
                      [&](const BinaryMatroid& x) { return has_minor(m, x, cap).has_value(); });
}

bool is_regular(const BinaryMatroid& m, std::size_t cap) { return in_class(m, regular_class(), cap); }

}  // namespace matdec
