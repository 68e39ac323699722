#include "matdec/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <vector>

namespace matdec {

std::size_t lambda_mask(const BinaryMatroid& m, ElementMask s) {
  return m.rank_of_mask(s) + m.rank_of_mask(m.full_mask() & ~s) - m.rank();
}

std::size_t lambda(const BinaryMatroid& m, const GroundSubset& s) { return lambda_mask(m, m.mask_of(s)); }

std::string_view to_string(SeparationKind kind) {
  switch (kind) {
    case SeparationKind::NotASeparation: return "not a separation";
    case SeparationKind::ExactMinimal: return "exact minimal";
    case SeparationKind::ExactNonMinimal: return "exact non-minimal";
    case SeparationKind::SubExact: return "sub-exact";
  }
  return "?";
}

SeparationClass classify_separation_mask(const BinaryMatroid& m, ElementMask a, std::size_t k) {
  const std::size_t size_a = static_cast<std::size_t>(std::popcount(a));
  const std::size_t size_b = m.size() - size_a;
  const std::size_t lam = lambda_mask(m, a);
  SeparationClass out{SeparationKind::NotASeparation, lam};
  if (k == 0 || size_a < k || size_b < k || lam > k - 1) return out;
  if (lam < k - 1) {
    out.kind = SeparationKind::SubExact;
  } else {
    out.kind = (size_a == k || size_b == k) ? SeparationKind::ExactMinimal : SeparationKind::ExactNonMinimal;
  }
  return out;
}

SeparationClass classify_separation(const BinaryMatroid& m, const GroundSubset& a, std::size_t k) {
  const ElementMask mask = m.mask_of(a);
  if (mask == 0 || mask == m.full_mask()) {
    throw Error(ErrorKind::InvalidArgument, "a separation side must be a nonempty proper subset");
  }
  return classify_separation_mask(m, mask, k);
}

namespace {

/// Lowest-index subset A (never containing the last element; lambda is
/// symmetric so that halves the scan) with pred(lambda, |A|, |B|) true.
template <typename Pred>
std::optional<ElementMask> first_subset_matching(const BinaryMatroid& m, const Execution& exec, Pred pred) {
  const std::size_t n = m.size();
  if (n < 2) return std::nullopt;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t per_chunk = (total + chunks - 1) / chunks;
  std::vector<std::uint64_t> found(chunks, std::numeric_limits<std::uint64_t>::max());
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  for_each_index(static_cast<std::size_t>(chunks), exec, [&](std::size_t c) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, c * per_chunk);
    const std::uint64_t hi = std::min(total, (c + 1) * per_chunk);
    for (std::uint64_t a = lo; a < hi; ++a) {
      if (a > best.load(std::memory_order_relaxed)) return;
      const std::size_t size_a = static_cast<std::size_t>(std::popcount(a));
      if (pred(lambda_mask(m, a), size_a, n - size_a)) {
        found[c] = a;
        std::uint64_t cur = best.load();
        while (a < cur && !best.compare_exchange_weak(cur, a)) {
        }
        return;
      }
    }
  });
  const auto it = std::min_element(found.begin(), found.end());
  if (*it == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return ElementMask{*it};
}

}  // namespace

std::optional<ElementMask> find_low_separation(const BinaryMatroid& m, std::size_t n_conn, const Execution& exec) {
  // A k-separation with k <= n-1 exists iff some side has lambda + 1 <= min(|A|, |B|)
  // and lambda + 1 <= n - 1.
  return first_subset_matching(m, exec, [n_conn](std::size_t lam, std::size_t a, std::size_t b) {
    const std::size_t k = lam + 1;
    return k <= n_conn - 1 && k <= a && k <= b;
  });
}

bool is_n_connected(const BinaryMatroid& m, std::size_t n, const Execution& exec, std::size_t cap) {
  if (n < 2 || n > 3) throw Error(ErrorKind::InvalidArgument, "connectivity order must be 2 or 3");
  require_within_cap(m.size(), cap, "is_n_connected");
  return !find_low_separation(m, n, exec).has_value();
}

bool is_internally_4_connected(const BinaryMatroid& m, const Execution& exec, std::size_t cap) {
  require_within_cap(m.size(), cap, "is_internally_4_connected");
  if (!is_n_connected(m, 3, exec, cap)) {
    throw Error(ErrorKind::PreconditionUnmet, "internal 4-connectivity is defined for 3-connected matroids");
  }
  return !first_subset_matching(m, exec, [](std::size_t lam, std::size_t a, std::size_t b) {
            return a >= 4 && b >= 4 && lam < 3;
          }).has_value();
}

bool side_is_union_of_circuits_mask(const BinaryMatroid& m, ElementMask s) {
  if (s == 0) return false;
  for (ElementMask w = s; w != 0; w &= w - 1) {
    if (!circuit_through_within_mask(m, static_cast<std::size_t>(std::countr_zero(w)), s)) return false;
  }
  return true;
}

bool side_is_union_of_cocircuits_mask(const BinaryMatroid& m, ElementMask s) {
  if (s == 0) return false;
  for (ElementMask w = s; w != 0; w &= w - 1) {
    if (!cocircuit_through_within_mask(m, static_cast<std::size_t>(std::countr_zero(w)), s)) return false;
  }
  return true;
}

bool side_is_union_of_circuits(const BinaryMatroid& m, const GroundSubset& s) {
  return side_is_union_of_circuits_mask(m, m.mask_of(s));
}

bool side_is_union_of_cocircuits(const BinaryMatroid& m, const GroundSubset& s) {
  return side_is_union_of_cocircuits_mask(m, m.mask_of(s));
}

}  // namespace matdec
