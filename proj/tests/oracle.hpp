#pragma once
// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: matrices are plain 0/1 vectors and ranks come from
// a textbook elimination.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "matdec/matroid.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;  // rows of 0/1

inline Grid grid_of(const matdec::BinaryMatroid& m) {
  Grid g(m.rank(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g[i][j] = m.rep().get(i, j) ? 1 : 0;
  return g;
}

/// Rank over GF(2) of the columns of g selected by mask.
inline std::size_t rank(const Grid& g, std::uint64_t mask) {
  if (g.empty()) return 0;
  std::vector<std::vector<int>> a;
  for (const auto& row : g) {
    std::vector<int> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (mask >> j & 1) r.push_back(row[j]);
    a.push_back(r);
  }
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != rk && a[i][c])
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[rk][j];
    ++rk;
  }
  return rk;
}

inline std::uint64_t full(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline std::size_t lambda(const Grid& g, std::size_t n, std::uint64_t a) {
  return rank(g, a) + rank(g, full(n) & ~a) - rank(g, full(n));
}

/// Minimal dependent sets by subset enumeration.
inline std::vector<std::uint64_t> circuits(const Grid& g, std::size_t n) {
  std::vector<std::uint64_t> dependent_minimal;
  std::vector<std::uint64_t> order;
  for (std::uint64_t s = 1; s <= full(n); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
  for (std::uint64_t s : order) {
    if (rank(g, s) == static_cast<std::size_t>(std::popcount(s))) continue;
    bool minimal = true;
    for (std::uint64_t c : dependent_minimal)
      if ((c & s) == c) {
        minimal = false;
        break;
      }
    if (minimal) dependent_minimal.push_back(s);
  }
  std::sort(dependent_minimal.begin(), dependent_minimal.end());
  return dependent_minimal;
}

/// Cocircuits: complements of hyperplanes, i.e. minimal sets meeting every basis.
inline std::vector<std::uint64_t> cocircuits(const Grid& g, std::size_t n) {
  const std::size_t r = rank(g, full(n));
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= full(n); ++s) {
    if (rank(g, full(n) & ~s) == r) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j)
      if ((s >> j & 1) && rank(g, full(n) & ~(s & ~(std::uint64_t{1} << j))) < r) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

/// Brute-force k-connectivity in the sense of Tutte: no j-separation for j < n_conn.
inline bool n_connected(const Grid& g, std::size_t n, std::size_t n_conn) {
  for (std::uint64_t a = 1; a < full(n); ++a) {
    const std::size_t sa = static_cast<std::size_t>(std::popcount(a));
    for (std::size_t j = 1; j < n_conn; ++j)
      if (sa >= j && n - sa >= j && lambda(g, n, a) <= j - 1) return false;
  }
  return true;
}

/// Random [I_r | D] matroid (may be neither simple nor cosimple).
inline matdec::BinaryMatroid random_matroid(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  matdec::gf2::Matrix m(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    m.set(i, i, true);
    for (std::size_t j = r; j < n; ++j) m.set(i, j, rng() & 1);
  }
  return matdec::BinaryMatroid::from_matrix(m);
}

struct Instance {
  matdec::BinaryMatroid n;
  std::uint64_t a = 0;  // side of an exact 3-separation
};

/// Simple, cosimple, with an exact 3-separation chosen uniformly among all of
/// them. `special` additionally requires A to be a union of circuits and of
/// cocircuits.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max, bool special = false) {
  for (;;) {
    const std::size_t n = n_min + rng() % (n_max - n_min + 1);
    const std::size_t r = 3 + rng() % (n - 5);
    matdec::BinaryMatroid m = random_matroid(rng, n, r);
    if (m.rank() != r || !matdec::is_simple(m) || !matdec::is_cosimple(m)) continue;
    const Grid g = grid_of(m);
    std::vector<std::uint64_t> sides;
    for (std::uint64_t a = 2; a < full(n); a += 2) {  // position 0 always in B
      const auto sa = static_cast<std::size_t>(std::popcount(a));
      if (sa < 3 || n - sa < 3 || lambda(g, n, a) != 2) continue;
      if (special && !(matdec::side_is_union_of_circuits_mask(m, a) && matdec::side_is_union_of_cocircuits_mask(m, a)))
        continue;
      sides.push_back(a);
    }
    if (sides.empty()) continue;
    return {m, sides[rng() % sides.size()]};
  }
}

}  // namespace oracle
