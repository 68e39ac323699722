#include <doctest.h>

#include <random>

#include "matdec/catalog.hpp"
#include "matdec/growth.hpp"
#include "matdec/minor.hpp"
#include "oracle.hpp"

using namespace matdec;

namespace {

/// Tries every (delete, contract) split of the right sizes.
bool brute_has_minor(const BinaryMatroid& m, const BinaryMatroid& t) {
  if (t.size() > m.size() || t.rank() > m.rank() || t.corank() > m.corank()) return false;
  const std::size_t ncon = m.rank() - t.rank(), ndel = m.corank() - t.corank();
  for (ElementMask con = 0; con <= m.full_mask(); ++con) {
    if (static_cast<std::size_t>(std::popcount(con)) != ncon || m.rank_of_mask(con) != ncon) continue;
    const ElementMask rest = m.full_mask() & ~con;
    for (ElementMask del = rest;; del = (del - 1) & rest) {
      if (static_cast<std::size_t>(std::popcount(del)) == ndel) {
        const BinaryMatroid mn = minor(m, m.subset_of(del), m.subset_of(con));
        if (mn.rank() == t.rank() && are_isomorphic(mn, t)) return true;
      }
      if (del == 0) break;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("regularity of catalog matroids") {
  CHECK(is_regular(builtin("R12")));
  CHECK(is_regular(builtin("W4")));
  CHECK_FALSE(is_regular(builtin("F7")));
  CHECK_FALSE(is_regular(builtin("F7dual")));
  CHECK_FALSE(is_regular(builtin("AG32")));
  CHECK_FALSE(is_regular(builtin("Q13_sec5")));
}

TEST_CASE("minor witnesses are valid") {
  for (const char* key : {"AG32", "Q13_sec5", "X", "Z"}) {
    const BinaryMatroid& m = builtin(key);
    for (const char* t : {"F7", "F7dual"}) {
      const auto w = has_minor(m, builtin(t));
      if (!w) continue;
      const BinaryMatroid mn = minor(m, w->del, w->con);
      CHECK(are_isomorphic(mn, builtin(t)));
    }
  }
  const auto self = has_minor(builtin("F7"), builtin("F7"));
  REQUIRE(self);
  CHECK(self->con.empty());
  CHECK(self->del.empty());
}

TEST_CASE("minor search agrees with brute force on small matroids") {
  std::mt19937_64 rng(51);
  const BinaryMatroid targets[] = {builtin("F7"), builtin("F7dual"), builtin("W3")};
  int positives = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 7 + rng() % 3, r = 3 + rng() % (n - 6);
    const BinaryMatroid m = oracle::random_matroid(rng, n, r);
    for (const auto& target : targets) {
      const bool fast = has_minor(m, target).has_value();
      REQUIRE(fast == brute_has_minor(m, target));
      positives += fast;
    }
  }
  CHECK(positives > 10);
}

TEST_CASE("minor containment is dual and transitive") {
  std::mt19937_64 rng(52);
  const BinaryMatroid& f7 = builtin("F7");
  const BinaryMatroid f7d = dual(f7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 8 + rng() % 4, r = 3 + rng() % (n - 6);
    const BinaryMatroid m = oracle::random_matroid(rng, n, r);
    CHECK(has_minor(m, f7).has_value() == has_minor(dual(m), f7d).has_value());
    // M' = M \ x or M / x: an F7 minor of M' is one of M.
    const ElementId x = m.elements()[rng() % m.size()];
    const BinaryMatroid mp = (rng() & 1) ? delete_elements(m, {x}) : contract_elements(m, {x});
    if (has_minor(mp, f7)) CHECK(has_minor(m, f7));
  }
}

TEST_CASE("class membership and targets above the size cap") {
  const MinorClass& reg = regular_class();
  CHECK(reg.excluded.size() == 2);
  CHECK(in_class(builtin("F7"), all_binary_class()));
  CHECK_FALSE(in_class(builtin("F7"), reg));
  CHECK_THROWS_AS(has_minor(builtin("Q13_sec5"), builtin("R12")), Error);
}
