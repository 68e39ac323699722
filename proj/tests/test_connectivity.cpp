#include <doctest.h>

#include <random>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "oracle.hpp"

using namespace matdec;

TEST_CASE("lambda of the R12 sides") {
  const BinaryMatroid& r12 = builtin("R12");
  CHECK(lambda(r12, make_subset({1, 2, 5, 6, 9, 10})) == 2);
  CHECK(lambda(r12, make_subset({3, 4, 7, 8, 11, 12})) == 2);
  CHECK(classify_separation(r12, make_subset({3, 4, 7, 8, 11, 12}), 3).kind == SeparationKind::ExactNonMinimal);
}

TEST_CASE("separation classification") {
  const BinaryMatroid& r12 = builtin("R12");
  // a triangle-free 3-element set in a 3-connected matroid has lambda 3
  const auto a3 = make_subset({1, 2, 3});
  const SeparationClass c3 = classify_separation(r12, a3, 3);
  CHECK(c3.lambda == oracle::lambda(oracle::grid_of(r12), 12, r12.mask_of(a3)));
  CHECK(classify_separation(r12, make_subset({1, 2}), 3).kind == SeparationKind::NotASeparation);
  CHECK(classify_separation(r12, make_subset({1, 2, 5, 6, 9, 10}), 4).kind == SeparationKind::SubExact);
  CHECK_THROWS_AS(classify_separation(r12, {}, 3), Error);
  CHECK_THROWS_AS(lambda(r12, make_subset({0, 99})), Error);
}

TEST_CASE("lambda symmetry, duality and oracle agreement, exhaustive over subsets (n <= 10)") {
  std::mt19937_64 rng(31);
  std::size_t subsets = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + rng() % 7, r = 1 + rng() % (n - 1);
    const BinaryMatroid m = oracle::random_matroid(rng, n, r);
    const BinaryMatroid d = dual(m);
    const oracle::Grid g = oracle::grid_of(m);
    const ElementMask all = m.full_mask();
    for (ElementMask s = 0; s <= all; ++s) {
      const std::size_t l = lambda_mask(m, s);
      REQUIRE(l == lambda_mask(m, all & ~s));
      REQUIRE(l == lambda_mask(d, s));
      REQUIRE(l == oracle::lambda(g, n, s));
      ++subsets;
    }
  }
  CHECK(subsets > 10000);
}

TEST_CASE("3-connectivity agrees with the separation definition") {
  std::mt19937_64 rng(32);
  int connected = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 4 + rng() % 7, r = 2 + rng() % (n - 3);
    const BinaryMatroid m = oracle::random_matroid(rng, n, r);
    const oracle::Grid g = oracle::grid_of(m);
    const bool lib = is_n_connected(m, 3);
    REQUIRE(lib == oracle::n_connected(g, n, 3));
    REQUIRE(is_n_connected(m, 2) == oracle::n_connected(g, n, 2));
    connected += lib;
  }
  // Random matroids are seldom 3-connected; the catalog supplies positive cases.
  for (const auto& key : catalog_keys()) {
    const BinaryMatroid& m = builtin(key);
    const oracle::Grid g = oracle::grid_of(m);
    const bool lib = is_n_connected(m, 3);
    CHECK_MESSAGE(lib == oracle::n_connected(g, m.size(), 3), key);
    connected += lib;
  }
  CHECK(connected > 5);
}

TEST_CASE("serial and parallel connectivity scans agree") {
  for (const char* key : {"R12", "X", "Q13_sec5", "W4"}) {
    const BinaryMatroid& m = builtin(key);
    CHECK(is_n_connected(m, 3, Execution::serial()) == is_n_connected(m, 3, Execution::parallel(4)));
  }
}

TEST_CASE("internal 4-connectivity") {
  CHECK(is_internally_4_connected(builtin("Q13_sec5")));
  CHECK_FALSE(is_internally_4_connected(builtin("R12")));
  CHECK(is_internally_4_connected(builtin("F7")));
  CHECK_THROWS_AS(is_internally_4_connected(BinaryMatroid::from_matrix(gf2::Matrix::from_rows({"1011", "0111"}))),
                  Error);
}

TEST_CASE("the cap on exhaustive scans") {
  const BinaryMatroid& q = builtin("Q13_sec5");
  CHECK_THROWS_AS(is_n_connected(q, 3, {}, 12), Error);
}

TEST_CASE("unions of circuits and cocircuits") {
  const BinaryMatroid& r12 = builtin("R12");
  const auto a = make_subset({3, 4, 7, 8, 11, 12});
  CHECK(side_is_union_of_circuits(r12, a));
  CHECK(side_is_union_of_cocircuits(r12, a));
  CHECK_FALSE(side_is_union_of_circuits(r12, make_subset({1, 2, 3})));
}
