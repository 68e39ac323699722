#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "matdec/catalog.hpp"
#include "matdec/growth.hpp"
#include "matdec/minor.hpp"
#include "oracle.hpp"

using namespace matdec;
using gf2::Vector;

namespace {

/// m with its columns permuted and ids reassigned through `perm`.
BinaryMatroid relabel(const BinaryMatroid& m, const std::vector<std::size_t>& perm) {
  gf2::Matrix rep(m.rank(), m.size());
  std::vector<ElementId> ids(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < m.rank(); ++i) rep.set(i, perm[j], m.rep().get(i, j));
    ids[perm[j]] = make_id(static_cast<std::uint32_t>(100 + j));
  }
  return BinaryMatroid::from_matrix(rep, ids);
}

bool maps_circuits(const BinaryMatroid& a, const BinaryMatroid& b, const Bijection& f) {
  std::set<GroundSubset> cb;
  for (const auto& c : circuits(b)) cb.insert(c.elements);
  const auto ca = circuits(a);
  if (ca.size() != cb.size()) return false;
  for (const auto& c : ca) {
    GroundSubset img;
    for (ElementId x : c.elements)
      img.push_back(std::lower_bound(f.begin(), f.end(), std::make_pair(x, ElementId{}))->second);
    if (!cb.count(normalized(img))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("extension and coextension shapes") {
  const BinaryMatroid& r12 = builtin("R12");
  const BinaryMatroid e = extend(r12, Vector::from_string("001100"));
  CHECK(e.size() == 13);
  CHECK(e.rank() == 6);
  CHECK(same_matroid(delete_elements(e, {r12.fresh_id()}), r12));
  const BinaryMatroid c = coextend(r12, Vector::from_string("001100"));
  CHECK(c.size() == 13);
  CHECK(c.rank() == 7);
  CHECK(same_matroid(contract_elements(c, {r12.fresh_id()}), r12));
  CHECK_THROWS_AS(extend(r12, Vector::from_string("0011")), Error);
  CHECK_THROWS_AS(coextend(r12, Vector::from_string("0011001")), Error);
}

TEST_CASE("extension and coextension are dual operations") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 4 + rng() % 6, r = 1 + rng() % (n - 1);
    const BinaryMatroid m = oracle::random_matroid(rng, n, r);
    if (m.rank() != r) continue;
    Vector v(r);
    for (std::size_t i = 0; i < r; ++i) v.set(i, rng() & 1);
    const ElementId e = m.fresh_id();
    CHECK(same_matroid(dual(extend(m, v, e)), coextend(dual(m), v, e)));
  }
}

TEST_CASE("R12 has 51 simple extensions, 4 of them regular, in 2 classes") {
  const BinaryMatroid& r12 = builtin("R12");
  const auto cands = simple_extension_candidates(r12);
  CHECK(cands.size() == 51);
  std::vector<std::string> regular;
  std::vector<BinaryMatroid> results;
  for (const auto& c : cands)
    if (is_regular(c.result)) {
      regular.push_back(c.v->to_string());
      results.push_back(c.result);
    }
  CHECK(regular == std::vector<std::string>{"000011", "001100", "110000", "110011"});
  const auto classes = iso_classes(results);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].members == std::vector<std::size_t>{0, 2, 3});
  CHECK(classes[1].members == std::vector<std::size_t>{1});
  CHECK(cosimple_coextension_candidates(r12).size() == 51);
}

TEST_CASE("two-element growths recover N and both parents") {
  const BinaryMatroid& n = builtin("W3");
  const auto all = two_element_growths(n);
  CHECK(!all.empty());
  std::size_t visited = 0;
  for_each_two_element_growth(n, [&](const GrowthCandidate&) { ++visited; });
  CHECK(visited == all.size());
  for (const auto& g : all) {
    const ElementId e = *g.e, f = *g.f;
    CHECK(same_matroid(minor(g.result, {e}, {f}), n));
    CHECK(same_matroid(contract_elements(g.result, {f}), extend(n, *g.v, e)));
    CHECK(same_matroid(delete_elements(g.result, {e}), coextend(n, *g.w, f)));
    CHECK(is_simple(g.result));
    CHECK(is_cosimple(g.result));
  }
}

TEST_CASE("isomorphism finds relabellings and rejects non-isomorphic pairs") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + rng() % 6, r = 2 + rng() % (n - 3);
    const BinaryMatroid m = oracle::random_matroid(rng, n, r);
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const BinaryMatroid p = relabel(m, perm);
    const auto f = are_isomorphic(m, p);
    REQUIRE(f);
    CHECK(maps_circuits(m, p, *f));
  }
  CHECK_FALSE(are_isomorphic(builtin("F7"), builtin("F7dual")));
  CHECK_FALSE(are_isomorphic(builtin("R12"), builtin("Z")));
  CHECK(are_isomorphic(builtin("R12"), dual(builtin("R12"))));
}

TEST_CASE("non-simple bases are rejected by the enumerators") {
  const auto par = BinaryMatroid::from_matrix(gf2::Matrix::from_rows({"1011", "0111"}));
  CHECK_THROWS_AS(simple_extension_candidates(par), Error);
}
