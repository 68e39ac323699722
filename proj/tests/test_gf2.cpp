#include <doctest.h>

#include <random>
#include <set>

#include "matdec/gf2.hpp"
#include "oracle.hpp"

using namespace matdec;
using namespace matdec::gf2;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
  return m;
}

oracle::Grid to_grid(const Matrix& m) {
  oracle::Grid g(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.get(i, j);
  return g;
}

}  // namespace

TEST_CASE("vector string round trip and arithmetic") {
  const Vector v = Vector::from_string("0110");
  CHECK(v.size() == 4);
  CHECK(v.to_string() == "0110");
  CHECK(v.weight() == 2);
  CHECK(v.support() == std::vector<std::size_t>{1, 2});
  CHECK((v ^ Vector::from_string("0101")).to_string() == "0011");
  CHECK(v.dot(Vector::from_string("0100")));
  CHECK_FALSE(v.dot(Vector::from_string("0110")));
  CHECK(Vector::from_word(v.to_word(), 4) == v);
  CHECK_THROWS_AS(Vector::from_string("01x"), Error);
}

TEST_CASE("vectors wider than one word") {
  Vector v(130);
  v.set(0, true);
  v.set(129, true);
  CHECK(v.weight() == 2);
  CHECK(v.support() == std::vector<std::size_t>{0, 129});
  v.flip(129);
  CHECK(v.weight() == 1);
}

TEST_CASE("rank matches textbook elimination on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 12;
    const Matrix m = random_matrix(rng, r, c);
    CHECK(rank(m) == oracle::rank(to_grid(m), oracle::full(c)));
  }
}

TEST_CASE("rref has unit pivot columns and preserves the row space") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10);
    const Rref rr = rref(m);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      for (std::size_t k = 0; k < rr.reduced.rows(); ++k) CHECK(rr.reduced.get(k, rr.pivots[i]) == (k == i));
    // Row spaces agree: stacking adds no rank.
    Matrix stacked = m;
    for (std::size_t i = 0; i < rr.reduced.rows(); ++i) stacked = stacked.with_row(rr.reduced.row(i));
    CHECK(rank(stacked) == rank(m));
  }
}

TEST_CASE("null space basis is annihilated and has the right dimension") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10);
    const auto ns = null_space_basis(m);
    CHECK(ns.size() == m.cols() - rank(m));
    for (const auto& v : ns) CHECK(m.multiply(v).is_zero());
  }
}

TEST_CASE("span enumeration visits each vector once") {
  const std::vector<Word> basis = {0b001, 0b010, 0b100};
  std::set<Word> seen;
  for (Word w : span_enumerate_words(basis)) seen.insert(w);
  CHECK(seen.size() == 8);
  const std::vector<Word> big(30, 1);
  CHECK_THROWS_AS(span_enumerate_words(big, 1 << 10), Error);
}

TEST_CASE("XorBasis reduces to canonical coset representatives") {
  XorBasis b;
  CHECK(b.insert(0b0110));
  CHECK(b.insert(0b0011));
  CHECK_FALSE(b.insert(0b0101));
  CHECK(b.size() == 2);
  CHECK(b.contains(0b0101));
  CHECK(b.reduce(0b1000) == b.reduce(0b1110));
  CHECK(b.reduce(0b1000) != b.reduce(0b0001));
}

TEST_CASE("matrix shape helpers") {
  const Matrix m = Matrix::from_rows({"101", "011"});
  CHECK(m.transpose().to_strings() == std::vector<std::string>{"10", "01", "11"});
  CHECK(Matrix::identity(2).hstack(m).to_strings() == std::vector<std::string>{"10101", "01011"});
  CHECK(m.with_column(Vector::from_string("11")).to_strings() == std::vector<std::string>{"1011", "0111"});
  CHECK_THROWS_AS(Matrix::from_rows({"10", "1"}), Error);
}
