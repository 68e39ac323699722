#pragma once

// Dense GF(2) linear algebra on bit-packed words. Every arithmetic operation in
// the library bottoms out here.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matdec/errors.hpp"

namespace matdec::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t len);

  /// "0110" -> bits 0..3 = 0,1,1,0. Characters other than 0/1 throw ParseError.
  static Vector from_string(std::string_view bits);
  /// Low `len` bits of `word`; len <= 64.
  static Vector from_word(Word word, std::size_t len);

  std::size_t size() const noexcept { return len_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  Vector& operator^=(const Vector& other);
  friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }

  bool dot(const Vector& other) const;
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::vector<std::size_t> support() const;
  std::string to_string() const;

  /// Only valid when size() <= 64.
  Word to_word() const;

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Each string is one row; all rows must have equal length.
  static Matrix from_rows(std::span<const std::string_view> rows);
  static Matrix from_rows(std::initializer_list<std::string_view> rows);
  static Matrix from_row_vectors(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_column_vectors(std::span<const Vector> cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void xor_row_into(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  Matrix transpose() const;
  Vector multiply(const Vector& v) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  /// [this | other]
  Matrix hstack(const Matrix& other) const;
  Matrix with_row(const Vector& row) const;
  Matrix with_column(const Vector& col) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vector> null_space_basis(const Matrix& m);
/// Nonzero rows of rref(m).
std::vector<Vector> row_space_basis(const Matrix& m);

/// Every vector in the span of `basis`, zero first, each exactly once, in
/// Gray-code order. Constructing one over more than `cap` vectors throws
/// DimensionCapExceeded.
template <typename T>
class SpanRange {
 public:
  SpanRange(std::span<const T> basis, T zero, std::size_t cap)
      : basis_(basis.begin(), basis.end()), zero_(std::move(zero)) {
    if (basis_.size() >= 63 || (std::size_t{1} << basis_.size()) > cap) {
      throw Error(ErrorKind::DimensionCapExceeded,
                  "span of dimension " + std::to_string(basis_.size()) +
                      " exceeds enumeration cap " + std::to_string(cap));
    }
  }

  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const SpanRange* owner, std::uint64_t index, T current)
        : owner_(owner), index_(index), current_(std::move(current)) {}

    const T& operator*() const { return current_; }
    iterator& operator++() {
      ++index_;
      if (index_ < (std::uint64_t{1} << owner_->basis_.size())) {
        current_ ^= owner_->basis_[static_cast<std::size_t>(std::countr_zero(index_))];
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const SpanRange* owner_ = nullptr;
    std::uint64_t index_ = 0;
    T current_{};
  };

  iterator begin() const { return iterator(this, 0, zero_); }
  iterator end() const { return iterator(this, std::uint64_t{1} << basis_.size(), zero_); }
  std::uint64_t size() const { return std::uint64_t{1} << basis_.size(); }

 private:
  std::vector<T> basis_;
  T zero_;
};

inline constexpr std::size_t kDefaultSpanCap = std::size_t{1} << 24;

SpanRange<Vector> span_enumerate(std::span<const Vector> basis, std::size_t cap = kDefaultSpanCap);

/// Packed-word span; every basis vector must fit in one word.
inline SpanRange<Word> span_enumerate_words(std::span<const Word> basis,
                                            std::size_t cap = kDefaultSpanCap) {
  return SpanRange<Word>(basis, Word{0}, cap);
}

/// Incremental row-reduced basis of single-word vectors. Pivot bits are unique
/// to their basis vector, so reduce() yields a canonical coset representative.
class XorBasis {
 public:
  /// Returns true if `v` was independent of the current basis (and inserts it).
  bool insert(Word v);
  Word reduce(Word v) const;
  bool contains(Word v) const { return reduce(v) == 0; }
  std::size_t size() const noexcept { return count_; }
  Word pivot_mask() const noexcept { return pivot_mask_; }

 private:
  std::array<Word, kWordBits> by_pivot_{};
  Word pivot_mask_ = 0;
  std::size_t count_ = 0;
};

/// Rank of the columns selected by `mask` (bit i selects columns[i]).
std::size_t rank_of_mask(std::span<const Word> columns, Word mask);

}  // namespace matdec::gf2
