#include "matdec/gf2.hpp"

#include <algorithm>

namespace matdec::gf2 {

namespace {

Word tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

Vector Vector::from_string(std::string_view bits) {
  Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::ParseError,
                  "bit string '" + std::string(bits) + "' has a non-binary character at " +
                      std::to_string(i));
    }
  }
  return v;
}

Vector Vector::from_word(Word word, std::size_t len) {
  if (len > kWordBits) throw Error(ErrorKind::LengthMismatch, "from_word: length > 64");
  Vector v(len);
  if (len > 0) v.words_[0] = word & tail_mask(len);
  return v;
}

void Vector::set(std::size_t i, bool value) {
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

Vector& Vector::operator^=(const Vector& other) {
  if (other.len_ != len_) throw Error(ErrorKind::LengthMismatch, "vector xor of unequal lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool Vector::dot(const Vector& other) const {
  if (other.len_ != len_) throw Error(ErrorKind::LengthMismatch, "dot of unequal lengths");
  unsigned parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    parity ^= static_cast<unsigned>(std::popcount(words_[i] & other.words_[i]) & 1);
  }
  return parity != 0;
}

std::size_t Vector::weight() const noexcept {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (Word w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::string Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Word Vector::to_word() const {
  if (len_ > kWordBits) throw Error(ErrorKind::LengthMismatch, "to_word: length > 64");
  return words_.empty() ? 0 : words_[0];
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  // Lexicographic on the bit string, position 0 most significant.
  for (std::size_t i = 0; i < a.len_; ++i) {
    if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Matrix Matrix::from_rows(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                      " entries, expected " + std::to_string(cols));
    }
    const Vector v = Vector::from_string(rows[r]);
    std::copy(v.words().begin(), v.words().end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.stride_));
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

Matrix Matrix::from_row_vectors(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::LengthMismatch, "row vector length mismatch");
    std::copy(rows[r].words().begin(), rows[r].words().end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.stride_));
  }
  return m;
}

Matrix Matrix::from_column_vectors(std::span<const Vector> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::LengthMismatch, "column vector length mismatch");
    for (std::size_t r : cols[c].support()) m.set(r, c, true);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * stride_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  if (value) {
    w |= bit;
  } else {
    w &= ~bit;
  }
}

Vector Matrix::row(std::size_t r) const {
  std::vector<Word> words(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * stride_));
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((words[c / kWordBits] >> (c % kWordBits)) & 1U) v.set(c, true);
  }
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r, true);
  }
  return v;
}

void Matrix::xor_row_into(std::size_t dst, std::size_t src) {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool Matrix::row_is_zero(std::size_t r) const {
  const Word* p = data_.data() + r * stride_;
  return std::all_of(p, p + stride_, [](Word w) { return w == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

Vector Matrix::multiply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::LengthMismatch, "matrix-vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned parity = 0;
    for (std::size_t i = 0; i < stride_; ++i) {
      parity ^= static_cast<unsigned>(std::popcount(data_[r * stride_ + i] & v.words()[i]) & 1);
    }
    if (parity) out.set(r, true);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (get(r, cols[j])) m.set(r, j, true);
    }
  }
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * stride_), stride_,
                m.data_.begin() + static_cast<std::ptrdiff_t>(i * stride_));
  }
  return m;
}

Matrix Matrix::hstack(const Matrix& other) const {
  if (other.rows_ != rows_) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) m.set(r, c, true);
    }
    for (std::size_t c = 0; c < other.cols_; ++c) {
      if (other.get(r, c)) m.set(r, cols_ + c, true);
    }
  }
  return m;
}

Matrix Matrix::with_row(const Vector& row) const {
  if (row.size() != cols_) throw Error(ErrorKind::LengthMismatch, "appended row length mismatch");
  Matrix m(rows_ + 1, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(row.words().begin(), row.words().end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(rows_ * stride_));
  return m;
}

Matrix Matrix::with_column(const Vector& col) const {
  if (col.size() != rows_) throw Error(ErrorKind::LengthMismatch, "appended column length mismatch");
  Matrix m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) m.set(r, c, true);
    }
    if (col.get(r)) m.set(r, cols_, true);
  }
  return m;
}

std::vector<std::string> Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
  return out;
}

// ---------------------------------------------------------------- elimination

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, lead);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != lead && a.get(r, c)) a.xor_row_into(r, lead);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> null_space_basis(const Matrix& m) {
  const Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      if (red.reduced.get(i, free)) v.set(red.pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> row_space_basis(const Matrix& m) {
  const Rref red = rref(m);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) basis.push_back(red.reduced.row(i));
  return basis;
}

SpanRange<Vector> span_enumerate(std::span<const Vector> basis, std::size_t cap) {
  const std::size_t len = basis.empty() ? 0 : basis.front().size();
  for (const Vector& v : basis) {
    if (v.size() != len) throw Error(ErrorKind::LengthMismatch, "span basis vectors differ in length");
  }
  return SpanRange<Vector>(basis, Vector(len), cap);
}

// ---------------------------------------------------------------- word kernels

bool XorBasis::insert(Word v) {
  v = reduce(v);
  if (v == 0) return false;
  const unsigned p = static_cast<unsigned>(std::bit_width(v) - 1);
  for (Word mask = pivot_mask_; mask != 0; mask &= mask - 1) {
    Word& b = by_pivot_[static_cast<std::size_t>(std::countr_zero(mask))];
    if ((b >> p) & 1U) b ^= v;
  }
  by_pivot_[p] = v;
  pivot_mask_ |= Word{1} << p;
  ++count_;
  return true;
}

Word XorBasis::reduce(Word v) const {
  for (Word hits = v & pivot_mask_; hits != 0; hits = v & pivot_mask_) {
    v ^= by_pivot_[static_cast<std::size_t>(std::countr_zero(hits))];
  }
  return v;
}

std::size_t rank_of_mask(std::span<const Word> columns, Word mask) {
  XorBasis basis;
  for (; mask != 0; mask &= mask - 1) {
    basis.insert(columns[static_cast<std::size_t>(std::countr_zero(mask))]);
  }
  return basis.size();
}

}  // namespace matdec::gf2
