#include "matdec/matroid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matdec {

using gf2::Matrix;
using gf2::Word;

GroundSubset make_subset(std::initializer_list<std::uint32_t> ids) {
  GroundSubset s;
  for (std::uint32_t v : ids) s.push_back(ElementId{v});
  return normalized(std::move(s));
}

GroundSubset normalized(GroundSubset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string format_subset(const GroundSubset& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << id_value(s[i]);
  }
  out << '}';
  return out.str();
}

namespace {

inline std::size_t popcount(ElementMask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline std::size_t lowest(ElementMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

/// Standard form of `m` (rows may be dependent): basis chosen greedily from
/// `preferred` first, then remaining columns ascending; rep = R_B^{-1} R.
std::pair<Matrix, std::vector<std::size_t>> standard_form(const Matrix& m,
                                                          std::span<const std::size_t> preferred) {
  const gf2::Rref red = gf2::rref(m);
  const std::size_t r = red.pivots.size();
  std::vector<std::size_t> rows(r);
  for (std::size_t i = 0; i < r; ++i) rows[i] = i;
  const Matrix full = red.reduced.select_rows(rows);
  if (r == 0) return {full, {}};

  std::vector<std::size_t> basis;
  std::vector<bool> taken(m.cols(), false);
  gf2::XorBasis span;
  auto column_word = [&](std::size_t c) {
    Word w = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (full.get(i, c)) w |= Word{1} << i;
    }
    return w;
  };
  auto consider = [&](std::size_t c) {
    if (taken[c] || basis.size() == r) return;
    if (span.insert(column_word(c))) {
      basis.push_back(c);
      taken[c] = true;
    }
  };
  for (std::size_t c : preferred) consider(c);
  for (std::size_t c = 0; c < m.cols(); ++c) consider(c);
  std::sort(basis.begin(), basis.end());

  // Gauss-Jordan on [R_B | R]: brings R_B to the identity, rows in basis order.
  Matrix work = full;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = basis[i];
    std::size_t pivot = i;
    while (pivot < r && !work.get(pivot, c)) ++pivot;
    work.swap_rows(pivot, i);
    for (std::size_t row = 0; row < r; ++row) {
      if (row != i && work.get(row, c)) work.xor_row_into(row, i);
    }
  }
  return {work, basis};
}

template <typename RankFn>
std::optional<ElementMask> through_within(const BinaryMatroid& m, std::size_t pos, ElementMask within,
                                          RankFn rank) {
  const ElementMask e = ElementMask{1} << pos;
  within |= e;
  if (rank(within & ~e) != rank(within)) return std::nullopt;
  std::vector<std::size_t> order;
  for (ElementMask w = within & ~e; w != 0; w &= w - 1) order.push_back(lowest(w));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.elements()[a] < m.elements()[b];
  });
  ElementMask t = within;
  for (std::size_t x : order) {
    const ElementMask candidate = t & ~(ElementMask{1} << x);
    if (rank(candidate & ~e) == rank(candidate)) t = candidate;
  }
  return t;
}

std::vector<ElementMask> restricted_cycles_with(const BinaryMatroid& m, ElementMask must, ElementMask within) {
  std::vector<std::size_t> positions;
  for (ElementMask w = within; w != 0; w &= w - 1) positions.push_back(lowest(w));
  const Matrix restricted = m.rep().select_columns(positions);
  std::vector<Word> basis;
  for (const gf2::Vector& v : gf2::null_space_basis(restricted)) {
    ElementMask mask = 0;
    for (std::size_t k : v.support()) mask |= ElementMask{1} << positions[k];
    basis.push_back(mask);
  }
  std::vector<ElementMask> out;
  for (Word s : gf2::span_enumerate_words(basis)) {
    if (s == 0 || (s & must) != must) continue;
    if (is_circuit_mask(m, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementMask> minimal_supports(std::span<const Word> basis, std::size_t cap,
                                          const auto& is_minimal) {
  std::vector<ElementMask> out;
  for (Word s : gf2::span_enumerate_words(basis, cap)) {
    if (s != 0 && is_minimal(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](ElementMask a, ElementMask b) {
    const auto pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<Circuit> to_circuits(const BinaryMatroid& m, const std::vector<ElementMask>& masks, CircuitKind kind) {
  std::vector<Circuit> out;
  out.reserve(masks.size());
  for (ElementMask s : masks) out.push_back(Circuit{kind, normalized(m.subset_of(s))});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- construction

BinaryMatroid BinaryMatroid::from_matrix(const Matrix& m, std::optional<std::vector<ElementId>> labels,
                                         std::string name) {
  if (m.cols() > kMaxGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge, "at most 64 elements are supported");
  }
  std::vector<ElementId> elements;
  if (labels) {
    if (labels->size() != m.cols()) {
      throw Error(ErrorKind::LengthMismatch, "label count " + std::to_string(labels->size()) +
                                                  " differs from column count " + std::to_string(m.cols()));
    }
    elements = std::move(*labels);
  } else {
    for (std::size_t j = 0; j < m.cols(); ++j) elements.push_back(ElementId{static_cast<std::uint32_t>(j + 1)});
  }
  auto [rep, basis] = standard_form(m, {});
  if (rep.rows() == 0) rep = Matrix(0, m.cols());
  BinaryMatroid out;
  out.name_ = std::move(name);
  out.rep_ = std::move(rep);
  out.basis_ = std::move(basis);
  out.elements_ = std::move(elements);
  out.derive();
  return out;
}

BinaryMatroid BinaryMatroid::from_standard(Matrix rep, std::vector<std::size_t> basis,
                                           std::vector<ElementId> elements, std::string name,
                                           std::uint32_t next_id) {
  if (basis.size() != rep.rows()) {
    throw Error(ErrorKind::NonStandardForm, "basis size differs from row count");
  }
  if (elements.size() != rep.cols()) {
    throw Error(ErrorKind::LengthMismatch, "element count differs from column count");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] >= rep.cols() || (i > 0 && basis[i] <= basis[i - 1])) {
      throw Error(ErrorKind::NonStandardForm, "basis positions must ascend within the ground set");
    }
    for (std::size_t row = 0; row < rep.rows(); ++row) {
      if (rep.get(row, basis[i]) != (row == i)) {
        throw Error(ErrorKind::NonStandardForm,
                    "column " + std::to_string(basis[i]) + " is not unit vector " + std::to_string(i));
      }
    }
  }
  BinaryMatroid out;
  out.name_ = std::move(name);
  out.rep_ = std::move(rep);
  out.basis_ = std::move(basis);
  out.elements_ = std::move(elements);
  out.next_id_ = next_id;
  out.derive();
  return out;
}

void BinaryMatroid::derive() {
  const std::size_t n = elements_.size();
  if (n > kMaxGroundSet) throw Error(ErrorKind::GroundSetTooLarge, "at most 64 elements are supported");
  {
    std::vector<ElementId> sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::DuplicateLabel, "element labels must be distinct");
    }
    if (!sorted.empty()) next_id_ = std::max(next_id_, id_value(sorted.back()) + 1);
  }
  nonbasis_.clear();
  for (std::size_t j = 0, b = 0; j < n; ++j) {
    if (b < basis_.size() && basis_[b] == j) {
      ++b;
    } else {
      nonbasis_.push_back(j);
    }
  }
  columns_.assign(n, 0);
  row_masks_.assign(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rep_.get(i, j)) {
        columns_[j] |= Word{1} << i;
        row_masks_[i] |= ElementMask{1} << j;
      }
    }
  }
  dual_columns_.assign(n, 0);
  for (std::size_t k = 0; k < nonbasis_.size(); ++k) {
    dual_columns_[nonbasis_[k]] = Word{1} << k;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (rep_.get(i, nonbasis_[k])) dual_columns_[basis_[i]] |= Word{1} << k;
    }
  }
}

BinaryMatroid BinaryMatroid::renamed(std::string name) const {
  BinaryMatroid out = *this;
  out.name_ = std::move(name);
  return out;
}

bool BinaryMatroid::is_basis_position(std::size_t pos) const {
  return std::binary_search(basis_.begin(), basis_.end(), pos);
}

Matrix BinaryMatroid::d_block() const { return rep_.select_columns(nonbasis_); }

bool BinaryMatroid::contains(ElementId id) const noexcept {
  return std::find(elements_.begin(), elements_.end(), id) != elements_.end();
}

std::size_t BinaryMatroid::position_of(ElementId id) const {
  auto it = std::find(elements_.begin(), elements_.end(), id);
  if (it == elements_.end()) {
    throw Error(ErrorKind::UnknownElement,
                "element " + std::to_string(id_value(id)) + " is not in " + (name_.empty() ? "the matroid" : name_));
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

ElementMask BinaryMatroid::mask_of(std::span<const ElementId> ids) const {
  ElementMask mask = 0;
  for (ElementId id : ids) mask |= ElementMask{1} << position_of(id);
  return mask;
}

GroundSubset BinaryMatroid::subset_of(ElementMask mask) const {
  GroundSubset out;
  for (; mask != 0; mask &= mask - 1) out.push_back(elements_[lowest(mask)]);
  std::sort(out.begin(), out.end());
  return out;
}

ElementMask BinaryMatroid::full_mask() const noexcept {
  return size() == 64 ? ~ElementMask{0} : (ElementMask{1} << size()) - 1;
}

std::size_t BinaryMatroid::rank_of_mask(ElementMask mask) const { return gf2::rank_of_mask(columns_, mask); }

std::size_t BinaryMatroid::corank_of_mask(ElementMask mask) const {
  return popcount(mask) + rank_of_mask(full_mask() & ~mask) - rank();
}

std::size_t rank_of(const BinaryMatroid& m, const GroundSubset& s) { return m.rank_of_mask(m.mask_of(s)); }

// ---------------------------------------------------------------- duality and minors

BinaryMatroid dual(const BinaryMatroid& m) {
  const std::size_t k = m.corank();
  Matrix rep(k, m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (Word w = m.dual_columns()[j]; w != 0; w &= w - 1) rep.set(lowest(w), j, true);
  }
  std::vector<std::size_t> basis(m.nonbasis_positions().begin(), m.nonbasis_positions().end());
  std::vector<ElementId> elements(m.elements().begin(), m.elements().end());
  std::string name = m.name();
  if (!name.empty()) {
    if (name.size() > 1 && name.back() == '*') {
      name.pop_back();
    } else {
      name += '*';
    }
  }
  return BinaryMatroid::from_standard(std::move(rep), std::move(basis), std::move(elements), std::move(name),
                                      m.next_id_value());
}

namespace {

BinaryMatroid apply_minor(const BinaryMatroid& m, ElementMask del, ElementMask con) {
  Matrix work = m.rep();
  std::vector<bool> row_alive(work.rows(), true);
  // Contract: pivot each non-loop element onto a row, then drop that row.
  for (ElementMask c = con; c != 0; c &= c - 1) {
    const std::size_t x = lowest(c);
    std::size_t pivot = work.rows();
    for (std::size_t i = 0; i < work.rows(); ++i) {
      if (row_alive[i] && work.get(i, x)) {
        pivot = i;
        break;
      }
    }
    if (pivot == work.rows()) continue;  // loop: contracting it is deleting it
    for (std::size_t i = 0; i < work.rows(); ++i) {
      if (i != pivot && row_alive[i] && work.get(i, x)) work.xor_row_into(i, pivot);
    }
    row_alive[pivot] = false;
  }
  const ElementMask removed = del | con;
  std::vector<std::size_t> keep_cols;
  std::vector<std::size_t> preferred;
  std::vector<ElementId> elements;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if ((removed >> j) & 1U) continue;
    if (m.is_basis_position(j)) preferred.push_back(keep_cols.size());
    keep_cols.push_back(j);
    elements.push_back(m.elements()[j]);
  }
  std::vector<std::size_t> keep_rows;
  for (std::size_t i = 0; i < work.rows(); ++i) {
    if (row_alive[i]) keep_rows.push_back(i);
  }
  const Matrix reduced = work.select_rows(keep_rows).select_columns(keep_cols);
  auto [rep, basis] = standard_form(reduced, preferred);
  if (rep.rows() == 0) rep = Matrix(0, keep_cols.size());
  return BinaryMatroid::from_standard(std::move(rep), std::move(basis), std::move(elements), m.name(),
                                      m.next_id_value());
}

}  // namespace

BinaryMatroid delete_elements(const BinaryMatroid& m, const GroundSubset& s) {
  return apply_minor(m, m.mask_of(s), 0);
}

BinaryMatroid contract_elements(const BinaryMatroid& m, const GroundSubset& s) {
  return apply_minor(m, 0, m.mask_of(s));
}

BinaryMatroid minor(const BinaryMatroid& m, const GroundSubset& del, const GroundSubset& con) {
  const ElementMask d = m.mask_of(del);
  const ElementMask c = m.mask_of(con);
  if ((d & c) != 0) {
    throw Error(ErrorKind::OverlappingSets, "deletion and contraction sets intersect in " +
                                                format_subset(m.subset_of(d & c)));
  }
  return apply_minor(m, d, c);
}

// ---------------------------------------------------------------- circuits

bool is_circuit_mask(const BinaryMatroid& m, ElementMask mask) {
  if (mask == 0) return false;
  const std::size_t size = popcount(mask);
  if (m.rank_of_mask(mask) != size - 1) return false;
  for (ElementMask w = mask; w != 0; w &= w - 1) {
    if (m.rank_of_mask(mask & ~(ElementMask{1} << lowest(w))) != size - 1) return false;
  }
  return true;
}

bool is_cocircuit_mask(const BinaryMatroid& m, ElementMask mask) {
  if (mask == 0) return false;
  const std::size_t size = popcount(mask);
  if (m.corank_of_mask(mask) != size - 1) return false;
  for (ElementMask w = mask; w != 0; w &= w - 1) {
    if (m.corank_of_mask(mask & ~(ElementMask{1} << lowest(w))) != size - 1) return false;
  }
  return true;
}

bool is_circuit(const BinaryMatroid& m, const GroundSubset& s) { return is_circuit_mask(m, m.mask_of(s)); }
bool is_cocircuit(const BinaryMatroid& m, const GroundSubset& s) { return is_cocircuit_mask(m, m.mask_of(s)); }

std::vector<ElementMask> circuit_masks(const BinaryMatroid& m, std::size_t cap) {
  std::vector<Word> basis;
  for (std::size_t k = 0; k < m.corank(); ++k) {
    const std::size_t j = m.nonbasis_positions()[k];
    ElementMask s = ElementMask{1} << j;
    for (Word w = m.columns()[j]; w != 0; w &= w - 1) s |= ElementMask{1} << m.basis_positions()[lowest(w)];
    basis.push_back(s);
  }
  // A nonzero cycle is a circuit exactly when its nullity is one.
  return minimal_supports(basis, cap, [&](ElementMask s) { return m.rank_of_mask(s) + 1 == popcount(s); });
}

std::vector<ElementMask> cocircuit_masks(const BinaryMatroid& m, std::size_t cap) {
  const std::vector<Word> basis(m.row_masks().begin(), m.row_masks().end());
  const ElementMask full = m.full_mask();
  // A nonzero cocycle is a cocircuit exactly when its complement is a hyperplane.
  return minimal_supports(basis, cap,
                          [&](ElementMask s) { return m.rank_of_mask(full & ~s) + 1 == m.rank(); });
}

std::vector<Circuit> circuits(const BinaryMatroid& m, std::size_t cap) {
  return to_circuits(m, circuit_masks(m, cap), CircuitKind::Circuit);
}

std::vector<Circuit> cocircuits(const BinaryMatroid& m, std::size_t cap) {
  return to_circuits(m, cocircuit_masks(m, cap), CircuitKind::Cocircuit);
}

std::optional<ElementMask> circuit_through_within_mask(const BinaryMatroid& m, std::size_t e_pos,
                                                       ElementMask within) {
  return through_within(m, e_pos, within, [&](ElementMask s) { return m.rank_of_mask(s); });
}

std::optional<ElementMask> cocircuit_through_within_mask(const BinaryMatroid& m, std::size_t f_pos,
                                                         ElementMask within) {
  return through_within(m, f_pos, within, [&](ElementMask s) { return m.corank_of_mask(s); });
}

std::optional<Circuit> circuit_through_within(const BinaryMatroid& m, ElementId e, const GroundSubset& s) {
  const std::size_t pos = m.position_of(e);
  const ElementMask within = m.mask_of(s);
  if (((within >> pos) & 1U) == 0) {
    throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(id_value(e)) + " is not in the search set");
  }
  auto found = circuit_through_within_mask(m, pos, within);
  if (!found) return std::nullopt;
  return Circuit{CircuitKind::Circuit, m.subset_of(*found)};
}

std::optional<Circuit> cocircuit_through_within(const BinaryMatroid& m, ElementId f, const GroundSubset& s) {
  const std::size_t pos = m.position_of(f);
  const ElementMask within = m.mask_of(s);
  if (((within >> pos) & 1U) == 0) {
    throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(id_value(f)) + " is not in the search set");
  }
  auto found = cocircuit_through_within_mask(m, pos, within);
  if (!found) return std::nullopt;
  return Circuit{CircuitKind::Cocircuit, m.subset_of(*found)};
}

std::vector<ElementMask> circuits_containing_within(const BinaryMatroid& m, ElementMask must, ElementMask within) {
  return restricted_cycles_with(m, must, within | must);
}

std::vector<ElementMask> cocircuits_containing_within(const BinaryMatroid& m, ElementMask must,
                                                      ElementMask within) {
  return restricted_cycles_with(dual(m), must, within | must);
}

// ---------------------------------------------------------------- local structure

namespace {

std::vector<GroundSubset> classes_by_value(const BinaryMatroid& m, std::span<const Word> values) {
  std::map<Word, GroundSubset> groups;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (values[j] != 0) groups[values[j]].push_back(m.elements()[j]);
  }
  std::vector<GroundSubset> out;
  for (auto& [value, members] : groups) out.push_back(normalized(std::move(members)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StructureReport structure_report(const BinaryMatroid& m) {
  StructureReport out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.columns()[j] == 0) out.loops.push_back(m.elements()[j]);
    if (m.dual_columns()[j] == 0) out.coloops.push_back(m.elements()[j]);
  }
  out.loops = normalized(std::move(out.loops));
  out.coloops = normalized(std::move(out.coloops));
  out.parallel_classes = classes_by_value(m, m.columns());
  out.series_classes = classes_by_value(m, m.dual_columns());
  auto all_singletons = [](const std::vector<GroundSubset>& classes) {
    return std::all_of(classes.begin(), classes.end(), [](const GroundSubset& c) { return c.size() == 1; });
  };
  out.is_simple = out.loops.empty() && all_singletons(out.parallel_classes);
  out.is_cosimple = out.coloops.empty() && all_singletons(out.series_classes);
  return out;
}

namespace {

bool distinct_nonzero(std::span<const Word> values) {
  std::vector<Word> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return (sorted.empty() || sorted.front() != 0) && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool is_simple(const BinaryMatroid& m) { return distinct_nonzero(m.columns()); }
bool is_cosimple(const BinaryMatroid& m) { return distinct_nonzero(m.dual_columns()); }

std::vector<TriangleOrTriad> triangles_triads_through_pair(const BinaryMatroid& m, ElementId e, ElementId f) {
  if (e == f) throw Error(ErrorKind::InvalidArgument, "triangle/triad search needs two distinct elements");
  const std::size_t pe = m.position_of(e), pf = m.position_of(f);
  std::vector<TriangleOrTriad> triangles, triads;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (g == pe || g == pf) continue;
    const ElementMask s = (ElementMask{1} << pe) | (ElementMask{1} << pf) | (ElementMask{1} << g);
    const std::array<ElementId, 3> trio{e, f, m.elements()[g]};
    if (is_circuit_mask(m, s)) triangles.push_back({CircuitKind::Circuit, trio});
    if (is_cocircuit_mask(m, s)) triads.push_back({CircuitKind::Cocircuit, trio});
  }
  auto by_third = [](const TriangleOrTriad& a, const TriangleOrTriad& b) { return a.elements[2] < b.elements[2]; };
  std::sort(triangles.begin(), triangles.end(), by_third);
  std::sort(triads.begin(), triads.end(), by_third);
  triangles.insert(triangles.end(), triads.begin(), triads.end());
  return triangles;
}

bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b) {
  GroundSubset ea(a.elements().begin(), a.elements().end());
  GroundSubset eb(b.elements().begin(), b.elements().end());
  if (normalized(ea) != normalized(eb) || a.rank() != b.rank()) return false;
  return circuits(a) == circuits(b);
}

}  // namespace matdec
