#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matdec/gf2.hpp"

namespace matdec {

/// Stable element identity. Survives deletion, contraction, extension and
/// coextension; fresh elements get ids above every id seen in the derivation.
enum class ElementId : std::uint32_t {};

constexpr std::uint32_t id_value(ElementId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr ElementId make_id(std::uint32_t v) noexcept { return ElementId{v}; }

/// Sorted, duplicate-free set of element ids.
using GroundSubset = std::vector<ElementId>;

/// Bit i <-> element at column position i.
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSet = 64;

GroundSubset make_subset(std::initializer_list<std::uint32_t> ids);
GroundSubset normalized(GroundSubset s);
std::string format_subset(const GroundSubset& s);

enum class CircuitKind { Circuit, Cocircuit };

struct Circuit {
  CircuitKind kind = CircuitKind::Circuit;
  GroundSubset elements;

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit& a, const Circuit& b) {
    if (auto c = a.elements.size() <=> b.elements.size(); c != 0) return c;
    return a.elements <=> b.elements;
  }
};

/// A binary matroid held in standard form: column basis_positions()[i] of the
/// r x n representation is the i-th unit vector and basis positions ascend.
/// Everything else (D-block, dual) is derived from that representation.
/// Immutable after construction.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  /// Row-reduces `m` without permuting columns and drops zero rows. Labels
  /// default to 1..n.
  static BinaryMatroid from_matrix(const gf2::Matrix& m,
                                   std::optional<std::vector<ElementId>> labels = std::nullopt,
                                   std::string name = {});

  /// Adopts `rep` as-is. `basis` must list, in row order, ascending column
  /// positions whose columns are the identity; throws NonStandardForm otherwise.
  static BinaryMatroid from_standard(gf2::Matrix rep, std::vector<std::size_t> basis,
                                     std::vector<ElementId> elements, std::string name,
                                     std::uint32_t next_id = 0);

  const std::string& name() const noexcept { return name_; }
  BinaryMatroid renamed(std::string name) const;

  std::size_t rank() const noexcept { return rep_.rows(); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t corank() const noexcept { return size() - rank(); }

  const gf2::Matrix& rep() const noexcept { return rep_; }
  std::span<const ElementId> elements() const noexcept { return elements_; }
  std::span<const std::size_t> basis_positions() const noexcept { return basis_; }
  std::span<const std::size_t> nonbasis_positions() const noexcept { return nonbasis_; }
  bool is_basis_position(std::size_t pos) const;

  /// The D-block: rep restricted to nonbasis columns, rows in row order.
  gf2::Matrix d_block() const;

  /// An id not used anywhere in this matroid's derivation chain.
  ElementId fresh_id() const noexcept { return ElementId{next_id_}; }
  std::uint32_t next_id_value() const noexcept { return next_id_; }

  bool contains(ElementId id) const noexcept;
  std::size_t position_of(ElementId id) const;
  ElementMask mask_of(std::span<const ElementId> ids) const;
  GroundSubset subset_of(ElementMask mask) const;
  ElementMask full_mask() const noexcept;

  /// Column j packed over rows (bit i = row i).
  std::span<const gf2::Word> columns() const noexcept { return columns_; }
  /// Column j of the dual representation packed over nonbasis indices.
  std::span<const gf2::Word> dual_columns() const noexcept { return dual_columns_; }
  /// Row i packed over column positions.
  std::span<const ElementMask> row_masks() const noexcept { return row_masks_; }

  std::size_t rank_of_mask(ElementMask mask) const;
  std::size_t corank_of_mask(ElementMask mask) const;

  /// Structural identity: same elements in the same order and same representation.
  friend bool operator==(const BinaryMatroid& a, const BinaryMatroid& b) {
    return a.elements_ == b.elements_ && a.rep_ == b.rep_ && a.basis_ == b.basis_;
  }

 private:
  void derive();

  std::string name_;
  gf2::Matrix rep_;
  std::vector<ElementId> elements_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonbasis_;
  std::vector<gf2::Word> columns_;
  std::vector<gf2::Word> dual_columns_;
  std::vector<ElementMask> row_masks_;
  std::uint32_t next_id_ = 1;
};

std::size_t rank_of(const BinaryMatroid& m, const GroundSubset& s);

/// Representation [I_{n-r} | D^T] on the same ground set (same column order).
BinaryMatroid dual(const BinaryMatroid& m);

BinaryMatroid delete_elements(const BinaryMatroid& m, const GroundSubset& s);
BinaryMatroid contract_elements(const BinaryMatroid& m, const GroundSubset& s);
/// m / con \ del; the two sets must be disjoint.
BinaryMatroid minor(const BinaryMatroid& m, const GroundSubset& del, const GroundSubset& con);

bool is_circuit_mask(const BinaryMatroid& m, ElementMask mask);
bool is_cocircuit_mask(const BinaryMatroid& m, ElementMask mask);
bool is_circuit(const BinaryMatroid& m, const GroundSubset& s);
bool is_cocircuit(const BinaryMatroid& m, const GroundSubset& s);

/// Circuits as masks, via minimal supports of the cycle space.
std::vector<ElementMask> circuit_masks(const BinaryMatroid& m, std::size_t cap = gf2::kDefaultSpanCap);
std::vector<ElementMask> cocircuit_masks(const BinaryMatroid& m, std::size_t cap = gf2::kDefaultSpanCap);

/// Canonically sorted (size, then ids). Throws DimensionCapExceeded when the
/// cycle (cocycle) space has more than `cap` vectors.
std::vector<Circuit> circuits(const BinaryMatroid& m, std::size_t cap = gf2::kDefaultSpanCap);
std::vector<Circuit> cocircuits(const BinaryMatroid& m, std::size_t cap = gf2::kDefaultSpanCap);

/// Some circuit C with e in C within `within`, found by rank tests and greedy
/// removal in ascending id order; nullopt if e is not spanned by the rest.
std::optional<ElementMask> circuit_through_within_mask(const BinaryMatroid& m, std::size_t e_pos,
                                                       ElementMask within);
std::optional<ElementMask> cocircuit_through_within_mask(const BinaryMatroid& m, std::size_t f_pos,
                                                         ElementMask within);
std::optional<Circuit> circuit_through_within(const BinaryMatroid& m, ElementId e, const GroundSubset& s);
std::optional<Circuit> cocircuit_through_within(const BinaryMatroid& m, ElementId f, const GroundSubset& s);

/// Circuits (or cocircuits) R with `must` contained in R contained in `within`.
std::vector<ElementMask> circuits_containing_within(const BinaryMatroid& m, ElementMask must,
                                                    ElementMask within);
std::vector<ElementMask> cocircuits_containing_within(const BinaryMatroid& m, ElementMask must,
                                                      ElementMask within);

struct StructureReport {
  GroundSubset loops;
  GroundSubset coloops;
  /// Partition of the non-loops by parallelism (singletons included).
  std::vector<GroundSubset> parallel_classes;
  /// Partition of the non-coloops by series relation (singletons included).
  std::vector<GroundSubset> series_classes;
  bool is_simple = true;
  bool is_cosimple = true;
};

StructureReport structure_report(const BinaryMatroid& m);
bool is_simple(const BinaryMatroid& m);
bool is_cosimple(const BinaryMatroid& m);

struct TriangleOrTriad {
  CircuitKind kind = CircuitKind::Circuit;  // Circuit = triangle, Cocircuit = triad
  std::array<ElementId, 3> elements{};
  friend bool operator==(const TriangleOrTriad&, const TriangleOrTriad&) = default;
};

/// All triangles and triads containing both e and f, sorted by (kind, third element).
std::vector<TriangleOrTriad> triangles_triads_through_pair(const BinaryMatroid& m, ElementId e, ElementId f);

/// Same circuit family on the same ground set.
bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b);

}  // namespace matdec
