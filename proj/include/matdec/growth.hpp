#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "matdec/matroid.hpp"

namespace matdec {

enum class GrowthKind { ExtensionColumn, CoextensionRow, TwoElement };

struct GrowthCandidate {
  GrowthKind kind = GrowthKind::ExtensionColumn;
  std::optional<gf2::Vector> v;      // new column over N's rows
  std::optional<gf2::Vector> w;      // new row over N's nonbasis columns
  std::optional<bool> corner;        // entry of the new row in the new column
  BinaryMatroid result;
  std::optional<ElementId> e;        // extension element
  std::optional<ElementId> f;        // coextension element
  bool deletion_parent_cosimple = false;    // result \ e cosimple (TwoElement)
  bool contraction_parent_simple = false;   // result / f simple (TwoElement)
};

/// Appends column v (length r) to the representation.
BinaryMatroid extend(const BinaryMatroid& n, const gf2::Vector& v, std::optional<ElementId> e = std::nullopt);

/// Appends row w (length n - r, indexed by nonbasis columns in order) plus a
/// unit column for the new element f.
BinaryMatroid coextend(const BinaryMatroid& n, const gf2::Vector& w, std::optional<ElementId> f = std::nullopt);

/// D-block [[D, v], [w, b]]: the matroid M with M \ e / f = n.
BinaryMatroid two_element_growth(const BinaryMatroid& n, const gf2::Vector& v, const gf2::Vector& w, bool corner,
                                 std::optional<ElementId> e = std::nullopt, std::optional<ElementId> f = std::nullopt);

/// Cheap necessary filter for a new column: weight >= 2 and not already a column.
bool passes_column_prefilter(const BinaryMatroid& n, gf2::Word v);
/// Cheap necessary filter for a new row: weight >= 2 and not already a row of D.
bool passes_row_prefilter(const BinaryMatroid& n, gf2::Word w);

/// All v giving a simple extension, ordered by v. Throws NotSimple.
std::vector<GrowthCandidate> simple_extension_candidates(const BinaryMatroid& n);
/// All w giving a cosimple coextension, ordered by w. Throws NotCosimple.
std::vector<GrowthCandidate> cosimple_coextension_candidates(const BinaryMatroid& n);

/// Visits every (v, w, b) whose matroid is simple and cosimple with a simple
/// contraction parent or a cosimple deletion parent, ordered by (v, w, b).
/// Throws NotSimple / NotCosimple for n.
void for_each_two_element_growth(const BinaryMatroid& n, const std::function<void(const GrowthCandidate&)>& visit);
std::vector<GrowthCandidate> two_element_growths(const BinaryMatroid& n);

/// Largest 2^dim for which the growth enumerators will iterate a vector space.
inline constexpr std::size_t kGrowthSpaceCap = std::size_t{1} << 20;

/// Pairs (element of a, its image in b), sorted by the first id.
using Bijection = std::vector<std::pair<ElementId, ElementId>>;

/// Backtracking over element maps pruned by per-element circuit/cocircuit size
/// census; returns a circuit-family-preserving bijection.
std::optional<Bijection> are_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b,
                                        std::size_t cap = ground_set_cap());

struct IsoClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;  // indices into the input, ascending
};

/// Classes ordered by smallest member; the representative is the member whose
/// sorted circuit list is lexicographically least.
std::vector<IsoClass> iso_classes(const std::vector<BinaryMatroid>& matroids, std::size_t cap = ground_set_cap());

}  // namespace matdec
