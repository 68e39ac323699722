#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "matdec/execution.hpp"
#include "matdec/matroid.hpp"

namespace matdec {

/// lambda(X) = r(X) + r(E - X) - r(M)
std::size_t lambda_mask(const BinaryMatroid& m, ElementMask s);
std::size_t lambda(const BinaryMatroid& m, const GroundSubset& s);

enum class SeparationKind { NotASeparation, ExactMinimal, ExactNonMinimal, SubExact };

std::string_view to_string(SeparationKind kind);

struct SeparationClass {
  SeparationKind kind = SeparationKind::NotASeparation;
  std::size_t lambda = 0;
  bool is_exact() const noexcept {
    return kind == SeparationKind::ExactMinimal || kind == SeparationKind::ExactNonMinimal;
  }
  friend bool operator==(const SeparationClass&, const SeparationClass&) = default;
};

SeparationClass classify_separation_mask(const BinaryMatroid& m, ElementMask a, std::size_t k);
/// `a` must be a nonempty proper subset of E(m).
SeparationClass classify_separation(const BinaryMatroid& m, const GroundSubset& a, std::size_t k);

/// First side found (as a mask, never containing position size()-1) of a
/// k-separation with k <= n-1, scanning every subset once.
std::optional<ElementMask> find_low_separation(const BinaryMatroid& m, std::size_t n_conn,
                                               const Execution& exec = {});

/// n in {2, 3}. Exhaustive; throws GroundSetTooLarge above `cap`.
bool is_n_connected(const BinaryMatroid& m, std::size_t n, const Execution& exec = {},
                    std::size_t cap = ground_set_cap());

/// Requires m to be 3-connected (PreconditionUnmet otherwise).
bool is_internally_4_connected(const BinaryMatroid& m, const Execution& exec = {},
                               std::size_t cap = ground_set_cap());

bool side_is_union_of_circuits_mask(const BinaryMatroid& m, ElementMask s);
bool side_is_union_of_cocircuits_mask(const BinaryMatroid& m, ElementMask s);
bool side_is_union_of_circuits(const BinaryMatroid& m, const GroundSubset& s);
bool side_is_union_of_cocircuits(const BinaryMatroid& m, const GroundSubset& s);

}  // namespace matdec
