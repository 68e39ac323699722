#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matdec/matroid.hpp"

namespace matdec {

/// minor(M, del, con) is isomorphic to the target.
struct MinorWitness {
  GroundSubset con;
  GroundSubset del;
};

inline constexpr std::size_t kMaxTargetSize = 10;

/// Searches contraction sets C that are independent with |C| = r(M) - r(T),
/// one per flat cl(C), and embeds T linearly into the columns of M / C.
/// Binary matroids are uniquely representable, so the embedding test is exact.
/// Works on the dual pair when that has fewer contraction sets. The witness
/// returned is the first in lexicographic order of contraction sets.
std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& target,
                                      std::size_t cap = ground_set_cap());

struct MinorClass {
  std::string name;
  std::vector<BinaryMatroid> excluded;  // empty: every binary matroid
};

/// No minor isomorphic to F7 or F7*.
const MinorClass& regular_class();
const MinorClass& all_binary_class();

bool in_class(const BinaryMatroid& m, const MinorClass& cls, std::size_t cap = ground_set_cap());
bool is_regular(const BinaryMatroid& m, std::size_t cap = ground_set_cap());

}  // namespace matdec
