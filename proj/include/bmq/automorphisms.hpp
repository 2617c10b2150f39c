#ifndef BMQ_AUTOMORPHISMS_HPP
#define BMQ_AUTOMORPHISMS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "bmq/verification.hpp"

namespace bmq {

// The tracked assignment after a replay, as a generator set in its own right.
struct GeneratorSet {
  std::map<int, Word> words;
  std::map<int, PartialSignedPerm> values;
};

// i1 i2 ... ik -> (i1, i1, i2, i2, ..., ik, ik); throws if eps appears.
std::vector<int> double_mutation_sequence(const Word& g);

// Replay the doubled sequence with tracking; the quiver must return to q0
// exactly, and the assignment becomes the conjugated generator set.
std::pair<TrackedQuiver, GeneratorSet> apply_inner(
    const Quiver& q0, const Word& g,
    const std::map<int, PartialSignedPerm>& base, int n);

PartialSignedPerm reflection_via_mutation(
    const Quiver& q0, const Word& g, int i,
    const std::map<int, PartialSignedPerm>& base, int n);

// Reduced word for the longest element of the unit group, over vertex labels.
Word longest_element(char family, int n);

// w_0 s_eps w_0^{-1} = s_eps, concretely.
bool check_center_fixes_eps(char family, int n);

// Uniform random unit-group element, returned as a reduced word (a geodesic
// in the Cayley graph of the mutable generators).
Word random_reduced_word(char family, int n, uint64_t seed);

}  // namespace bmq

#endif
