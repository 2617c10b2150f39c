#ifndef BMQ_PSPERM_HPP
#define BMQ_PSPERM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bmq {

// Largest ground set we ever enumerate on (rank caps in the acceptance
// suite are n <= 5).
inline constexpr int kMaxGround = 8;

// Partial injective map on {1..n} with signs. img[i] is the signed image of
// i, or 0 when i is outside the domain. Index 0 of the array is unused.
struct PartialSignedPerm {
  int n = 0;
  std::array<int8_t, kMaxGround + 1> img{};

  bool operator==(const PartialSignedPerm& o) const = default;
  bool operator<(const PartialSignedPerm& o) const {
    if (n != o.n) return n < o.n;
    return img < o.img;
  }

  bool defined(int i) const { return img[i] != 0; }
  int rank() const;
  bool is_partial_identity() const;
  bool all_positive() const;
};

PartialSignedPerm full_identity(int n);
PartialSignedPerm partial_identity(int n, const std::vector<int>& subset);

// Applies y first, then x.
PartialSignedPerm compose(const PartialSignedPerm& x, const PartialSignedPerm& y);
PartialSignedPerm inverse(const PartialSignedPerm& x);

// "1 2 3 / 2 1 3" style, "-" for an undefined image, minus sign for a
// negative one.
std::string element_text(const PartialSignedPerm& x);

// Generators keyed by vertex label (kEps for the frozen generator).
std::map<int, PartialSignedPerm> realize_generators(char family, int n);

PartialSignedPerm evaluate_word(const std::vector<int>& word,
                                const std::map<int, PartialSignedPerm>& gens,
                                int n);

struct EnumeratedMonoid {
  int n = 0;
  std::vector<PartialSignedPerm> elements;  // discovery order, [0] = identity
  std::map<PartialSignedPerm, int> index;
  std::vector<int> generator_labels;
  std::vector<int> generator_indices;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const PartialSignedPerm& x) const;
  int product(int a, int b) const;
  int inverse_of(int a) const;
};

EnumeratedMonoid generator_closure(const std::map<int, PartialSignedPerm>& gens,
                                   int n, std::size_t cap = 5'000'000);

long long count_partial_injections(int n);
long long count_signed_partial_injections(int n);

// A/B use the closed-form counts above; D uses the observed closed form for
// the generator closure (verified against enumeration in tests).
long long expected_cardinality(char family, int n);

}  // namespace bmq

#endif
