#ifndef BMQ_VERIFICATION_HPP
#define BMQ_VERIFICATION_HPP

#include <map>
#include <string>
#include <vector>

#include "bmq/mutation_class.hpp"
#include "bmq/presentation.hpp"
#include "bmq/psperm.hpp"
#include "bmq/quiver.hpp"

namespace bmq {

// A quiver whose vertices carry words over the initial generators, together
// with their concrete evaluations, evolved under mutation.
struct TrackedQuiver {
  Quiver quiver;
  int n = 0;
  std::map<int, PartialSignedPerm> base;  // initial generator realization
  std::map<int, Word> words;              // label -> word over initial generators
  std::map<int, PartialSignedPerm> values;
};

TrackedQuiver make_tracked(const Quiver& q,
                           const std::map<int, PartialSignedPerm>& base, int n);
TrackedQuiver mutate_tracked(const TrackedQuiver& tq, int k);
TrackedQuiver mutate_tracked_sequence(const TrackedQuiver& tq,
                                      const std::vector<int>& pivots);

struct RelationFailure {
  Relation rel;
  PartialSignedPerm lhs_value;
  PartialSignedPerm rhs_value;
};

struct VerificationReport {
  std::string id;
  int relations_checked = 0;
  std::vector<RelationFailure> failures;
  bool closure_ok = true;
  bool pass() const { return failures.empty() && closure_ok; }
};

VerificationReport check_relations(const Presentation& p,
                                   const std::map<int, PartialSignedPerm>& realization,
                                   int n, const std::string& id = "");

// For every member of the mutation class, replay the witness pivots with
// tracking, check the member's generated relations, and confirm the tracked
// generators still generate the whole monoid.
std::vector<VerificationReport> verify_mutation_invariance(char family, int n);

struct CongruenceReport {
  int length_bound = 0;
  long long words = 0;
  int classes = 0;
  int covered = 0;  // distinct concrete values among all words
  int monoid_size = 0;
  bool sound = true;
  bool bijective = false;
};

// Equivalence classes of square-free words of length <= L under two-way
// relation rewriting, paired with concrete evaluations.
CongruenceReport bounded_word_congruence(const Presentation& p, int L,
                                         const std::map<int, PartialSignedPerm>& realization,
                                         int n);

int congruence_length_cap(int alphabet_size);

// Same generator alphabet, every relation of each holds concretely, and each
// presentation's relations are derivable from the other's within the bounded
// congruence (so the two congruences coincide).
bool relation_sets_equal(const Presentation& p1, const Presentation& p2,
                         const std::map<int, PartialSignedPerm>& realization,
                         int n);

bool check_opposite_invariance(const Quiver& q,
                               const std::map<int, PartialSignedPerm>& realization,
                               int n);

struct CycleEquivalenceReport {
  int checked_c3 = 0;       // 3-cycles through eps, all weights 1
  int checked_c3w = 0;      // weighted 3-cycles through eps
  int checked_c4 = 0;       // 4-cycles through eps, all weights 1
  int checked_type4 = 0;    // path relation families on Type IV members
  int failures = 0;
  bool pass() const { return failures == 0; }
};

CycleEquivalenceReport check_cycle_equivalences(const ClassCatalog& cat);

}  // namespace bmq

#endif
