#ifndef BMQ_MUTATION_CLASS_HPP
#define BMQ_MUTATION_CLASS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmq/quiver.hpp"

namespace bmq {

struct ClassCatalog {
  char family = 'A';
  int n = 0;
  std::vector<Quiver> members;             // discovery order, [0] = seed
  std::vector<std::string> keys;           // canonical_form per member
  std::map<std::string, int> index;
  std::vector<std::vector<int>> witness;   // pivot labels from the seed
  std::vector<std::vector<int>> adjacency; // [member][pivot position] -> member
  std::vector<int> pivot_labels;           // column order of adjacency

  int size() const { return static_cast<int>(members.size()); }
};

ClassCatalog enumerate_class(const Quiver& q0);

// Structural membership predicates from the mutation-class characterizations.
// check_A_conditions runs the unmarked type-A conditions on the subquiver
// induced by `mask` labels (used for glued components); check_A_eps adds the
// frozen-vertex condition and runs on the whole quiver.
bool check_A_conditions(const Quiver& q, const std::vector<int>& mask);
bool check_A_eps(const Quiver& q);
bool check_B_eps(const Quiver& q);

// The distinguished mutable vertex "0" of a B-class quiver: the pendant
// endpoint of the single weight-2 edge, or the common endpoint of the two
// weight-2 edges.
int b_zero_vertex(const Quiver& q);

std::vector<int> connecting_vertices(const Quiver& q);
std::vector<int> connecting_vertices(const Quiver& q, const std::vector<int>& mask);

struct DShapeReport {
  int shape = 0;  // 1..4
  // Role vertices; kUnsetRole when a role does not apply to the shape.
  static constexpr int kUnsetRole = -1000;
  int a = kUnsetRole, b = kUnsetRole, c = kUnsetRole, d = kUnsetRole;
  std::vector<int> central_cycle;  // Type IV, starts at the eps-spike head
  std::vector<std::pair<std::pair<int, int>, int>> spikes;  // ((tail,head), c_alpha)
  std::vector<int> eps_component;
  int eps_connecting = kUnsetRole;  // vertex attaching the eps component
};

// All shape matches (deduplicated); membership means exactly one.
std::vector<DShapeReport> classify_D_eps_all(const Quiver& q);
// Throws quiver_error on no match or on an ambiguous match.
DShapeReport classify_D_eps(const Quiver& q);
bool check_D_eps(const Quiver& q);

struct CharacterizationReport {
  int enumerated = 0;
  int predicate_only = 0;   // predicate-satisfying diagrams missing from the class
  int enumerated_only = 0;  // class members failing the predicate
  bool ok() const { return predicate_only == 0 && enumerated_only == 0; }
};

CharacterizationReport verify_class_characterization(char family, int n);

}  // namespace bmq

#endif
