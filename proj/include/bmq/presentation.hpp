#ifndef BMQ_PRESENTATION_HPP
#define BMQ_PRESENTATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmq/quiver.hpp"

namespace bmq {

// A word over generator labels (kEps for the frozen generator); the empty
// word is the identity e.
using Word = std::vector<int>;

struct Relation {
  Word lhs;
  Word rhs;
  std::string tag;  // R1, R2, R3i, R3ii, R3iii, R4i, R4ii, GroupCycle

  bool operator==(const Relation& o) const = default;
};

struct Presentation {
  std::string kind;  // "monoid" or "group"
  std::vector<int> generators;
  std::vector<Relation> relations;
};

struct MTable {
  std::map<std::pair<int, int>, int> pairs;  // symmetric over mutable labels
  std::map<int, std::pair<int, int>> eps;    // j -> (m_eps_j, m_j_eps)

  int m(int i, int j) const;
};

MTable m_table(const Quiver& q);

std::vector<Relation> relations_R1_R2(const Quiver& q);
std::vector<Relation> relations_R3(const Quiver& q);
std::vector<Relation> relations_R4(const Quiver& q);

// Full Definition-style inverse monoid presentation, deterministic ordering.
Presentation present(const Quiver& q);

// Reference presentations of the Boolean reflection monoids.
Presentation ef_presentation(char family, int n);

// Coxeter-plus-cycle group presentation on the mutable vertices.
Presentation group_presentation(const Quiver& q);

std::string word_text(const Word& w);

}  // namespace bmq

#endif
