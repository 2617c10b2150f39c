#ifndef BMQ_GREEN_HPP
#define BMQ_GREEN_HPP

#include <vector>

#include "bmq/psperm.hpp"

namespace bmq {

struct GreenDecomposition {
  // class index per element, for each of Green's relations
  std::vector<int> l_of, r_of, h_of, d_of, j_of;
  int l_count = 0, r_count = 0, h_count = 0, d_count = 0, j_count = 0;
  bool d_equals_j = false;

  std::vector<std::vector<int>> d_members;      // element ids per D-class
  std::vector<int> d_rank;                      // common rank, -1 if mixed
  std::vector<std::vector<int>> d_idempotents;  // element ids per D-class
  std::vector<int> d_subgroup_order;  // order of the maximal subgroup H_D
  std::vector<int> chain;  // D-class ids ordered by ideal containment; empty
                           // if the order is not a chain
};

GreenDecomposition green_decomposition(const EnumeratedMonoid& m);

struct TripleCoordinates {
  PartialSignedPerm e;  // idempotent of the R-class (partial identity on dom)
  PartialSignedPerm f;  // idempotent of the L-class (partial identity on im)
  PartialSignedPerm g;  // element of the maximal subgroup on the base {1..k}
};

TripleCoordinates triple_coordinates(const EnumeratedMonoid& m, int x);
PartialSignedPerm recombine_triple(const TripleCoordinates& t, int n);

bool check_anti_involution(const EnumeratedMonoid& m);

}  // namespace bmq

#endif
