#ifndef BMQ_QUIVER_HPP
#define BMQ_QUIVER_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bmq {

// Vertex label used for the frozen vertex. Mutable vertices carry small
// non-negative integer labels (A: 1..n-1, B/D: 0..n-1).
inline constexpr int kEps = -1;

// Orders labels with the frozen vertex last.
inline bool label_less(int a, int b) {
  if (a == kEps) return false;
  if (b == kEps) return true;
  return a < b;
}

std::string label_name(int label);
int parse_label(const std::string& name);

struct quiver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ambiguous_path_error : quiver_error {
  using quiver_error::quiver_error;
};

// Exchange data on a vertex set consisting of mutable vertices plus exactly
// one frozen vertex. The frozen vertex is always stored at the last index.
// b[i][j] > 0 means an arrow i -> j; the edge weight is |b[i][j] * b[j][i]|.
// d is a positive integer skew-symmetrizer: d[i]*b[i][j] == -d[j]*b[j][i].
class Quiver {
 public:
  Quiver(char family, std::vector<int> labels, std::vector<std::vector<int>> b,
         std::vector<int> d);

  char family() const { return family_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int mutable_count() const { return vertex_count() - 1; }
  int frozen_index() const { return vertex_count() - 1; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& b() const { return b_; }
  const std::vector<int>& d() const { return d_; }

  int index_of(int label) const;
  int entry(int label_i, int label_j) const {
    return b_[index_of(label_i)][index_of(label_j)];
  }

  // True if there is an arrow from label i to label j (any weight).
  bool arrow(int label_i, int label_j) const { return entry(label_i, label_j) > 0; }

  bool operator==(const Quiver& other) const {
    return family_ == other.family_ && labels_ == other.labels_ &&
           b_ == other.b_ && d_ == other.d_;
  }

  void check_invariants() const;

 private:
  char family_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> b_;
  std::vector<int> d_;
};

struct ChordlessCycle {
  // Vertex labels in arrow order; vertices[k] -> vertices[k+1] is an arrow,
  // as is vertices.back() -> vertices.front().
  std::vector<int> vertices;
  // weights[k] is the weight of the arc leaving vertices[k].
  std::vector<int> weights;
  bool contains_frozen = false;

  int length() const { return static_cast<int>(vertices.size()); }
};

struct Edge {
  int src = 0;
  int dst = 0;
  int weight = 1;
};

// Builds a quiver from a weighted oriented diagram, inferring a valid
// symmetrizer (weight-1 edges force equal d, weight-2 edges force a 1:2
// split). Throws quiver_error when no symmetrizer exists.
Quiver quiver_from_edges(char family, std::vector<int> labels,
                         const std::vector<Edge>& edges);

Quiver standard_quiver(char family, int n);
Quiver mutate(const Quiver& q, int k_label);
Quiver mutate_sequence(const Quiver& q, const std::vector<int>& pivots);
int weight(const Quiver& q, int label_i, int label_j);
Quiver opposite(const Quiver& q);

// All chordless cycles, each reported once, rotated to start at the minimum
// label and listed in arrow order. Throws quiver_error if a chordless cycle
// is not cyclically oriented.
std::vector<ChordlessCycle> chordless_cycles(const Quiver& q);

// All simple cycles of the underlying graph (used by the class membership
// predicates, which constrain every nontrivial cycle, not just chordless
// ones). Same orientation error behaviour as chordless_cycles when a cycle
// is oriented inconsistently is NOT raised here; the caller inspects the
// oriented flag instead.
struct SimpleCycle {
  std::vector<int> vertices;  // in traversal order starting at minimum label
  bool oriented = false;      // consistently oriented along the traversal?
};
std::vector<SimpleCycle> simple_cycles(const Quiver& q);

// Unique shortest path (c, ..., eps) in the underlying graph. Throws
// ambiguous_path_error when two distinct shortest paths exist.
std::vector<int> shortest_path_to_frozen(const Quiver& q, int c_label);

// Canonical key under relabelings of mutable vertices (frozen fixed) acting
// simultaneously on b and d.
std::string canonical_form(const Quiver& q);

// Canonical key of the underlying weighted, oriented diagram (ignores the
// symmetrizer split of weights between b[i][j] and b[j][i]).
std::string canonical_diagram_key(const Quiver& q);

std::vector<int> neighbours(const Quiver& q, int label);

}  // namespace bmq

#endif
