#include "bmq/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace bmq {

std::string label_name(int label) {
  return label == kEps ? "eps" : std::to_string(label);
}

int parse_label(const std::string& name) {
  if (name == "eps") return kEps;
  size_t pos = 0;
  int v = std::stoi(name, &pos);
  if (pos != name.size() || v < 0) throw quiver_error("bad vertex name: " + name);
  return v;
}

Quiver::Quiver(char family, std::vector<int> labels,
               std::vector<std::vector<int>> b, std::vector<int> d)
    : family_(family), labels_(std::move(labels)), b_(std::move(b)), d_(std::move(d)) {
  check_invariants();
}

int Quiver::index_of(int label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (labels_[i] == label) return i;
  throw quiver_error("unknown vertex label: " + label_name(label));
}

void Quiver::check_invariants() const {
  int nv = vertex_count();
  if (nv < 2) throw quiver_error("quiver needs at least one mutable vertex");
  if (labels_.back() != kEps) throw quiver_error("frozen vertex must be stored last");
  for (int i = 0; i + 1 < nv; ++i)
    if (labels_[i] == kEps) throw quiver_error("more than one frozen vertex");
  if (static_cast<int>(b_.size()) != nv || static_cast<int>(d_.size()) != nv)
    throw quiver_error("matrix/symmetrizer size mismatch");
  for (int i = 0; i < nv; ++i) {
    if (static_cast<int>(b_[i].size()) != nv) throw quiver_error("b is not square");
    if (d_[i] <= 0) throw quiver_error("symmetrizer entries must be positive");
    if (b_[i][i] != 0) throw quiver_error("loop at " + label_name(labels_[i]));
  }
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (d_[i] * b_[i][j] != -d_[j] * b_[j][i])
        throw quiver_error("matrix is not skew-symmetrizable");
      if (i != j && b_[i][j] > 0 && b_[j][i] > 0)
        throw quiver_error("oriented 2-cycle");
      int w = std::abs(b_[i][j] * b_[j][i]);
      if (w > 3) throw quiver_error("edge weight out of range");
    }
}

Quiver quiver_from_edges(char family, std::vector<int> labels,
                         const std::vector<Edge>& edges) {
  std::sort(labels.begin(), labels.end(), label_less);
  int nv = static_cast<int>(labels.size());
  auto pos = [&labels, nv](int lab) {
    for (int i = 0; i < nv; ++i)
      if (labels[i] == lab) return i;
    throw quiver_error("edge uses unknown vertex " + label_name(lab));
  };
  std::vector<std::vector<int>> w(nv, std::vector<int>(nv, 0));
  std::vector<std::vector<int>> dir(nv, std::vector<int>(nv, 0));
  for (const auto& e : edges) {
    int i = pos(e.src), j = pos(e.dst);
    if (i == j || e.weight < 1 || e.weight > 2)
      throw quiver_error("bad edge");
    if (w[i][j] != 0) throw quiver_error("duplicate edge");
    w[i][j] = w[j][i] = e.weight;
    dir[i][j] = 1;
    dir[j][i] = -1;
  }
  // Symmetrizer entries in {1,2}: equal across weight-1 edges, split across
  // weight-2 edges. Propagate per component.
  std::vector<int> d(nv, 0);
  for (int s = 0; s < nv; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int u = 0; u < nv; ++u) {
        if (w[v][u] == 0) continue;
        int want = w[v][u] == 1 ? d[v] : 3 - d[v];
        if (d[u] == 0) {
          d[u] = want;
          bfs.push(u);
        } else if (d[u] != want) {
          throw quiver_error("diagram admits no symmetrizer");
        }
      }
    }
  }
  std::vector<std::vector<int>> b(nv, std::vector<int>(nv, 0));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (dir[i][j] == 0) continue;
      int mag = w[i][j] == 1 ? 1 : (d[i] < d[j] ? 2 : 1);
      b[i][j] = dir[i][j] * mag;
    }
  return Quiver(family, labels, b, d);
}

Quiver standard_quiver(char family, int n) {
  auto make = [&](std::vector<int> labels, std::vector<int> d) {
    int nv = static_cast<int>(labels.size());
    std::vector<std::vector<int>> b(nv, std::vector<int>(nv, 0));
    return std::tuple(labels, b, d, nv);
  };
  switch (family) {
    case 'A': {
      if (n < 2) throw quiver_error("A requires n >= 2");
      std::vector<int> labels;
      for (int i = 1; i <= n - 1; ++i) labels.push_back(i);
      labels.push_back(kEps);
      auto [ls, b, d, nv] = make(labels, std::vector<int>(labels.size(), 1));
      for (int i = 0; i + 1 < nv; ++i) {  // 1 -> 2 -> ... -> eps
        b[i][i + 1] = 1;
        b[i + 1][i] = -1;
      }
      return Quiver('A', ls, b, d);
    }
    case 'B': {
      if (n < 2) throw quiver_error("B requires n >= 2");
      std::vector<int> labels;
      for (int i = 0; i <= n - 1; ++i) labels.push_back(i);
      labels.push_back(kEps);
      std::vector<int> d(labels.size(), 2);
      d[0] = 1;
      auto [ls, b, dd, nv] = make(labels, d);
      b[0][1] = 2;  // 0 -> 1, weight 2
      b[1][0] = -1;
      for (int i = 1; i + 1 < nv; ++i) {
        b[i][i + 1] = 1;
        b[i + 1][i] = -1;
      }
      return Quiver('B', ls, b, dd);
    }
    case 'D': {
      if (n < 4) throw quiver_error("D requires n >= 4");
      std::vector<int> labels;
      for (int i = 0; i <= n - 1; ++i) labels.push_back(i);
      labels.push_back(kEps);
      auto [ls, b, d, nv] = make(labels, std::vector<int>(labels.size(), 1));
      b[0][2] = 1;  // 0 -> 2 and 1 -> 2
      b[2][0] = -1;
      b[1][2] = 1;
      b[2][1] = -1;
      for (int i = 2; i + 1 < nv; ++i) {
        b[i][i + 1] = 1;
        b[i + 1][i] = -1;
      }
      return Quiver('D', ls, b, d);
    }
    default:
      throw quiver_error("unknown family");
  }
}

Quiver mutate(const Quiver& q, int k_label) {
  if (k_label == kEps) throw quiver_error("cannot mutate the frozen vertex");
  int k = q.index_of(k_label);
  int nv = q.vertex_count();
  auto b = q.b();
  std::vector<std::vector<int>> nb(nv, std::vector<int>(nv, 0));
  auto sgn = [](int x) { return (x > 0) - (x < 0); };
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (i == k || j == k)
        nb[i][j] = -b[i][j];
      else
        nb[i][j] = b[i][j] + sgn(b[i][k]) * std::max(0, b[i][k] * b[k][j]);
    }
  return Quiver(q.family(), q.labels(), nb, q.d());
}

Quiver mutate_sequence(const Quiver& q, const std::vector<int>& pivots) {
  Quiver r = q;
  for (int p : pivots) r = mutate(r, p);
  return r;
}

int weight(const Quiver& q, int label_i, int label_j) {
  if (label_i == label_j) throw quiver_error("weight needs two distinct vertices");
  return std::abs(q.entry(label_i, label_j) * q.entry(label_j, label_i));
}

Quiver opposite(const Quiver& q) {
  auto b = q.b();
  for (auto& row : b)
    for (auto& x : row) x = -x;
  return Quiver(q.family(), q.labels(), b, q.d());
}

std::vector<int> neighbours(const Quiver& q, int label) {
  std::vector<int> out;
  int i = q.index_of(label);
  for (int j = 0; j < q.vertex_count(); ++j)
    if (j != i && q.b()[i][j] != 0) out.push_back(q.labels()[j]);
  return out;
}

namespace {

// Enumerates cycles of the underlying graph by DFS. The start vertex is the
// minimum index on the cycle and the second vertex index is smaller than the
// last, so each cycle appears exactly once. With chordless=true, every
// non-consecutive pair must be non-adjacent.
void cycle_dfs(const Quiver& q, bool chordless, std::vector<int>& path,
               std::vector<bool>& on_path,
               std::vector<std::vector<int>>& out) {
  int nv = q.vertex_count();
  const auto& b = q.b();
  int v0 = path.front();
  int cur = path.back();
  for (int u = v0 + 1; u < nv; ++u) {
    if (on_path[u] || b[cur][u] == 0) continue;
    bool closes = b[u][v0] != 0;
    if (chordless) {
      // u must not touch any path vertex other than cur and (as the closing
      // edge) v0.
      bool chord = false;
      for (size_t t = 1; t + 1 < path.size(); ++t)
        if (b[u][path[t]] != 0) {
          chord = true;
          break;
        }
      if (chord) continue;
    }
    if (closes && path.size() >= 2) {
      if (path[1] < u) {
        auto cyc = path;
        cyc.push_back(u);
        out.push_back(cyc);
      }
      if (chordless) continue;  // extending past u would re-use the chord u-v0
    }
    path.push_back(u);
    on_path[u] = true;
    cycle_dfs(q, chordless, path, on_path, out);
    on_path[u] = false;
    path.pop_back();
  }
}

std::vector<std::vector<int>> raw_cycles(const Quiver& q, bool chordless) {
  int nv = q.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<bool> on_path(nv, false);
  for (int v0 = 0; v0 < nv; ++v0) {
    std::vector<int> path{v0};
    on_path[v0] = true;
    cycle_dfs(q, chordless, path, on_path, out);
    on_path[v0] = false;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) {
    if (a.size() != b2.size()) return a.size() < b2.size();
    return a < b2;
  });
  return out;
}

// Returns +1 if the index cycle is oriented forwards, -1 backwards, 0 if not
// consistently oriented.
int cycle_orientation(const Quiver& q, const std::vector<int>& cyc) {
  const auto& b = q.b();
  bool fwd = true, bwd = true;
  for (size_t t = 0; t < cyc.size(); ++t) {
    int a = cyc[t], c = cyc[(t + 1) % cyc.size()];
    if (b[a][c] <= 0) fwd = false;
    if (b[c][a] <= 0) bwd = false;
  }
  if (fwd) return 1;
  if (bwd) return -1;
  return 0;
}

}  // namespace

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q) {
  std::vector<ChordlessCycle> out;
  for (const auto& cyc : raw_cycles(q, true)) {
    int orient = cycle_orientation(q, cyc);
    if (orient == 0) throw quiver_error("non-oriented chordless cycle");
    std::vector<int> idx = cyc;
    if (orient < 0) std::reverse(idx.begin() + 1, idx.end());
    ChordlessCycle cc;
    for (size_t t = 0; t < idx.size(); ++t) {
      int lab = q.labels()[idx[t]];
      cc.vertices.push_back(lab);
      if (lab == kEps) cc.contains_frozen = true;
    }
    for (size_t t = 0; t < idx.size(); ++t) {
      int a = q.labels()[idx[t]], b2 = q.labels()[idx[(t + 1) % idx.size()]];
      cc.weights.push_back(weight(q, a, b2));
    }
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<SimpleCycle> simple_cycles(const Quiver& q) {
  std::vector<SimpleCycle> out;
  for (const auto& cyc : raw_cycles(q, false)) {
    SimpleCycle sc;
    for (int i : cyc) sc.vertices.push_back(q.labels()[i]);
    sc.oriented = cycle_orientation(q, cyc) != 0;
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<int> shortest_path_to_frozen(const Quiver& q, int c_label) {
  int nv = q.vertex_count();
  int src = q.index_of(c_label);
  int dst = q.frozen_index();
  std::vector<int> dist(nv, -1), ways(nv, 0), prev(nv, -1);
  std::queue<int> bfs;
  dist[src] = 0;
  ways[src] = 1;
  bfs.push(src);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int u = 0; u < nv; ++u) {
      if (u == v || q.b()[v][u] == 0) continue;
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        ways[u] = ways[v];
        prev[u] = v;
        bfs.push(u);
      } else if (dist[u] == dist[v] + 1) {
        ways[u] += ways[v];
      }
    }
  }
  if (dist[dst] < 0) throw quiver_error("quiver is not connected");
  if (ways[dst] != 1)
    throw ambiguous_path_error("shortest path from " + label_name(c_label) +
                               " to eps is not unique");
  std::vector<int> path;
  for (int v = dst; v != -1; v = prev[v]) path.push_back(q.labels()[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

std::string key_under_perm(const Quiver& q, const std::vector<int>& perm,
                           bool diagram_only) {
  // perm maps new position -> old index; the frozen vertex stays last.
  int nv = q.vertex_count();
  std::string key;
  key.reserve(nv * (nv + 1));
  const auto& b = q.b();
  const auto& d = q.d();
  if (!diagram_only)
    for (int i = 0; i < nv; ++i) key.push_back(static_cast<char>('0' + d[perm[i]]));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      int v;
      if (diagram_only) {
        int bij = b[perm[i]][perm[j]];
        int w = std::abs(bij * b[perm[j]][perm[i]]);
        v = bij > 0 ? w : 0;
      } else {
        v = b[perm[i]][perm[j]];
      }
      key.push_back(static_cast<char>('A' + 4 + v));
    }
  return key;
}

std::string min_key(const Quiver& q, bool diagram_only) {
  int m = q.mutable_count();
  std::vector<int> perm(q.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string k = key_under_perm(q, perm, diagram_only);
    if (best.empty() || k < best) best = std::move(k);
  } while (std::next_permutation(perm.begin(), perm.begin() + m));
  return best;
}

}  // namespace

std::string canonical_form(const Quiver& q) { return min_key(q, false); }

std::string canonical_diagram_key(const Quiver& q) { return min_key(q, true); }

}  // namespace bmq
