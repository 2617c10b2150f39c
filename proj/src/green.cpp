#include "bmq/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace bmq {

namespace {

using Bits = std::vector<uint64_t>;

void set_bit(Bits& b, int i) { b[i >> 6] |= uint64_t{1} << (i & 63); }
bool get_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

bool subset(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

int popcount(const Bits& a) {
  int c = 0;
  for (uint64_t w : a) c += __builtin_popcountll(w);
  return c;
}

// closure of {a} under the listed one-step moves (left/right multiplication
// by a generator), as a bitset over element ids
Bits ideal_of(const EnumeratedMonoid& m, int a, bool left, bool right) {
  int M = m.size();
  Bits bits((M + 63) / 64, 0);
  std::vector<int> frontier{a};
  set_bit(bits, a);
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : m.generator_indices) {
      int next[2] = {left ? m.product(g, x) : x, right ? m.product(x, g) : x};
      for (int y : next)
        if (!get_bit(bits, y)) {
          set_bit(bits, y);
          frontier.push_back(y);
        }
    }
  }
  return bits;
}

std::vector<int> classify(const std::vector<Bits>& keys, int& count) {
  std::map<Bits, int> seen;
  std::vector<int> out(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = seen.emplace(keys[i], static_cast<int>(seen.size()));
    out[i] = it->second;
  }
  count = static_cast<int>(seen.size());
  return out;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<int, int> fwd, bwd;
  for (size_t i = 0; i < a.size(); ++i) {
    auto [i1, f1] = fwd.emplace(a[i], b[i]);
    if (!f1 && i1->second != b[i]) return false;
    auto [i2, f2] = bwd.emplace(b[i], a[i]);
    if (!f2 && i2->second != a[i]) return false;
  }
  return true;
}

PartialSignedPerm ordered_onto(const std::vector<int>& target, int n) {
  PartialSignedPerm a;
  a.n = n;
  for (size_t t = 0; t < target.size(); ++t)
    a.img[t + 1] = static_cast<int8_t>(target[t]);
  return a;
}

std::vector<int> domain_of(const PartialSignedPerm& x) {
  std::vector<int> out;
  for (int i = 1; i <= x.n; ++i)
    if (x.defined(i)) out.push_back(i);
  return out;
}

std::vector<int> image_of(const PartialSignedPerm& x) {
  std::vector<int> out;
  for (int i = 1; i <= x.n; ++i)
    if (x.defined(i)) out.push_back(std::abs(x.img[i]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GreenDecomposition green_decomposition(const EnumeratedMonoid& m) {
  int M = m.size();
  GreenDecomposition g;
  std::vector<Bits> lids(M), rids(M), jids(M);
  for (int a = 0; a < M; ++a) {
    lids[a] = ideal_of(m, a, true, false);
    rids[a] = ideal_of(m, a, false, true);
    jids[a] = ideal_of(m, a, true, true);
  }
  g.l_of = classify(lids, g.l_count);
  g.r_of = classify(rids, g.r_count);
  g.j_of = classify(jids, g.j_count);

  std::map<std::pair<int, int>, int> hmap;
  g.h_of.resize(M);
  for (int a = 0; a < M; ++a) {
    auto [it, fresh] = hmap.emplace(std::make_pair(g.l_of[a], g.r_of[a]),
                                    static_cast<int>(hmap.size()));
    g.h_of[a] = it->second;
  }
  g.h_count = static_cast<int>(hmap.size());

  // D is the join of L and R
  std::vector<int> up(M);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  std::vector<int> l_rep(g.l_count, -1), r_rep(g.r_count, -1);
  for (int a = 0; a < M; ++a) {
    for (auto [cls, rep] : {std::pair{g.l_of[a], &l_rep}, {g.r_of[a], &r_rep}}) {
      int& slot = (*rep)[cls];
      if (slot < 0) slot = a;
      int x = find(a), y = find(slot);
      if (x != y) up[x] = y;
    }
  }
  std::map<int, int> droot;
  g.d_of.resize(M);
  for (int a = 0; a < M; ++a) {
    auto [it, fresh] = droot.emplace(find(a), static_cast<int>(droot.size()));
    g.d_of[a] = it->second;
  }
  g.d_count = static_cast<int>(droot.size());
  g.d_equals_j = same_partition(g.d_of, g.j_of);

  g.d_members.assign(g.d_count, {});
  g.d_idempotents.assign(g.d_count, {});
  g.d_rank.assign(g.d_count, -2);
  for (int a = 0; a < M; ++a) {
    int d = g.d_of[a];
    g.d_members[d].push_back(a);
    int rk = m.elements[a].rank();
    if (g.d_rank[d] == -2) g.d_rank[d] = rk;
    else if (g.d_rank[d] != rk) g.d_rank[d] = -1;
    if (m.product(a, a) == a) g.d_idempotents[d].push_back(a);
  }

  g.d_subgroup_order.assign(g.d_count, 0);
  for (int d = 0; d < g.d_count; ++d) {
    if (g.d_idempotents[d].empty()) continue;
    int e = g.d_idempotents[d][0];
    int count = 0;
    for (int a : g.d_members[d])
      if (g.h_of[a] == g.h_of[e]) ++count;
    g.d_subgroup_order[d] = count;
  }

  // order the D-classes by containment of their two-sided ideals
  std::vector<int> ids(g.d_count);
  std::vector<int> rep(g.d_count);
  for (int a = 0; a < M; ++a) rep[g.d_of[a]] = a;
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    return popcount(jids[rep[x]]) < popcount(jids[rep[y]]);
  });
  bool chain = true;
  for (size_t t = 0; t + 1 < ids.size(); ++t)
    if (!subset(jids[rep[ids[t]]], jids[rep[ids[t + 1]]])) chain = false;
  if (chain) g.chain = ids;
  return g;
}

TripleCoordinates triple_coordinates(const EnumeratedMonoid& m, int x) {
  const PartialSignedPerm& v = m.elements[x];
  auto dom = domain_of(v);
  auto im = image_of(v);
  PartialSignedPerm ai = ordered_onto(dom, v.n);
  PartialSignedPerm aj = ordered_onto(im, v.n);
  TripleCoordinates t;
  t.e = partial_identity(v.n, dom);
  t.f = partial_identity(v.n, im);
  t.g = compose(compose(inverse(aj), v), ai);
  return t;
}

PartialSignedPerm recombine_triple(const TripleCoordinates& t, int n) {
  PartialSignedPerm ai = ordered_onto(domain_of(t.e), n);
  PartialSignedPerm aj = ordered_onto(domain_of(t.f), n);
  return compose(compose(aj, t.g), inverse(ai));
}

bool check_anti_involution(const EnumeratedMonoid& m) {
  int M = m.size();
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b)
      if (m.inverse_of(m.product(a, b)) !=
          m.product(m.inverse_of(b), m.inverse_of(a)))
        return false;
  for (int a = 0; a < M; ++a) {
    auto t = triple_coordinates(m, a);
    auto ti = triple_coordinates(m, m.inverse_of(a));
    if (!(ti.e == t.f) || !(ti.f == t.e) || !(ti.g == inverse(t.g)))
      return false;
  }
  return true;
}

}  // namespace bmq
