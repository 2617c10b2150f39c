#include "bmq/automorphisms.hpp"

#include <algorithm>
#include <random>

namespace bmq {

std::vector<int> double_mutation_sequence(const Word& g) {
  std::vector<int> out;
  for (int letter : g) {
    if (letter == kEps) throw quiver_error("eps is not a mutable generator");
    out.push_back(letter);
    out.push_back(letter);
  }
  return out;
}

std::pair<TrackedQuiver, GeneratorSet> apply_inner(
    const Quiver& q0, const Word& g,
    const std::map<int, PartialSignedPerm>& base, int n) {
  auto tq = mutate_tracked_sequence(make_tracked(q0, base, n),
                                    double_mutation_sequence(g));
  if (!(tq.quiver == q0))
    throw quiver_error("double mutation did not restore the quiver");
  GeneratorSet gs{tq.words, tq.values};
  return {std::move(tq), std::move(gs)};
}

PartialSignedPerm reflection_via_mutation(
    const Quiver& q0, const Word& g, int i,
    const std::map<int, PartialSignedPerm>& base, int n) {
  return apply_inner(q0, g, base, n).second.values.at(i);
}

Word longest_element(char family, int n) {
  Word w;
  if (family == 'A') {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i; j >= 1; --j) w.push_back(j);
    return w;
  }
  if (family == 'B') {
    for (int i = n; i >= 1; --i) {
      for (int j = i - 1; j >= 0; --j) w.push_back(j);
      for (int j = 1; j <= i - 1; ++j) w.push_back(j);
    }
    return w;
  }
  if (family == 'D') {
    for (int i = n; i >= 3; --i) {
      for (int j = i - 1; j >= 2; --j) w.push_back(j);
      w.push_back(1);
      w.push_back(0);
      for (int j = 2; j <= i - 1; ++j) w.push_back(j);
    }
    w.push_back(1);
    w.push_back(0);
    return w;
  }
  throw quiver_error("unknown family");
}

bool check_center_fixes_eps(char family, int n) {
  auto base = realize_generators(family, n);
  auto w0 = evaluate_word(longest_element(family, n), base, n);
  auto eps = base.at(kEps);
  return compose(compose(w0, eps), inverse(w0)) == eps;
}

namespace {

struct UnitGroup {
  EnumeratedMonoid group;
  std::vector<int> dist;      // Cayley-graph distance from the identity
  std::vector<int> labels;    // generator labels, aligned with indices
};

UnitGroup unit_group(char family, int n) {
  auto base = realize_generators(family, n);
  base.erase(kEps);
  UnitGroup u;
  u.group = generator_closure(base, n);
  u.labels = u.group.generator_labels;
  u.dist.assign(u.group.size(), -1);
  u.dist[0] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : u.group.generator_indices) {
        int y = u.group.product(x, g);
        if (u.dist[y] < 0) {
          u.dist[y] = u.dist[x] + 1;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return u;
}

}  // namespace

Word random_reduced_word(char family, int n, uint64_t seed) {
  static std::map<std::pair<char, int>, UnitGroup> cache;
  auto key = std::make_pair(family, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, unit_group(family, n)).first;
  const UnitGroup& u = it->second;

  std::mt19937_64 rng(seed);
  int x = static_cast<int>(rng() % u.group.size());
  // walk down to the identity; reversed step letters give a reduced word
  Word rev;
  while (u.dist[x] > 0) {
    std::vector<int> down;
    for (size_t gi = 0; gi < u.group.generator_indices.size(); ++gi)
      if (u.dist[u.group.product(x, u.group.generator_indices[gi])] < u.dist[x])
        down.push_back(static_cast<int>(gi));
    int pick = down[rng() % down.size()];
    rev.push_back(u.labels[pick]);
    x = u.group.product(x, u.group.generator_indices[pick]);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace bmq
