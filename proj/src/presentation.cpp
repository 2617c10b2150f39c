#include "bmq/presentation.hpp"

#include <algorithm>

#include "bmq/mutation_class.hpp"

namespace bmq {

namespace {

Word alternating(int first, int second, int len) {
  Word w;
  for (int t = 0; t < len; ++t) w.push_back(t % 2 == 0 ? first : second);
  return w;
}

Word repeated(const Word& block, int times) {
  Word w;
  for (int t = 0; t < times; ++t) w.insert(w.end(), block.begin(), block.end());
  return w;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// s_{i1} ... s_{i_{d-1}} ... s_{i1}, the full palindrome over the list.
Word palindrome(const std::vector<int>& v) {
  Word w(v.begin(), v.end());
  for (int t = static_cast<int>(v.size()) - 2; t >= 0; --t) w.push_back(v[t]);
  return w;
}

// s_{i0} s_{i1} ... s_{i_{d-1}} ... s_{i1} for a cycle given in arrow order.
Word zigzag(const std::vector<int>& cyc) {
  Word w(cyc.begin(), cyc.end());
  for (int t = static_cast<int>(cyc.size()) - 2; t >= 1; --t) w.push_back(cyc[t]);
  return w;
}

std::vector<int> sorted_mutable(const Quiver& q) {
  std::vector<int> out(q.labels().begin(), q.labels().end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

void append_unique(std::vector<Relation>& out, Relation r) {
  for (const auto& have : out)
    if (have.lhs == r.lhs && have.rhs == r.rhs) return;
  out.push_back(std::move(r));
}

}  // namespace

int MTable::m(int i, int j) const {
  if (i == j) return 1;
  auto it = pairs.find({std::min(i, j), std::max(i, j)});
  if (it == pairs.end()) throw quiver_error("pair not in m-table");
  return it->second;
}

MTable m_table(const Quiver& q) {
  MTable t;
  auto mut = sorted_mutable(q);
  for (size_t i = 0; i < mut.size(); ++i)
    for (size_t j = i + 1; j < mut.size(); ++j) {
      int w = weight(q, mut[i], mut[j]);
      int m;
      switch (w) {
        case 0: m = 2; break;
        case 1: m = 3; break;
        case 2: m = 4; break;
        case 3: m = 6; break;
        default: throw quiver_error("unsupported edge weight");
      }
      t.pairs[{mut[i], mut[j]}] = m;
    }
  for (int j : mut) {
    int w = weight(q, kEps, j);
    switch (w) {
      case 0: t.eps[j] = {2, 2}; break;
      case 1: t.eps[j] = {3, 4}; break;
      case 2: t.eps[j] = {1, 2}; break;
      default: throw quiver_error("unsupported frozen edge weight");
    }
  }
  return t;
}

std::vector<Relation> relations_R1_R2(const Quiver& q) {
  std::vector<Relation> out;
  auto mut = sorted_mutable(q);
  for (int i : mut) out.push_back({{i, i}, {}, "R1"});
  out.push_back({{kEps, kEps}, {kEps}, "R1"});
  MTable t = m_table(q);
  for (size_t i = 0; i < mut.size(); ++i)
    for (size_t j = i + 1; j < mut.size(); ++j)
      out.push_back({repeated({mut[i], mut[j]}, t.m(mut[i], mut[j])), {}, "R2"});
  for (int j : mut) {
    auto [mej, mje] = t.eps.at(j);
    if (mje == 2 && mej == 2) {
      out.push_back({{j, kEps}, {kEps, j}, "R2"});
      continue;
    }
    Word a = alternating(kEps, j, mej);
    Word b = alternating(j, kEps, mje);
    Word c = alternating(kEps, j, mej + 1);
    out.push_back({a, b, "R2"});
    out.push_back({b, c, "R2"});
  }
  return out;
}

std::vector<Relation> relations_R3(const Quiver& q) {
  std::vector<Relation> out;
  for (const auto& cc : chordless_cycles(q)) {
    int d = cc.length();
    if (!cc.contains_frozen) {
      bool all_one = std::all_of(cc.weights.begin(), cc.weights.end(),
                                 [](int w) { return w == 1; });
      if (all_one) {
        append_unique(out, {repeated(zigzag(cc.vertices), 2), {}, "R3i"});
        continue;
      }
      // rotate so that the incoming arc of the base point has weight 2
      bool emitted = false;
      for (int r = 0; r < d; ++r) {
        if (cc.weights[(r + d - 1) % d] != 2) continue;
        std::vector<int> rot;
        for (int t = 0; t < d; ++t) rot.push_back(cc.vertices[(r + t) % d]);
        append_unique(out, {repeated(zigzag(rot), 2), {}, "R3i"});
        emitted = true;
      }
      if (!emitted) throw quiver_error("unsupported mutable cycle weights");
      continue;
    }
    // rotate so the frozen vertex comes first
    int at = 0;
    while (cc.vertices[at] != kEps) ++at;
    std::vector<int> rot;
    std::vector<int> wrot;
    for (int t = 0; t < d; ++t) {
      rot.push_back(cc.vertices[(at + t) % d]);
      wrot.push_back(cc.weights[(at + t) % d]);
    }
    bool all_one = std::all_of(wrot.begin(), wrot.end(),
                               [](int w) { return w == 1; });
    if (all_one) {
      Word w = palindrome(std::vector<int>(rot.begin() + 1, rot.end()));
      Word lhs{kEps};
      lhs.insert(lhs.end(), w.begin(), w.end());
      Word rhs = w;
      rhs.push_back(kEps);
      append_unique(out, {lhs, rhs, "R3ii"});
      continue;
    }
    if (d == 3 && wrot[1] == 2) {
      int i1 = rot[1], i2 = rot[2];
      int w1 = wrot[0], w2 = wrot[2];
      if (w1 == 1 && w2 == 2) {
        append_unique(out, {{kEps, i1, i2, i1}, {i1, i2, i1, kEps}, "R3iii"});
        continue;
      }
      if (w1 == 2 && w2 == 1) {
        append_unique(out, {{i1, i2, kEps, i2}, {i2, kEps, i2, i1}, "R3iii"});
        continue;
      }
    }
    throw quiver_error("unsupported frozen cycle weights");
  }
  return out;
}

namespace {

// P(s_c, s_eps) P(s_eps, s_c) with the repeated middle s_eps collapsed.
Word path_palindrome(const Quiver& q, int c) {
  auto path = shortest_path_to_frozen(q, c);
  Word w(path.begin(), path.end());
  for (int t = static_cast<int>(path.size()) - 2; t >= 0; --t) w.push_back(path[t]);
  return w;
}

}  // namespace

std::vector<Relation> relations_R4(const Quiver& q) {
  std::vector<Relation> out;
  if (q.family() == 'A') return out;
  if (q.family() == 'B') {
    int zero = b_zero_vertex(q);
    auto path = shortest_path_to_frozen(q, zero);
    Word full(path.begin(), path.end());
    Word tail(path.begin() + 1, path.end());
    out.push_back({full, tail, "R4i"});
    out.push_back({reversed(full), reversed(tail), "R4i"});
    return out;
  }
  DShapeReport rep = classify_D_eps(q);
  if (rep.shape <= 3) {
    out.push_back({path_palindrome(q, rep.a), path_palindrome(q, rep.b), "R4ii"});
    return out;
  }
  Word pp = path_palindrome(q, rep.eps_connecting);
  const auto& cyc = rep.central_cycle;
  Word lhs{cyc[0]};
  lhs.insert(lhs.end(), pp.begin(), pp.end());
  lhs.push_back(cyc[0]);
  Word rhs(cyc.begin() + 1, cyc.end());
  rhs.insert(rhs.end(), pp.begin(), pp.end());
  for (int t = static_cast<int>(cyc.size()) - 1; t >= 1; --t) rhs.push_back(cyc[t]);
  out.push_back({lhs, rhs, "R4ii"});
  return out;
}

Presentation present(const Quiver& q) {
  Presentation p;
  p.kind = "monoid";
  p.generators = sorted_mutable(q);
  p.generators.push_back(kEps);
  for (auto& r : relations_R1_R2(q)) append_unique(p.relations, r);
  for (auto& r : relations_R3(q)) append_unique(p.relations, r);
  for (auto& r : relations_R4(q)) append_unique(p.relations, r);
  return p;
}

namespace {

int coxeter_m(char family, int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  if (family == 'A') return j == i + 1 ? 3 : 2;
  if (family == 'B') {
    if (i == 0 && j == 1) return 4;
    return j == i + 1 ? 3 : 2;
  }
  // D: 0 attaches to 2, the chain is 1-2-...-(n-1)
  if (i == 0) return j == 2 ? 3 : 2;
  return j == i + 1 ? 3 : 2;
}

}  // namespace

Presentation ef_presentation(char family, int n) {
  int lo = family == 'D' ? 4 : 2;
  if ((family != 'A' && family != 'B' && family != 'D') || n < lo)
    throw quiver_error("rank out of bounds");
  Presentation p;
  p.kind = "monoid";
  int first = family == 'A' ? 1 : 0;
  for (int i = first; i <= n - 1; ++i) p.generators.push_back(i);
  p.generators.push_back(kEps);

  for (int i = first; i <= n - 1; ++i) p.relations.push_back({{i, i}, {}, "R1"});
  p.relations.push_back({{kEps, kEps}, {kEps}, "R1"});
  for (int i = first; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      p.relations.push_back({repeated({i, j}, coxeter_m(family, i, j)), {}, "R2"});

  auto braid_triple = [&p](int j) {
    p.relations.push_back(
        {{kEps, j, kEps, j}, {j, kEps, j, kEps}, "R2"});
    p.relations.push_back({{j, kEps, j, kEps}, {kEps, j, kEps}, "R2"});
  };
  if (family == 'A') {
    for (int i = 2; i <= n - 1; ++i)
      p.relations.push_back({{i, kEps}, {kEps, i}, "R2"});
    braid_triple(1);
  } else if (family == 'B') {
    p.relations.push_back({{0, 1, kEps, 1}, {1, kEps, 1, 0}, "R3iii"});
    p.relations.push_back({{0, kEps}, {kEps}, "R2"});
    for (int i = 0; i <= n - 1; ++i)
      if (i != 1) p.relations.push_back({{i, kEps}, {kEps, i}, "R2"});
    braid_triple(1);
  } else {
    for (int i = 2; i <= n - 1; ++i)
      p.relations.push_back({{i, kEps}, {kEps, i}, "R2"});
    braid_triple(1);
    p.relations.push_back({{0, kEps, 0}, {1, kEps, 1}, "R4ii"});
    p.relations.push_back(
        {{0, 2, 1, kEps, 1, 2}, {2, 1, kEps, 1, 2, 0}, "R4ii"});
  }
  return p;
}

Presentation group_presentation(const Quiver& q) {
  Presentation p;
  p.kind = "group";
  p.generators = sorted_mutable(q);
  MTable t = m_table(q);
  for (int i : p.generators) p.relations.push_back({{i, i}, {}, "R1"});
  for (size_t i = 0; i < p.generators.size(); ++i)
    for (size_t j = i + 1; j < p.generators.size(); ++j) {
      int a = p.generators[i], b = p.generators[j];
      p.relations.push_back({repeated({a, b}, t.m(a, b)), {}, "R2"});
    }
  for (const auto& cc : chordless_cycles(q)) {
    if (cc.contains_frozen) continue;
    int d = cc.length();
    bool all_one = std::all_of(cc.weights.begin(), cc.weights.end(),
                               [](int w) { return w == 1; });
    if (all_one) {
      append_unique(p.relations,
                    {repeated(zigzag(cc.vertices), 2), {}, "GroupCycle"});
      continue;
    }
    for (int r = 0; r < d; ++r) {
      if (cc.weights[(r + d - 1) % d] != 2) continue;
      std::vector<int> rot;
      for (int u = 0; u < d; ++u) rot.push_back(cc.vertices[(r + u) % d]);
      append_unique(p.relations, {repeated(zigzag(rot), 2), {}, "GroupCycle"});
    }
  }
  return p;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += label_name(w[t]);
  }
  return out;
}

}  // namespace bmq
