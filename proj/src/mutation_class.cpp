#include "bmq/mutation_class.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

namespace bmq {

namespace {

std::vector<int> all_labels(const Quiver& q) { return q.labels(); }

bool has(const std::vector<int>& mask, int v) {
  return std::find(mask.begin(), mask.end(), v) != mask.end();
}

std::vector<int> neighbours_in(const Quiver& q, int v, const std::vector<int>& mask) {
  std::vector<int> out;
  for (int u : neighbours(q, v))
    if (has(mask, u)) out.push_back(u);
  return out;
}

int degree_in(const Quiver& q, int v, const std::vector<int>& mask) {
  return static_cast<int>(neighbours_in(q, v, mask).size());
}

bool connected_in(const Quiver& q, const std::vector<int>& mask) {
  if (mask.empty()) return true;
  std::set<int> seen{mask[0]};
  std::queue<int> bfs;
  bfs.push(mask[0]);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int u : neighbours_in(q, v, mask))
      if (seen.insert(u).second) bfs.push(u);
  }
  return seen.size() == mask.size();
}

// Connected components of the subquiver induced by mask, optionally ignoring
// one undirected edge.
std::vector<std::vector<int>> components_in(const Quiver& q,
                                            const std::vector<int>& mask,
                                            int skip_a = DShapeReport::kUnsetRole,
                                            int skip_b = DShapeReport::kUnsetRole) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int s : mask) {
    if (seen.count(s)) continue;
    std::vector<int> comp;
    std::queue<int> bfs;
    bfs.push(s);
    seen.insert(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      comp.push_back(v);
      for (int u : neighbours_in(q, v, mask)) {
        if ((v == skip_a && u == skip_b) || (v == skip_b && u == skip_a)) continue;
        if (seen.insert(u).second) bfs.push(u);
      }
    }
    std::sort(comp.begin(), comp.end(), label_less);
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool weights_all_one(const Quiver& q, const std::vector<int>& mask) {
  for (size_t i = 0; i < mask.size(); ++i)
    for (size_t j = i + 1; j < mask.size(); ++j)
      if (weight(q, mask[i], mask[j]) > 1) return false;
  return true;
}

std::vector<SimpleCycle> cycles_in(const Quiver& q, const std::vector<int>& mask) {
  std::vector<SimpleCycle> out;
  for (const auto& sc : simple_cycles(q)) {
    bool inside = true;
    for (int v : sc.vertices)
      if (!has(mask, v)) inside = false;
    if (inside) out.push_back(sc);
  }
  return out;
}

bool oriented_triangle(const Quiver& q, int u, int v, int w) {
  return (q.arrow(u, v) && q.arrow(v, w) && q.arrow(w, u)) ||
         (q.arrow(u, w) && q.arrow(w, v) && q.arrow(v, u));
}

// Oriented 3-cycles within mask, as sorted vertex triples.
std::vector<std::vector<int>> triangles_in(const Quiver& q,
                                           const std::vector<int>& mask) {
  std::vector<std::vector<int>> out;
  for (const auto& sc : cycles_in(q, mask))
    if (sc.vertices.size() == 3 && sc.oriented) {
      auto t = sc.vertices;
      std::sort(t.begin(), t.end(), label_less);
      out.push_back(t);
    }
  return out;
}

bool check_A_eps_mask(const Quiver& q, const std::vector<int>& mask,
                      bool require_eps) {
  bool have_eps = has(mask, kEps);
  if (require_eps && !have_eps) return false;
  if (!require_eps && have_eps) return false;
  if (mask.empty()) return false;
  if (!weights_all_one(q, mask)) return false;
  if (!connected_in(q, mask)) return false;
  auto cycles = cycles_in(q, mask);
  for (const auto& sc : cycles)
    if (sc.vertices.size() != 3 || !sc.oriented) return false;
  auto tris = triangles_in(q, mask);
  for (int v : mask) {
    auto nb = neighbours_in(q, v, mask);
    int deg = static_cast<int>(nb.size());
    if (deg > 4) return false;
    std::vector<std::vector<int>> mine;
    for (const auto& t : tris)
      if (has(t, v)) mine.push_back(t);
    if (deg == 4) {
      // two incident triangles covering all four neighbours disjointly
      if (mine.size() != 2) return false;
      std::set<int> covered;
      for (const auto& t : mine)
        for (int u : t)
          if (u != v && !covered.insert(u).second) return false;
      if (covered.size() != 4) return false;
    } else if (deg == 3) {
      // one triangle; the remaining edge lies on no triangle
      if (mine.size() != 1) return false;
      for (int u : nb) {
        if (has(mine[0], u)) continue;
        for (const auto& t : tris)
          if (has(t, u) && has(t, v)) return false;
      }
    } else if (mine.size() > 1) {
      return false;
    }
  }
  if (have_eps) {
    int deg = degree_in(q, kEps, mask);
    if (deg > 2) return false;
    if (deg == 2) {
      bool in_tri = false;
      for (const auto& t : tris)
        if (has(t, kEps)) in_tri = true;
      if (!in_tri) return false;
    }
  }
  return true;
}

std::vector<int> connecting_in(const Quiver& q, const std::vector<int>& mask) {
  std::vector<int> out;
  auto tris = triangles_in(q, mask);
  for (int v : mask) {
    int deg = degree_in(q, v, mask);
    if (deg > 2) continue;
    if (deg == 2) {
      bool in_tri = false;
      for (const auto& t : tris)
        if (has(t, v)) in_tri = true;
      if (!in_tri) continue;
    }
    out.push_back(v);
  }
  return out;
}

// The frozen vertex may itself take an attachment role (c, d, or a spike) only
// when its component is the single vertex eps; otherwise eps would carry
// arrows beyond those of the shape.
bool eps_attachment_ok(const std::vector<int>& eps_comp, int eps_attach) {
  return eps_attach != kEps || eps_comp.size() == 1;
}

std::vector<int> minus(const std::vector<int>& mask, std::vector<int> drop) {
  std::vector<int> out;
  for (int v : mask)
    if (!has(drop, v)) out.push_back(v);
  return out;
}

}  // namespace

bool check_A_conditions(const Quiver& q, const std::vector<int>& mask) {
  return check_A_eps_mask(q, mask, false);
}

bool check_A_eps(const Quiver& q) {
  return check_A_eps_mask(q, all_labels(q), true);
}

std::vector<int> connecting_vertices(const Quiver& q) {
  return connecting_in(q, all_labels(q));
}

std::vector<int> connecting_vertices(const Quiver& q, const std::vector<int>& mask) {
  return connecting_in(q, mask);
}

bool check_B_eps(const Quiver& q) {
  auto all = all_labels(q);
  if (!connected_in(q, all)) return false;
  std::vector<std::pair<int, int>> w2;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      int w = weight(q, all[i], all[j]);
      if (w > 2) return false;
      if (w == 2) w2.push_back({all[i], all[j]});
    }
  if (w2.size() == 1) {
    auto [x, y] = w2[0];
    for (auto [z, a] : {std::pair{x, y}, std::pair{y, x}}) {
      if (z == kEps || a == kEps || degree_in(q, z, all) != 1) continue;
      auto mask = minus(all, {z});
      if (check_A_eps_mask(q, mask, true) && has(connecting_in(q, mask), a))
        return true;
    }
    return false;
  }
  if (w2.size() == 2) {
    // two weight-2 edges sharing the mutable vertex "0", closing an oriented
    // weight-1 triangle; dropping "0" leaves a marked type-A class member
    std::vector<int> e0{w2[0].first, w2[0].second};
    int z = has(e0, w2[1].first) ? w2[1].first
                                 : (has(e0, w2[1].second) ? w2[1].second
                                                          : DShapeReport::kUnsetRole);
    if (z == DShapeReport::kUnsetRole || z == kEps) return false;
    int p = w2[0].first == z ? w2[0].second : w2[0].first;
    int r = w2[1].first == z ? w2[1].second : w2[1].first;
    if (weight(q, p, r) != 1) return false;
    if (!oriented_triangle(q, z, p, r)) return false;
    if (degree_in(q, z, all) != 2) return false;
    auto mask = minus(all, {z});
    // the triangle base must not sit on a second 3-cycle
    for (int x : mask)
      if (x != p && x != r && weight(q, x, p) != 0 && weight(q, x, r) != 0)
        return false;
    return check_A_eps_mask(q, mask, true);
  }
  return false;
}

int b_zero_vertex(const Quiver& q) {
  auto all = all_labels(q);
  std::vector<int> w2_mates;
  int zero = DShapeReport::kUnsetRole;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (weight(q, all[i], all[j]) == 2) w2_mates.insert(w2_mates.end(), {all[i], all[j]});
  if (w2_mates.size() == 2) {
    zero = degree_in(q, w2_mates[0], all) == 1 ? w2_mates[0] : w2_mates[1];
    if (degree_in(q, zero, all) != 1 || zero == kEps)
      throw quiver_error("no pendant weight-2 endpoint");
  } else if (w2_mates.size() == 4) {
    for (int v : {w2_mates[0], w2_mates[1]})
      if (v == w2_mates[2] || v == w2_mates[3]) zero = v;
    if (zero == DShapeReport::kUnsetRole || zero == kEps)
      throw quiver_error("weight-2 edges share no mutable vertex");
  } else {
    throw quiver_error("not a B-class quiver");
  }
  return zero;
}

namespace {

// Validates the two glued components of D types II/III: the one holding eps
// must satisfy the marked type-A conditions, the other the unmarked ones,
// each attached at a connecting vertex.
bool check_two_components(const Quiver& q,
                          const std::vector<std::vector<int>>& comps,
                          int attach_first, int attach_second,
                          std::vector<int>* eps_comp, int* eps_attach) {
  if (comps.size() != 2) return false;
  const std::vector<int>* first = nullptr;
  const std::vector<int>* second = nullptr;
  for (const auto& c : comps) {
    if (has(c, attach_first)) first = &c;
    if (has(c, attach_second)) second = &c;
  }
  if (!first || !second || first == second) return false;
  for (auto [comp, attach] :
       {std::pair{first, attach_first}, std::pair{second, attach_second}}) {
    bool with_eps = has(*comp, kEps);
    if (!check_A_eps_mask(q, *comp, with_eps)) return false;
    if (!has(connecting_in(q, *comp), attach)) return false;
    if (with_eps) {
      *eps_comp = *comp;
      *eps_attach = attach;
    }
  }
  return has(*eps_comp, kEps) && eps_attachment_ok(*eps_comp, *eps_attach);
}

void classify_type_I(const Quiver& q, const std::vector<int>& all,
                     std::vector<DShapeReport>& out) {
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      int a = all[i], b = all[j];
      auto na = neighbours_in(q, a, all), nb = neighbours_in(q, b, all);
      if (na.size() != 1 || nb.size() != 1 || na[0] != nb[0]) continue;
      int c = na[0];
      auto mask = minus(all, {a, b});
      if (!check_A_eps_mask(q, mask, true)) continue;
      if (!has(connecting_in(q, mask), c)) continue;
      if (!eps_attachment_ok(mask, c)) continue;
      DShapeReport rep;
      rep.shape = 1;
      rep.a = a;
      rep.b = b;
      rep.c = c;
      rep.eps_component = mask;
      rep.eps_connecting = c;
      out.push_back(rep);
    }
}

void classify_type_II(const Quiver& q, const std::vector<int>& all,
                      std::vector<DShapeReport>& out) {
  for (int c : all)
    for (int d : all) {
      if (c == d || !q.arrow(d, c)) continue;
      std::vector<int> mids;
      for (int v : all)
        if (v != c && v != d && q.arrow(c, v) && q.arrow(v, d)) mids.push_back(v);
      for (size_t i = 0; i < mids.size(); ++i)
        for (size_t j = i + 1; j < mids.size(); ++j) {
          int a = mids[i], b = mids[j];
          if (weight(q, a, b) != 0) continue;  // full subquiver has no a-b edge
          if (degree_in(q, a, all) != 2 || degree_in(q, b, all) != 2) continue;
          auto comps = components_in(q, minus(all, {a, b}), c, d);
          DShapeReport rep;
          rep.shape = 2;
          if (!check_two_components(q, comps, c, d, &rep.eps_component,
                                    &rep.eps_connecting))
            continue;
          rep.a = a;
          rep.b = b;
          rep.c = c;
          rep.d = d;
          out.push_back(rep);
        }
    }
}

void classify_type_III(const Quiver& q, const std::vector<int>& all,
                       std::vector<DShapeReport>& out) {
  for (const auto& sc : cycles_in(q, all)) {
    if (sc.vertices.size() != 4 || !sc.oriented) continue;
    const auto& v = sc.vertices;
    if (weight(q, v[0], v[2]) != 0 || weight(q, v[1], v[3]) != 0) continue;
    // orient forwards: v0 -> v1 -> v2 -> v3 -> v0
    std::vector<int> cyc = v;
    if (!q.arrow(cyc[0], cyc[1])) std::reverse(cyc.begin() + 1, cyc.end());
    for (int off : {0, 1}) {
      // removing opposite pair (cyc[off], cyc[off+2]); with a = cyc[off] the
      // cycle reads a -> d -> b -> c -> a
      int a = cyc[off], d = cyc[off + 1], b = cyc[off + 2], c = cyc[(off + 3) % 4];
      if (label_less(b, a)) {
        std::swap(a, b);
        std::swap(c, d);
      }
      if (degree_in(q, a, all) != 2 || degree_in(q, b, all) != 2) continue;
      auto comps = components_in(q, minus(all, {a, b}));
      DShapeReport rep;
      rep.shape = 3;
      if (!check_two_components(q, comps, c, d, &rep.eps_component,
                                &rep.eps_connecting))
        continue;
      rep.a = a;
      rep.b = b;
      rep.c = c;
      rep.d = d;
      out.push_back(rep);
    }
  }
}

void classify_type_IV(const Quiver& q, const std::vector<int>& all,
                      std::vector<DShapeReport>& out) {
  for (const auto& sc : cycles_in(q, all)) {
    if (sc.vertices.size() < 3 || !sc.oriented || has(sc.vertices, kEps)) continue;
    std::vector<int> cyc = sc.vertices;
    if (!q.arrow(cyc[0], cyc[1])) std::reverse(cyc.begin() + 1, cyc.end());
    int d = static_cast<int>(cyc.size());
    bool chordless = true;
    for (int i = 0; i < d && chordless; ++i)
      for (int j = i + 2; j < d && chordless; ++j) {
        if (i == 0 && j == d - 1) continue;
        if (weight(q, cyc[i], cyc[j]) != 0) chordless = false;
      }
    if (!chordless) continue;
    // every outside neighbour of the cycle must be the spike of one arc
    std::vector<int> spike_of_arc(d, DShapeReport::kUnsetRole);
    bool ok = true;
    std::vector<int> spike_vertices;
    for (int v : all) {
      if (has(cyc, v)) continue;
      std::vector<int> touch;
      for (int u : cyc)
        if (weight(q, v, u) != 0) touch.push_back(u);
      if (touch.empty()) continue;
      if (touch.size() != 2) {
        ok = false;
        break;
      }
      int arc = -1;
      for (int i = 0; i < d; ++i) {
        int t = cyc[i], h = cyc[(i + 1) % d];
        if ((touch[0] == t && touch[1] == h) || (touch[0] == h && touch[1] == t)) {
          // spike triangle must run tail -> head -> spike -> tail
          if (q.arrow(h, v) && q.arrow(v, t)) arc = i;
        }
      }
      if (arc < 0 || spike_of_arc[arc] != DShapeReport::kUnsetRole) {
        ok = false;
        break;
      }
      spike_of_arc[arc] = v;
      spike_vertices.push_back(v);
    }
    if (!ok || spike_vertices.empty()) continue;
    auto comps = components_in(q, minus(all, cyc));
    if (comps.size() != spike_vertices.size()) continue;
    DShapeReport rep;
    rep.shape = 4;
    int eps_arc = -1;
    for (const auto& comp : comps) {
      int attach = DShapeReport::kUnsetRole;
      int arc = -1;
      for (int i = 0; i < d; ++i)
        if (spike_of_arc[i] != DShapeReport::kUnsetRole &&
            has(comp, spike_of_arc[i])) {
          if (attach != DShapeReport::kUnsetRole) {
            attach = DShapeReport::kUnsetRole;  // two spikes in one component
            break;
          }
          attach = spike_of_arc[i];
          arc = i;
        }
      if (attach == DShapeReport::kUnsetRole) {
        ok = false;
        break;
      }
      bool with_eps = has(comp, kEps);
      if (!check_A_eps_mask(q, comp, with_eps) ||
          !has(connecting_in(q, comp), attach) ||
          (with_eps && !eps_attachment_ok(comp, attach))) {
        ok = false;
        break;
      }
      if (with_eps) {
        rep.eps_component = comp;
        rep.eps_connecting = attach;
        eps_arc = arc;
      }
    }
    if (!ok || eps_arc < 0) continue;
    // central cycle order starts at the head of the eps-spike arc
    for (int i = 0; i < d; ++i)
      rep.central_cycle.push_back(cyc[(eps_arc + 1 + i) % d]);
    for (int i = 0; i < d; ++i)
      if (spike_of_arc[i] != DShapeReport::kUnsetRole)
        rep.spikes.push_back({{cyc[i], cyc[(i + 1) % d]}, spike_of_arc[i]});
    out.push_back(rep);
  }
}

}  // namespace

std::vector<DShapeReport> classify_D_eps_all(const Quiver& q) {
  auto all = all_labels(q);
  if (!connected_in(q, all) || !weights_all_one(q, all)) return {};
  std::vector<DShapeReport> out;
  classify_type_I(q, all, out);
  classify_type_II(q, all, out);
  classify_type_III(q, all, out);
  classify_type_IV(q, all, out);
  return out;
}

DShapeReport classify_D_eps(const Quiver& q) {
  auto matches = classify_D_eps_all(q);
  if (matches.empty()) throw quiver_error("quiver matches no D shape");
  if (matches.size() > 1) throw quiver_error("quiver matches several D shapes");
  return matches[0];
}

bool check_D_eps(const Quiver& q) { return classify_D_eps_all(q).size() == 1; }

ClassCatalog enumerate_class(const Quiver& q0) {
  ClassCatalog cat;
  cat.family = q0.family();
  cat.n = q0.family() == 'A' ? q0.mutable_count() + 1 : q0.mutable_count();
  for (int i = 0; i < q0.mutable_count(); ++i) cat.pivot_labels.push_back(q0.labels()[i]);
  std::sort(cat.pivot_labels.begin(), cat.pivot_labels.end());

  cat.members.push_back(q0);
  cat.keys.push_back(canonical_form(q0));
  cat.index[cat.keys[0]] = 0;
  cat.witness.push_back({});
  for (size_t head = 0; head < cat.members.size(); ++head) {
    std::vector<int> row;
    for (int p : cat.pivot_labels) {
      Quiver next = mutate(cat.members[head], p);
      std::string key = canonical_form(next);
      auto [it, fresh] = cat.index.emplace(key, cat.size());
      if (fresh) {
        cat.members.push_back(next);
        cat.keys.push_back(key);
        auto w = cat.witness[head];
        w.push_back(p);
        cat.witness.push_back(std::move(w));
      }
      row.push_back(it->second);
    }
    cat.adjacency.push_back(std::move(row));
  }
  return cat;
}

CharacterizationReport verify_class_characterization(char family, int n) {
  Quiver q0 = standard_quiver(family, n);
  ClassCatalog cat = enumerate_class(q0);
  std::set<std::string> enumerated;
  for (const auto& m : cat.members) enumerated.insert(canonical_diagram_key(m));

  auto pred = [family](const Quiver& q) {
    if (family == 'A') return check_A_eps(q);
    if (family == 'B') return check_B_eps(q);
    return check_D_eps(q);
  };

  CharacterizationReport rep;
  rep.enumerated = static_cast<int>(enumerated.size());
  for (const auto& m : cat.members)
    if (!pred(m)) ++rep.enumerated_only;

  auto labels = q0.labels();
  int nv = static_cast<int>(labels.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) pairs.push_back({labels[i], labels[j]});
  int states = family == 'B' ? 5 : 3;
  std::vector<int> odo(pairs.size(), 0);
  std::set<std::string> predicate_keys;
  while (true) {
    std::vector<Edge> edges;
    for (size_t t = 0; t < pairs.size(); ++t) {
      auto [u, v] = pairs[t];
      switch (odo[t]) {
        case 0: break;
        case 1: edges.push_back({u, v, 1}); break;
        case 2: edges.push_back({v, u, 1}); break;
        case 3: edges.push_back({u, v, 2}); break;
        case 4: edges.push_back({v, u, 2}); break;
      }
    }
    try {
      Quiver q = quiver_from_edges(family, labels, edges);
      if (pred(q)) {
        std::string key = canonical_diagram_key(q);
        if (predicate_keys.insert(key).second && !enumerated.count(key))
          ++rep.predicate_only;
      }
    } catch (const quiver_error&) {
      // diagram without a symmetrizer; not a quiver at all
    }
    size_t t = 0;
    while (t < odo.size() && ++odo[t] == states) odo[t++] = 0;
    if (t == odo.size()) break;
  }
  return rep;
}

}  // namespace bmq
