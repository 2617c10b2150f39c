#include "bmq/psperm.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "bmq/quiver.hpp"

namespace bmq {

int PartialSignedPerm::rank() const {
  int r = 0;
  for (int i = 1; i <= n; ++i)
    if (img[i] != 0) ++r;
  return r;
}

bool PartialSignedPerm::is_partial_identity() const {
  for (int i = 1; i <= n; ++i)
    if (img[i] != 0 && img[i] != i) return false;
  return true;
}

bool PartialSignedPerm::all_positive() const {
  for (int i = 1; i <= n; ++i)
    if (img[i] < 0) return false;
  return true;
}

PartialSignedPerm full_identity(int n) {
  PartialSignedPerm x;
  x.n = n;
  for (int i = 1; i <= n; ++i) x.img[i] = static_cast<int8_t>(i);
  return x;
}

PartialSignedPerm partial_identity(int n, const std::vector<int>& subset) {
  PartialSignedPerm x;
  x.n = n;
  for (int i : subset) {
    if (i < 1 || i > n) throw std::invalid_argument("point out of range");
    x.img[i] = static_cast<int8_t>(i);
  }
  return x;
}

PartialSignedPerm compose(const PartialSignedPerm& x, const PartialSignedPerm& y) {
  if (x.n != y.n) throw std::invalid_argument("ground set mismatch");
  PartialSignedPerm r;
  r.n = x.n;
  for (int i = 1; i <= x.n; ++i) {
    int v = y.img[i];
    if (v == 0) continue;
    int j = std::abs(v);
    int w = x.img[j];
    if (w == 0) continue;
    r.img[i] = static_cast<int8_t>(v < 0 ? -w : w);
  }
  return r;
}

PartialSignedPerm inverse(const PartialSignedPerm& x) {
  PartialSignedPerm r;
  r.n = x.n;
  for (int i = 1; i <= x.n; ++i) {
    int v = x.img[i];
    if (v == 0) continue;
    r.img[std::abs(v)] = static_cast<int8_t>(v < 0 ? -i : i);
  }
  return r;
}

std::string element_text(const PartialSignedPerm& x) {
  std::string top, bot;
  for (int i = 1; i <= x.n; ++i) {
    if (i > 1) {
      top += ' ';
      bot += ' ';
    }
    top += std::to_string(i);
    bot += x.img[i] == 0 ? "-" : std::to_string(static_cast<int>(x.img[i]));
  }
  return top + " / " + bot;
}

std::map<int, PartialSignedPerm> realize_generators(char family, int n) {
  if (family != 'A' && family != 'B' && family != 'D')
    throw std::invalid_argument("unknown family");
  int lo = (family == 'A') ? 2 : (family == 'B' ? 2 : 4);
  if (n < lo || n > kMaxGround) throw std::invalid_argument("rank out of bounds");

  std::map<int, PartialSignedPerm> gens;
  auto transposition = [n](int i) {
    PartialSignedPerm x = full_identity(n);
    x.img[i] = static_cast<int8_t>(i + 1);
    x.img[i + 1] = static_cast<int8_t>(i);
    return x;
  };
  std::vector<int> dropped;
  for (int i = 1; i <= n - 1; ++i) dropped.push_back(i);

  if (family == 'A') {
    for (int i = 1; i <= n - 1; ++i) gens[i] = transposition(i);
  } else {
    if (family == 'B') {
      PartialSignedPerm s0 = full_identity(n);
      s0.img[1] = -1;
      gens[0] = s0;
    } else {
      PartialSignedPerm s0 = full_identity(n);
      s0.img[1] = -2;
      s0.img[2] = -1;
      gens[0] = s0;
    }
    for (int i = 1; i <= n - 1; ++i) gens[i] = transposition(i);
  }
  gens[kEps] = partial_identity(n, dropped);
  return gens;
}

PartialSignedPerm evaluate_word(const std::vector<int>& word,
                                const std::map<int, PartialSignedPerm>& gens,
                                int n) {
  PartialSignedPerm acc = full_identity(n);
  for (int letter : word) {
    auto it = gens.find(letter);
    if (it == gens.end()) throw std::invalid_argument("unknown letter in word");
    acc = compose(acc, it->second);
  }
  return acc;
}

int EnumeratedMonoid::index_of(const PartialSignedPerm& x) const {
  auto it = index.find(x);
  return it == index.end() ? -1 : it->second;
}

int EnumeratedMonoid::product(int a, int b) const {
  int r = index_of(compose(elements[a], elements[b]));
  if (r < 0) throw std::logic_error("monoid not closed");
  return r;
}

int EnumeratedMonoid::inverse_of(int a) const {
  int r = index_of(inverse(elements[a]));
  if (r < 0) throw std::logic_error("inverse not in monoid");
  return r;
}

EnumeratedMonoid generator_closure(const std::map<int, PartialSignedPerm>& gens,
                                   int n, std::size_t cap) {
  EnumeratedMonoid m;
  m.n = n;
  auto add = [&m](const PartialSignedPerm& x) {
    auto [it, fresh] = m.index.emplace(x, m.size());
    if (fresh) m.elements.push_back(x);
    return it->second;
  };
  add(full_identity(n));
  std::vector<PartialSignedPerm> gen_list;
  for (const auto& [label, g] : gens) {
    m.generator_labels.push_back(label);
    m.generator_indices.push_back(add(g));
    gen_list.push_back(g);
  }
  for (std::size_t head = 0; head < m.elements.size(); ++head) {
    for (const auto& g : gen_list) {
      add(compose(m.elements[head], g));
      if (m.elements.size() > cap) throw std::runtime_error("closure cap exceeded");
    }
  }
  return m;
}

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long factorial(int k) {
  long long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

long long count_partial_injections(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) total += binom(n, k) * binom(n, k) * factorial(k);
  return total;
}

long long count_signed_partial_injections(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k)
    total += binom(n, k) * binom(n, k) * (1LL << k) * factorial(k);
  return total;
}

long long expected_cardinality(char family, int n) {
  if (family == 'A') return count_partial_injections(n);
  if (family == 'B') return count_signed_partial_injections(n);
  if (family == 'D') {
    long long total = 0;
    for (int k = 0; k < n; ++k)
      total += binom(n, k) * binom(n, k) * (1LL << k) * factorial(k);
    total += (1LL << (n - 1)) * factorial(n);
    return total;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace bmq
