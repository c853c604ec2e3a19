#pragma once

#include <stdexcept>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Abelianization image of a pure braid: one integer per unordered strand pair
// {p < q}, the linking number (half the signed crossing count).
struct LinkingVector {
  int strands = 1;
  std::vector<long long> entries;  // indexed by pair_index

  explicit LinkingVector(int m)
      : strands(m), entries(static_cast<size_t>(m) * (m - 1) / 2, 0) {}

  static int pair_index(int p, int q, int m) {
    if (p > q) std::swap(p, q);
    if (!(1 <= p && p < q && q <= m)) throw std::invalid_argument("pair_index: bad strand pair");
    // pairs (1,2),(1,3),...,(1,m),(2,3),...
    return (p - 1) * m - p * (p - 1) / 2 + (q - p - 1);
  }

  long long& at(int p, int q) { return entries[pair_index(p, q, strands)]; }
  long long at(int p, int q) const { return entries[pair_index(p, q, strands)]; }

  bool is_zero() const {
    for (long long e : entries)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const LinkingVector& a, const LinkingVector& b) {
    return a.strands == b.strands && a.entries == b.entries;
  }

  friend LinkingVector operator+(const LinkingVector& a, const LinkingVector& b) {
    if (a.strands != b.strands) throw std::invalid_argument("LinkingVector: strand mismatch");
    LinkingVector s(a.strands);
    for (size_t t = 0; t < s.entries.size(); ++t) s.entries[t] = a.entries[t] + b.entries[t];
    return s;
  }
};

// Tracks strands through the word and accumulates signed crossings per pair,
// doubled; purity makes every doubled count even. Throws on non-pure input.
inline LinkingVector linking(const BraidWord& w) {
  const int m = w.strands();
  std::vector<int> at_pos(static_cast<size_t>(m));
  for (int p = 0; p < m; ++p) at_pos[p] = p + 1;

  LinkingVector v(m);
  for (int l : w.letters()) {
    int g = l < 0 ? -l : l;
    int p = at_pos[g - 1], q = at_pos[g];
    v.at(p, q) += l < 0 ? -1 : 1;
    std::swap(at_pos[g - 1], at_pos[g]);
  }
  for (int p = 0; p < m; ++p)
    if (at_pos[p] != p + 1) throw std::invalid_argument("linking: word is not pure");
  for (long long& e : v.entries) {
    if (e % 2 != 0) throw std::logic_error("linking: odd crossing count on a pure braid");
    e /= 2;
  }
  return v;
}

}  // namespace braid
