#pragma once

#include <string>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Left Garside normal form Delta^infimum f_1 ... f_k over permutation-braid
// factors. Factors are the permutations of the corresponding positive
// permutation braids; no factor is the identity or Delta, and consecutive
// factors are left-weighted. The form is a complete invariant, so comparing
// normal forms decides the word problem.
struct GarsideNormalForm {
  int strands = 1;
  long long infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm& a, const GarsideNormalForm& b) {
    return a.strands == b.strands && a.infimum == b.infimum && a.factors == b.factors;
  }
};

namespace detail {

// Finishing set F(x): positions i with x(i) > x(i+1), i.e. x ends with s_i.
inline bool in_finishing_set(const Permutation& x, int i) { return x(i) > x(i + 1); }

// Starting set S(x): x begins with s_i, i.e. value i occurs after value i+1.
inline std::vector<char> starting_set(const Permutation& x) {
  int m = x.size();
  std::vector<int> pos(static_cast<size_t>(m) + 1);
  for (int p = 1; p <= m; ++p) pos[x(p)] = p;
  std::vector<char> s(static_cast<size_t>(m), 0);  // index i-1 for generator i
  for (int i = 1; i < m; ++i) s[i - 1] = pos[i] > pos[i + 1];
  return s;
}

// x -> x * s_i (swap the entries at positions i, i+1).
inline void right_mul(std::vector<int>& img, int i) { std::swap(img[i - 1], img[i]); }

// x -> s_i * x (swap the values i, i+1 wherever they occur).
inline void left_mul(std::vector<int>& img, int i) {
  for (int& v : img) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
}

// Makes the adjacent pair (a, b) left-weighted by moving initial letters of b
// into a while some s_i starts b but does not finish a. Returns true if the
// pair changed.
inline bool left_weight_pair(Permutation& a, Permutation& b) {
  bool changed = false;
  int m = a.size();
  std::vector<int> ai = a.images(), bi = b.images();
  for (;;) {
    std::vector<int> pos(static_cast<size_t>(m) + 1);
    for (int p = 1; p <= m; ++p) pos[bi[p - 1]] = p;
    int move = 0;
    for (int i = 1; i < m; ++i) {
      bool starts_b = pos[i] > pos[i + 1];
      bool finishes_a = ai[i - 1] > ai[i];
      if (starts_b && !finishes_a) {
        move = i;
        break;
      }
    }
    if (move == 0) break;
    right_mul(ai, move);
    left_mul(bi, move);
    changed = true;
  }
  if (changed) {
    a = Permutation(std::move(ai));
    b = Permutation(std::move(bi));
  }
  return changed;
}

// Repeated sweeps of the local operation, removing identity factors, until
// every adjacent pair is left-weighted. Each move shifts weight leftward, so
// the prefix-length vector increases lexicographically and the loop ends.
inline void left_weight_sequence(std::vector<Permutation>& fs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < fs.size(); ++t)
      changed |= left_weight_pair(fs[t], fs[t + 1]);
    size_t kept = 0;
    for (size_t t = 0; t < fs.size(); ++t)
      if (!fs[t].is_identity()) fs[kept++] = fs[t];
    if (kept != fs.size()) {
      fs.resize(kept);
      changed = true;
    }
  }
}

// A reduced positive word for a permutation braid: repeatedly strip the
// smallest final descent. For the half twist this yields 1 2 1 3 2 1 ...
inline std::vector<int> positive_word(const Permutation& x) {
  std::vector<int> img = x.images();
  int m = x.size();
  std::vector<int> rev;
  for (;;) {
    int d = 0;
    for (int i = 1; i < m; ++i)
      if (img[i - 1] > img[i]) {
        d = i;
        break;
      }
    if (d == 0) break;
    rev.push_back(d);
    right_mul(img, d);
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace detail

// Left normal form of the braid element represented by w; independent of the
// spelling of w. Negative letters are absorbed via s_g^{-1} = Delta^{-1} (Delta s_g^{-1}),
// where the bracket is a permutation braid, and every Delta^{-1} is pushed to
// the front through the flip automorphism x -> Delta^{-1} x Delta.
inline GarsideNormalForm normal_form(const BraidWord& w) {
  const int m = w.strands();
  GarsideNormalForm nf;
  nf.strands = m;
  if (w.empty()) return nf;

  const auto& ls = w.letters();
  const size_t L = ls.size();
  std::vector<int> neg_after(L + 1, 0);
  for (size_t t = L; t-- > 0;) neg_after[t] = neg_after[t + 1] + (ls[t] < 0 ? 1 : 0);
  nf.infimum = -neg_after[0];

  const Permutation w0 = Permutation::reversal(m);
  std::vector<Permutation> fs;
  fs.reserve(L);
  for (size_t t = 0; t < L; ++t) {
    int g = ls[t] < 0 ? -ls[t] : ls[t];
    Permutation f = Permutation::transposition(m, g);
    if (ls[t] < 0) f = w0 * f;
    if (neg_after[t + 1] % 2 == 1) f = w0 * f * w0;
    if (!f.is_identity()) fs.push_back(std::move(f));
  }

  detail::left_weight_sequence(fs);

  size_t lead = 0;
  while (lead < fs.size() && fs[lead] == w0) ++lead;
  nf.infimum += static_cast<long long>(lead);
  nf.factors.assign(fs.begin() + static_cast<std::ptrdiff_t>(lead), fs.end());
  return nf;
}

// Word-problem oracle: true iff u and v represent the same braid element.
inline bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("equal: strand counts differ");
  return normal_form(u) == normal_form(v);
}

// Renders a normal form back to a braid word Delta^infimum f_1 ... f_k.
inline BraidWord normal_form_word(const GarsideNormalForm& nf) {
  BraidWord w(nf.strands);
  if (nf.strands > 1) {
    std::vector<int> delta = detail::positive_word(Permutation::reversal(nf.strands));
    if (nf.infimum >= 0) {
      for (long long r = 0; r < nf.infimum; ++r)
        for (int g : delta) w.push(g);
    } else {
      for (long long r = 0; r < -nf.infimum; ++r)
        for (auto it = delta.rbegin(); it != delta.rend(); ++it) w.push(-*it);
    }
  }
  for (const auto& f : nf.factors)
    for (int g : detail::positive_word(f)) w.push(g);
  return w;
}

// Golden-file serialization: the infimum, then one factor per line as the
// permutation's image sequence.
inline std::string normal_form_text(const GarsideNormalForm& nf) {
  std::string s = std::to_string(nf.infimum);
  for (const auto& f : nf.factors) {
    s += '\n';
    for (int p = 1; p <= f.size(); ++p) {
      if (p > 1) s += ' ';
      s += std::to_string(f(p));
    }
  }
  return s;
}

}  // namespace braid
