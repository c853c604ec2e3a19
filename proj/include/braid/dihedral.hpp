#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid/intmat.hpp"

namespace braid {

// Word in the two generators of the dihedral Artin group B_{I_n}: letters are
// +-1 and +-2, n is the Coxeter label on the edge.
struct DihedralWord {
  int n = 2;
  std::vector<int> letters;

  DihedralWord(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {
    if (n < 2) throw std::invalid_argument("DihedralWord: label must be >= 2");
    for (int l : letters)
      if (l == 0 || std::abs(l) > 2) throw std::invalid_argument("DihedralWord: letters are +-1, +-2");
  }

  std::string str() const {
    std::string s;
    for (int l : letters) s += l > 0 ? std::to_string(l) : "-" + std::to_string(-l);
    return s;
  }
};

// Element of the dihedral group D_{2n} of order 2n, as rho^rot * flip^f with
// flip * rho * flip = rho^{-1}. The generators s_1, s_2 map to the reflections
// (0, flip) and (1, flip).
struct DihedralElement {
  int n = 2;
  int rot = 0;
  bool flip = false;

  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement reflection(int n, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("reflection: generator is 1 or 2");
    return {n, which == 1 ? 0 : 1, true};
  }

  friend DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
    if (a.n != b.n) throw std::invalid_argument("DihedralElement: label mismatch");
    int r = a.flip ? a.rot - b.rot : a.rot + b.rot;
    r %= a.n;
    if (r < 0) r += a.n;
    return {a.n, r, a.flip != b.flip};
  }

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.n == b.n && a.rot == b.rot && a.flip == b.flip;
  }

  bool is_identity() const { return rot == 0 && !flip; }
  int index() const { return rot + (flip ? n : 0); }  // in 0 .. 2n-1
};

// Image under B_{I_n} ->> W_{I_n} = D_{2n}; the reflections are involutions so
// signs are ignored.
inline DihedralElement dihedral_project(const DihedralWord& w) {
  DihedralElement e = DihedralElement::identity(w.n);
  for (int l : w.letters) e = e * DihedralElement::reflection(w.n, std::abs(l));
  return e;
}

// Alternating positive word g, 3-g, g, ... of the given length.
inline DihedralWord alternating_word(int n, int first, int length) {
  std::vector<int> ls(static_cast<size_t>(length));
  for (int t = 0; t < length; ++t) ls[t] = t % 2 == 0 ? first : 3 - first;
  return {n, std::move(ls)};
}

// Reidemeister-Schreier data for PBr_{I_n} = ker(B_{I_n} ->> D_{2n}):
// a shortlex Schreier transversal (generator order s_1 < s_2), Schreier
// generators with the spanning tree trivialized, and the defining relator
// rewritten through every coset.
struct SubgroupPresentation {
  int n = 2;
  int index = 0;            // = 2n
  int generator_count = 0;  // = 2n + 1 after tree trivialization
  std::vector<DihedralWord> transversal;
  std::vector<std::vector<std::pair<int, int>>> relators;  // (generator id, +-1)

  // schreier_id[coset][g-1]: generator id, or -1 for a spanning-tree edge
  std::vector<std::array<int, 2>> schreier_id;

  // Rewrites a kernel word into Schreier generators, starting from the trivial
  // coset. Throws if the word does not project to the identity.
  std::vector<std::pair<int, int>> rewrite(const DihedralWord& w) const {
    std::vector<std::pair<int, int>> out;
    DihedralElement u = DihedralElement::identity(n);
    for (int l : w.letters) {
      int g = std::abs(l);
      if (l > 0) {
        int id = schreier_id[u.index()][g - 1];
        if (id >= 0) out.emplace_back(id, 1);
        u = u * DihedralElement::reflection(n, g);
      } else {
        u = u * DihedralElement::reflection(n, g);  // reflections are involutions
        int id = schreier_id[u.index()][g - 1];
        if (id >= 0) out.emplace_back(id, -1);
      }
    }
    if (!u.is_identity()) throw std::invalid_argument("rewrite: word is not in the kernel");
    return out;
  }

  // Exponent-sum matrix of the relators, rows = relators, cols = generators.
  IntegerMatrix relator_matrix() const {
    IntegerMatrix M(static_cast<int>(relators.size()), generator_count);
    for (size_t r = 0; r < relators.size(); ++r)
      for (const auto& [id, e] : relators[r]) M.at(static_cast<int>(r), id) += e;
    return M;
  }
};

inline SubgroupPresentation reidemeister_schreier(int n) {
  if (n < 2) throw std::invalid_argument("reidemeister_schreier: label must be >= 2");
  SubgroupPresentation p;
  p.n = n;
  p.index = 2 * n;

  // shortlex BFS over D_{2n}; tree edges carry id -1
  std::vector<int> rep_of(static_cast<size_t>(2 * n), -1);  // element index -> transversal slot
  p.schreier_id.assign(static_cast<size_t>(2 * n), {-2, -2});
  std::vector<DihedralElement> elem_of;
  {
    DihedralElement e = DihedralElement::identity(n);
    std::vector<DihedralWord> reps;
    reps.push_back(DihedralWord(n, {}));
    std::vector<DihedralElement> queue = {e};
    rep_of[e.index()] = 0;
    elem_of.push_back(e);
    for (size_t head = 0; head < queue.size(); ++head) {
      DihedralElement u = queue[head];
      for (int g = 1; g <= 2; ++g) {
        DihedralElement v = u * DihedralElement::reflection(n, g);
        if (rep_of[v.index()] < 0) {
          rep_of[v.index()] = static_cast<int>(queue.size());
          DihedralWord w = reps[static_cast<size_t>(rep_of[u.index()])];
          w.letters.push_back(g);
          reps.push_back(w);
          queue.push_back(v);
          p.schreier_id[u.index()][g - 1] = -1;  // tree edge
        }
      }
    }
    p.transversal = std::move(reps);
    elem_of = std::move(queue);
  }

  int next_id = 0;
  for (const DihedralElement& u : elem_of)
    for (int g = 1; g <= 2; ++g)
      if (p.schreier_id[u.index()][g - 1] == -2) p.schreier_id[u.index()][g - 1] = next_id++;
  p.generator_count = next_id;

  // defining relator alt(s1, s2; n) * alt(s2, s1; n)^{-1}, lifted to each coset
  std::vector<int> relator = alternating_word(n, 1, n).letters;
  {
    DihedralWord tail = alternating_word(n, 2, n);
    for (auto it = tail.letters.rbegin(); it != tail.letters.rend(); ++it)
      relator.push_back(-*it);
  }
  for (const DihedralWord& t : p.transversal) {
    std::vector<int> conj = t.letters;
    conj.insert(conj.end(), relator.begin(), relator.end());
    for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) conj.push_back(-*it);
    p.relators.push_back(p.rewrite(DihedralWord(n, std::move(conj))));
  }
  return p;
}

struct AbelianizationResult {
  int rank = 0;
  std::vector<long long> torsion;
};

// Abelianization of the subgroup presentation by Smith normal form of the
// relator exponent matrix.
inline AbelianizationResult abelianization_rank(const SubgroupPresentation& p) {
  SmithResult snf = smith_normal_form(p.relator_matrix());
  AbelianizationResult out;
  out.rank = p.generator_count - snf.rank();
  for (const mpz_class& d : snf.torsion()) {
    if (!d.fits_slong_p()) throw std::overflow_error("abelianization_rank: torsion overflow");
    out.torsion.push_back(d.get_si());
  }
  return out;
}

struct KSubgroupResult {
  int rank = 0;         // rank of the span of the wall-monodromy images
  bool proper = false;  // rank < n certifies K != PBr_{I_n}
};

// The three wall monodromies from a fixed chamber: s_1^2, s_2^2 around the two
// codimension-one walls, and Delta^2 around the codimension-two wall, Delta
// being the positive alternating lift of the longest element. Their images in
// the abelianization of PBr_{I_n} span a subgroup whose rank is returned.
inline KSubgroupResult k_subgroup_rank(int n) {
  SubgroupPresentation p = reidemeister_schreier(n);
  IntegerMatrix M = p.relator_matrix();

  std::vector<DihedralWord> walls;
  walls.push_back(DihedralWord(n, {1, 1}));
  walls.push_back(DihedralWord(n, {2, 2}));
  {
    std::vector<int> d2 = alternating_word(n, 1, n).letters;
    std::vector<int> d = d2;
    d2.insert(d2.end(), d.begin(), d.end());
    walls.push_back(DihedralWord(n, std::move(d2)));
  }

  IntegerMatrix stacked(M.rows() + static_cast<int>(walls.size()), M.cols());
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) stacked.at(r, c) = M.at(r, c);
  for (size_t wi = 0; wi < walls.size(); ++wi)
    for (const auto& [id, e] : p.rewrite(walls[wi]))
      stacked.at(M.rows() + static_cast<int>(wi), id) += e;

  int rank = smith_normal_form(stacked).rank() - smith_normal_form(M).rank();
  return {rank, rank < n};
}

}  // namespace braid
