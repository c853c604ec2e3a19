#include <doctest.h>

#include <set>

#include "braid/dihedral.hpp"

using namespace braid;

TEST_CASE("dihedral projection basics") {
  CHECK(dihedral_project(DihedralWord(4, {1})) == DihedralElement::reflection(4, 1));
  CHECK(dihedral_project(DihedralWord(4, {1, 1})).is_identity());
  CHECK(dihedral_project(DihedralWord(4, {1, -1})).is_identity());

  for (int n = 2; n <= 9; ++n) {
    // (s_1 s_2)^n is trivial in D_2n
    std::vector<int> rot;
    for (int t = 0; t < n; ++t) {
      rot.push_back(1);
      rot.push_back(2);
    }
    CHECK(dihedral_project(DihedralWord(n, rot)).is_identity());

    // the alternating word of length n is the longest element, an involution
    DihedralElement w0 = dihedral_project(alternating_word(n, 1, n));
    CHECK(w0 == dihedral_project(alternating_word(n, 2, n)));
    CHECK((w0 * w0).is_identity());
    // rotation by pi for even n, a reflection for odd n
    CHECK(w0.flip == (n % 2 == 1));
    if (n % 2 == 0) CHECK(w0.rot == n / 2);
  }
}

TEST_CASE("dihedral projection is a surjective homomorphism") {
  for (int n = 2; n <= 8; ++n) {
    std::set<int> image;
    SubgroupPresentation p = reidemeister_schreier(n);
    for (const DihedralWord& t : p.transversal) image.insert(dihedral_project(t).index());
    CHECK(image.size() == static_cast<size_t>(2 * n));
  }
}

TEST_CASE("schreier data counts") {
  SubgroupPresentation p2 = reidemeister_schreier(2);
  CHECK(p2.index == 4);
  CHECK(p2.generator_count == 5);
  CHECK(p2.relators.size() == 4);
  CHECK(p2.transversal.size() == 4);
  CHECK(p2.transversal[0].letters.empty());
  CHECK(p2.transversal[1].str() == "1");
  CHECK(p2.transversal[2].str() == "2");
  CHECK(p2.transversal[3].str() == "12");

  SubgroupPresentation p3 = reidemeister_schreier(3);
  CHECK(p3.index == 6);
  CHECK(p3.generator_count == 7);
  CHECK(p3.relators.size() == 6);

  for (int n = 2; n <= 8; ++n) {
    SubgroupPresentation p = reidemeister_schreier(n);
    CHECK(p.index == 2 * n);
    CHECK(p.generator_count == 2 * n + 1);
    CHECK(p.relators.size() == static_cast<size_t>(2 * n));
    // shortlex transversal: word lengths nondecreasing
    for (size_t t = 1; t < p.transversal.size(); ++t)
      CHECK(p.transversal[t - 1].letters.size() <= p.transversal[t].letters.size());
  }
  CHECK_THROWS_AS(reidemeister_schreier(1), std::invalid_argument);
}

TEST_CASE("schreier generators lie in the kernel") {
  for (int n = 2; n <= 6; ++n) {
    SubgroupPresentation p = reidemeister_schreier(n);
    // gamma(u, g) = rep(u) g rep(ug)^{-1} projects to the identity
    for (size_t slot = 0; slot < p.transversal.size(); ++slot) {
      DihedralElement u = dihedral_project(p.transversal[slot]);
      for (int g = 1; g <= 2; ++g) {
        DihedralElement ug = u * DihedralElement::reflection(n, g);
        // find the transversal slot of ug
        for (const DihedralWord& t : p.transversal)
          if (dihedral_project(t) == ug) {
            std::vector<int> word = p.transversal[slot].letters;
            word.push_back(g);
            for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it)
              word.push_back(-*it);
            CHECK(dihedral_project(DihedralWord(n, word)).is_identity());
          }
      }
    }
  }
}

TEST_CASE("the squared longest lift projects to the identity") {
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> d2 = alternating_word(n, 1, n).letters;
    std::vector<int> d = d2;
    d2.insert(d2.end(), d.begin(), d.end());
    CHECK(dihedral_project(DihedralWord(n, d2)).is_identity());
  }
}

TEST_CASE("rewrite accepts kernel words and rejects others") {
  SubgroupPresentation p = reidemeister_schreier(4);
  CHECK_NOTHROW(p.rewrite(DihedralWord(4, {1, 1})));
  CHECK_NOTHROW(p.rewrite(DihedralWord(4, {2, 2})));
  // Delta^2 projects to w0^2 = 1
  CHECK_NOTHROW(p.rewrite(DihedralWord(4, {1, 2, 1, 2, 1, 2, 1, 2})));
  CHECK_THROWS_AS(p.rewrite(DihedralWord(4, {1})), std::invalid_argument);
  // rewriting s_g^2 from the trivial coset gives gamma(s_g-coset, g) once:
  // the tree edge contributes nothing
  auto r = p.rewrite(DihedralWord(4, {1, 1}));
  CHECK(r.size() == 1);
  CHECK(r[0].second == 1);
}

TEST_CASE("abelianization of the kernel has rank n and no torsion") {
  for (int n = 2; n <= 8; ++n) {
    AbelianizationResult ab = abelianization_rank(reidemeister_schreier(n));
    CHECK(ab.rank == n);
    CHECK(ab.torsion.empty());
  }
}

TEST_CASE("a presentation with no relators abelianizes freely") {
  SubgroupPresentation p = reidemeister_schreier(3);
  p.relators.clear();
  AbelianizationResult ab = abelianization_rank(p);
  CHECK(ab.rank == p.generator_count);
  CHECK(ab.torsion.empty());
}

TEST_CASE("wall monodromies span a rank-3 subgroup at most") {
  KSubgroupResult k2 = k_subgroup_rank(2);
  CHECK(k2.rank == 2);
  CHECK_FALSE(k2.proper);

  KSubgroupResult k3 = k_subgroup_rank(3);
  CHECK(k3.rank == 3);
  CHECK_FALSE(k3.proper);

  for (int n = 4; n <= 8; ++n) {
    KSubgroupResult k = k_subgroup_rank(n);
    CHECK(k.rank <= 3);
    CHECK(k.proper);
  }
}

TEST_CASE("dihedral element arithmetic") {
  DihedralElement r1 = DihedralElement::reflection(5, 1);
  DihedralElement r2 = DihedralElement::reflection(5, 2);
  CHECK((r1 * r1).is_identity());
  CHECK((r2 * r2).is_identity());
  DihedralElement rot = r2 * r1;
  DihedralElement acc = DihedralElement::identity(5);
  for (int t = 0; t < 5; ++t) acc = acc * rot;
  CHECK(acc.is_identity());
  CHECK_THROWS_AS(DihedralElement::reflection(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(DihedralWord(5, {3}), std::invalid_argument);
  CHECK_THROWS_AS(DihedralWord(1, {1}), std::invalid_argument);
}
