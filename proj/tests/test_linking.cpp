#include <doctest.h>

#include <map>
#include <random>

#include "braid/catalog.hpp"
#include "braid/linking.hpp"
#include "braid/presentation.hpp"
#include "braid/oracle_suite.hpp"
#include "test_util.hpp"

using namespace braid;

namespace {

// Independent crossing tracker used as the oracle: walks the word, keeps the
// strand occupying each position, and tallies signed crossings per pair in a
// map. Written against the geometric definition, not the library code path.
std::map<std::pair<int, int>, long long> oracle_crossings(const BraidWord& w) {
  std::map<std::pair<int, int>, long long> count;
  std::vector<int> strand(static_cast<size_t>(w.strands()));
  for (int p = 0; p < w.strands(); ++p) strand[p] = p + 1;
  for (int l : w.letters()) {
    int g = std::abs(l);
    int a = strand[g - 1], b = strand[g];
    auto key = std::minmax(a, b);
    count[{key.first, key.second}] += l > 0 ? 1 : -1;
    std::swap(strand[g - 1], strand[g]);
  }
  return count;
}

LinkingVector oracle_linking(const BraidWord& w) {
  LinkingVector v(w.strands());
  for (const auto& [pq, doubled] : oracle_crossings(w)) {
    REQUIRE(doubled % 2 == 0);
    v.at(pq.first, pq.second) = doubled / 2;
  }
  return v;
}

}  // namespace

TEST_CASE("linking of the classical generators is the unit vector") {
  const int n = 4;  // strands 5, all pairs i < j <= 5
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      BraidWord a = classical_generator(i, j, n).second;
      LinkingVector v = linking(a);
      CHECK(v == oracle_linking(a));
      for (int p = 1; p <= n + 1; ++p)
        for (int q = p + 1; q <= n + 1; ++q)
          CHECK(v.at(p, q) == ((p == i && q == j) ? 1 : 0));
    }
}

TEST_CASE("linking of a block full twist links each block pair once") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        BraidWord sq = longest_square({i, j, n});
        LinkingVector v = linking(sq);
        CHECK(v == oracle_linking(sq));
        for (int p = 1; p <= n + 1; ++p)
          for (int q = p + 1; q <= n + 1; ++q)
            CHECK(v.at(p, q) == ((i <= p && q <= j + 1) ? 1 : 0));
      }
}

TEST_CASE("linking is additive on pure words") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    int strands = std::uniform_int_distribution<int>(2, 6)(rng);
    BraidWord u = braid::random_pure_word(rng, strands, 10);
    BraidWord v = braid::random_pure_word(rng, strands, 10);
    CHECK(linking(u * v) == linking(u) + linking(v));
  }
}

TEST_CASE("linking is invariant across Garside-equal pure words") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 1000; ++t) {
    int strands = std::uniform_int_distribution<int>(2, 6)(rng);
    BraidWord w = braid::random_pure_word(rng, strands, 12);
    BraidWord w2 = braid::insert_relator(rng, w);
    CHECK(linking(w) == linking(w2));
  }
}

TEST_CASE("relators abelianize to zero") {
  for (int n = 2; n <= 5; ++n)
    for (const Relation& rel : enumerate_relations(n)) {
      BraidWord relator = realize(rel.lhs) * inverse_word(realize(rel.rhs));
      CHECK(linking(relator).is_zero());
    }
}

TEST_CASE("linking agrees with phi") {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j) {
        PresentationWord a;
        a.kind = SymbolKind::ClassicalA;
        a.ambient = n;
        a.push(PresentationSymbol::classical(i, j), 1);
        LinkingVector va = linking(realize(a));
        CHECK(va == linking(realize(phi(a))));
        CHECK(va.at(i, j) == 1);
      }
}

TEST_CASE("linking rejects non-pure words") {
  CHECK_THROWS_AS(linking(BraidWord(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(linking(BraidWord(4, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("linking vector dimensions and indexing") {
  LinkingVector v(5);
  CHECK(v.entries.size() == 10);
  int idx = 0;
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) CHECK(LinkingVector::pair_index(p, q, 5) == idx++);
  CHECK(LinkingVector::pair_index(3, 2, 5) == LinkingVector::pair_index(2, 3, 5));
  CHECK_THROWS_AS(LinkingVector::pair_index(2, 2, 5), std::invalid_argument);
}
