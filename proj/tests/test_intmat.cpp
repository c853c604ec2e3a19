#include <doctest.h>

#include <random>

#include "braid/intmat.hpp"

using namespace braid;

namespace {

void check_smith(const IntegerMatrix& A) {
  SmithResult r = smith_normal_form(A);
  // U A V = D
  CHECK(r.U * A * r.V == r.D);
  // constructive unimodularity
  CHECK(r.U * r.U_inv == IntegerMatrix::identity(A.rows()));
  CHECK(r.V * r.V_inv == IntegerMatrix::identity(A.cols()));
  // D diagonal, nonnegative, divisibility chain
  auto d = r.diagonal();
  for (int i = 0; i < r.D.rows(); ++i)
    for (int j = 0; j < r.D.cols(); ++j)
      if (i != j) CHECK(r.D.at(i, j) == 0);
  for (size_t s = 0; s < d.size(); ++s) {
    CHECK(d[s] >= 0);
    if (s + 1 < d.size()) {
      if (d[s] == 0) CHECK(d[s + 1] == 0);
      if (d[s] != 0 && d[s + 1] != 0) CHECK(d[s + 1] % d[s] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of small frozen cases") {
  IntegerMatrix a(2, 2);
  a.at(0, 0) = 4;
  a.at(0, 1) = 6;
  a.at(1, 0) = 6;
  a.at(1, 1) = 4;
  check_smith(a);
  SmithResult r = smith_normal_form(a);
  // det = -20, gcd of entries 2: diagonal (2, 10)
  CHECK(r.diagonal() == std::vector<mpz_class>{2, 10});
  CHECK(r.rank() == 2);
  CHECK(r.torsion() == std::vector<mpz_class>{2, 10});

  IntegerMatrix b(2, 2);
  b.at(0, 0) = 2;
  b.at(0, 1) = 4;
  b.at(1, 0) = 4;
  b.at(1, 1) = 8;
  r = smith_normal_form(b);
  CHECK(r.diagonal() == std::vector<mpz_class>{2, 0});
  CHECK(r.rank() == 1);
  check_smith(b);

  IntegerMatrix z(3, 2);  // zero matrix
  r = smith_normal_form(z);
  CHECK(r.rank() == 0);
  CHECK(r.D == z);
  check_smith(z);

  r = smith_normal_form(IntegerMatrix::identity(4));
  CHECK(r.diagonal() == std::vector<mpz_class>{1, 1, 1, 1});
  CHECK(r.torsion().empty());
}

TEST_CASE("smith normal form on random matrices up to 30x30") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 60; ++t) {
    int m = std::uniform_int_distribution<int>(1, 30)(rng);
    int n = std::uniform_int_distribution<int>(1, 30)(rng);
    IntegerMatrix a(m, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) a.at(r, c) = entry(rng);
    check_smith(a);
  }
}

TEST_CASE("smith normal form on rank-deficient and rectangular shapes") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int t = 0; t < 40; ++t) {
    // build m x n as product of m x k and k x n so the rank is at most k
    int m = std::uniform_int_distribution<int>(2, 12)(rng);
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    IntegerMatrix f(m, k), g(k, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < k; ++c) f.at(r, c) = entry(rng);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) g.at(r, c) = entry(rng);
    IntegerMatrix a = f * g;
    check_smith(a);
    CHECK(smith_normal_form(a).rank() <= k);
  }
}

TEST_CASE("entries beyond machine words stay exact") {
  mpz_class big = mpz_class(1) << 80;
  IntegerMatrix a(2, 2);
  a.at(0, 0) = 3 * big;
  a.at(1, 1) = big;
  check_smith(a);
  SmithResult r = smith_normal_form(a);
  CHECK(r.diagonal() == std::vector<mpz_class>{big, 3 * big});
}

TEST_CASE("matrix shape validation") {
  IntegerMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(IntegerMatrix(-1, 2), std::invalid_argument);
}
