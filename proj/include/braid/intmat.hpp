#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace braid {

// Dense matrix over the integers. Entries are arbitrary-precision: Smith
// transforms of even modest random matrices overflow machine words.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntegerMatrix: negative dimension");
    rows_ = rows;
    cols_ = cols;
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), mpz_class(0));
  }

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  void swap_rows(int r1, int r2) {
    for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }
  void swap_cols(int c1, int c2) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
  }
  void negate_row(int r) {
    for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
  }
  void negate_col(int c) {
    for (int r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
  }
  // row r1 += f * row r2
  void add_row(int r1, int r2, const mpz_class& f) {
    for (int c = 0; c < cols_; ++c) at(r1, c) += f * at(r2, c);
  }
  // col c1 += f * col c2
  void add_col(int c1, int c2, const mpz_class& f) {
    for (int r = 0; r < rows_; ++r) at(r, c1) += f * at(r, c2);
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch");
    IntegerMatrix p(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const mpz_class& v = a.at(r, k);
        if (v == 0) continue;
        for (int c = 0; c < b.cols_; ++c) p.at(r, c) += v * b.at(k, c);
      }
    return p;
  }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_t >= 0, and U, V
// unimodular. The explicit inverses are built from the same elementary
// operations, so U * U_inv = I certifies unimodularity constructively.
struct SmithResult {
  IntegerMatrix D, U, V, U_inv, V_inv;

  std::vector<mpz_class> diagonal() const {
    std::vector<mpz_class> d;
    int t = std::min(D.rows(), D.cols());
    for (int s = 0; s < t; ++s) d.push_back(D.at(s, s));
    return d;
  }

  int rank() const {
    int r = 0;
    for (const mpz_class& d : diagonal())
      if (d != 0) ++r;
    return r;
  }

  std::vector<mpz_class> torsion() const {
    std::vector<mpz_class> t;
    for (const mpz_class& d : diagonal())
      if (d > 1) t.push_back(d);
    return t;
  }
};

inline SmithResult smith_normal_form(const IntegerMatrix& A) {
  const int m = A.rows(), n = A.cols();
  SmithResult res{A, IntegerMatrix::identity(m), IntegerMatrix::identity(n),
                  IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
  IntegerMatrix& D = res.D;

  auto row_op = [&](int r1, int r2, const mpz_class& f) {
    D.add_row(r1, r2, f);
    res.U.add_row(r1, r2, f);
    res.U_inv.add_col(r2, r1, -f);
  };
  auto col_op = [&](int c1, int c2, const mpz_class& f) {
    D.add_col(c1, c2, f);
    res.V.add_col(c1, c2, f);
    res.V_inv.add_row(c2, c1, -f);
  };
  auto row_swap = [&](int r1, int r2) {
    D.swap_rows(r1, r2);
    res.U.swap_rows(r1, r2);
    res.U_inv.swap_cols(r1, r2);
  };
  auto col_swap = [&](int c1, int c2) {
    D.swap_cols(c1, c2);
    res.V.swap_cols(c1, c2);
    res.V_inv.swap_rows(c1, c2);
  };
  auto row_negate = [&](int r) {
    D.negate_row(r);
    res.U.negate_row(r);
    res.U_inv.negate_col(r);
  };

  const int t = std::min(m, n);
  for (int s = 0; s < t; ++s) {
    for (;;) {
      // move the smallest nonzero |entry| of the trailing block to (s,s)
      int pr = -1, pc = -1;
      for (int r = s; r < m; ++r)
        for (int c = s; c < n; ++c) {
          if (D.at(r, c) == 0) continue;
          if (pr < 0 || mpz_cmpabs(D.at(r, c).get_mpz_t(), D.at(pr, pc).get_mpz_t()) < 0) {
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) break;  // trailing block is zero
      if (pr != s) row_swap(s, pr);
      if (pc != s) col_swap(s, pc);
      if (D.at(s, s) < 0) row_negate(s);

      bool reduced = true;
      for (int r = s + 1; r < m; ++r)
        if (D.at(r, s) != 0) {
          row_op(r, s, -mpz_class(D.at(r, s) / D.at(s, s)));
          if (D.at(r, s) != 0) reduced = false;
        }
      for (int c = s + 1; c < n; ++c)
        if (D.at(s, c) != 0) {
          col_op(c, s, -mpz_class(D.at(s, c) / D.at(s, s)));
          if (D.at(s, c) != 0) reduced = false;
        }
      if (!reduced) continue;

      // pivot divides every entry below-right, or fold an offender in
      const mpz_class& p = D.at(s, s);
      int br = -1;
      for (int r = s + 1; r < m && br < 0; ++r)
        for (int c = s + 1; c < n; ++c)
          if (D.at(r, c) % p != 0) {
            br = r;
            break;
          }
      if (br < 0) break;
      row_op(s, br, 1);
    }
  }
  return res;
}

}  // namespace braid
