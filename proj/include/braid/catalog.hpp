#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid/garside.hpp"
#include "braid/report.hpp"
#include "braid/word.hpp"

namespace braid {

// A connected subgraph [lo, hi] of the A_n Dynkin graph on vertices 1..n.
// hi < lo encodes the empty subgraph, whose longest-element lift is the
// identity word.
struct Interval {
  int lo = 1;
  int hi = 0;
  int ambient = 1;

  Interval() = default;
  Interval(int lo_, int hi_, int ambient_) : lo(lo_), hi(hi_), ambient(ambient_) {
    if (ambient < 1) throw std::invalid_argument("Interval: ambient must be >= 1");
    if (!empty() && (lo < 1 || hi > ambient))
      throw std::invalid_argument("Interval: out of ambient range");
  }

  bool empty() const { return hi < lo; }
  int length() const { return empty() ? 0 : hi - lo + 1; }

  friend bool operator==(const Interval& u, const Interval& v) {
    return u.ambient == v.ambient && ((u.empty() && v.empty()) || (u.lo == v.lo && u.hi == v.hi));
  }
  friend bool operator<(const Interval& u, const Interval& v) {
    return u.lo != v.lo ? u.lo < v.lo : u.hi < v.hi;
  }

  std::string str() const {
    return empty() ? std::string("[]")
                   : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
};

namespace detail {

// s_from s_{from-1} ... s_to (or ascending when from < to).
inline void push_run(BraidWord& w, int from, int to) {
  int step = from <= to ? 1 : -1;
  for (int g = from;; g += step) {
    w.push(g);
    if (g == to) break;
  }
}

inline void push_power(BraidWord& w, const BraidWord& base, int e) {
  for (int r = 0; r < e; ++r) w.append(base);
}

// s_from ... s_peak s_peak ... s_from, the peak generator squared. Runs in
// either direction.
inline BraidWord mountain(int strands, int from, int peak) {
  BraidWord w(strands);
  push_run(w, from, peak);
  push_run(w, peak, from);
  return w;
}

}  // namespace detail

// Standard positive lift of the longest element over [i,j], in the spelling
// (s_i)(s_{i+1} s_i)...(s_j ... s_i). Empty intervals give the identity word.
inline BraidWord longest_lift(const Interval& v) {
  BraidWord w(v.ambient + 1);
  if (v.empty()) return w;
  for (int t = v.lo; t <= v.hi; ++t) detail::push_run(w, t, v.lo);
  return w;
}

inline BraidWord longest_square(const Interval& v) {
  BraidWord w = longest_lift(v);
  w.append(longest_lift(v));
  return w;
}

// The standard pure braid generator pair for strands i < j of Br_{n+1}:
// sigma = (s_{j-1}...s_{i+1}) s_i (s_{i+1}^{-1}...s_{j-1}^{-1}), A = sigma^2
// returned freely reduced.
inline std::pair<BraidWord, BraidWord> classical_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n + 1))
    throw std::invalid_argument("classical_generator: need 1 <= i < j <= n+1");
  BraidWord sigma(n + 1);
  for (int g = j - 1; g > i; --g) sigma.push(g);
  sigma.push(i);
  for (int g = i + 1; g <= j - 1; ++g) sigma.push(-g);
  return {sigma, free_reduce(sigma * sigma)};
}

// Index data for a box relation: intervals A=[i,j], B=[a,k], C=[j+2,p] with
// 1 <= i < a <= j+1 <= k < p <= n. All derived quantities of the c/d words
// live here so the subscript arithmetic is fixed in one place.
struct BoxConfig {
  int i, a, j, k, p;
  int ambient;

  BoxConfig(int i_, int a_, int j_, int k_, int p_, int ambient_)
      : i(i_), a(a_), j(j_), k(k_), p(p_), ambient(ambient_) {
    if (!(1 <= i && i < a && a <= j + 1 && j + 1 <= k && k < p && p <= ambient))
      throw std::invalid_argument("BoxConfig: need 1 <= i < a <= j+1 <= k < p <= n");
  }

  int x() const { return k - j; }
  int y() const { return j + 2 - a; }
  int b() const { return i + (k - (j + 1)); }
  int h() const { return a + (p - (j + 1)); }

  Interval A() const { return {i, j, ambient}; }
  Interval B() const { return {a, k, ambient}; }
  Interval C() const { return {j + 2, p, ambient}; }

  std::string str() const {
    return "(i,a,j,k,p)=(" + std::to_string(i) + "," + std::to_string(a) + "," +
           std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(p) + ")";
  }

  static std::vector<BoxConfig> all(int n) {
    std::vector<BoxConfig> out;
    for (int i = 1; i <= n; ++i)
      for (int a = i + 1; a <= n; ++a)
        for (int j = a - 1; j <= n - 2; ++j)
          for (int k = j + 1; k <= n - 1; ++k)
            for (int p = k + 1; p <= n; ++p) out.emplace_back(i, a, j, k, p, n);
    return out;
  }
};

// The four factored words of the box machinery. c words are products of
// ascending runs of length x whose starting indices step down by one; d words
// are products of descending runs of length y whose starting indices step up.
struct ChiWords {
  BraidWord c_outer;  // c_{a-1, b}
  BraidWord c_inner;  // c_{j+1, x+a-1}
  BraidWord d_inner;  // d_{k+1, h}
  BraidWord d_outer;  // d_{j+1, k-y+1}
};

inline ChiWords chi_words(const BoxConfig& cfg) {
  const int m = cfg.ambient + 1;
  const int x = cfg.x(), y = cfg.y();
  ChiWords out{BraidWord(m), BraidWord(m), BraidWord(m), BraidWord(m)};
  for (int t = cfg.a - 1; t >= cfg.i; --t) detail::push_run(out.c_outer, t, t + x - 1);
  for (int t = cfg.j + 1; t >= cfg.a; --t) detail::push_run(out.c_inner, t, t + x - 1);
  for (int t = cfg.k + 1; t <= cfg.p; ++t) detail::push_run(out.d_inner, t, t - y + 1);
  for (int t = cfg.j + 1; t <= cfg.k; ++t) detail::push_run(out.d_outer, t, t - y + 1);
  return out;
}

namespace detail {

inline void check_equal(VerificationReport& rep, const std::string& id, const std::string& kind,
                        const BraidWord& lhs, const BraidWord& rhs) {
  ReportItem item;
  item.id = id;
  item.kind = kind;
  item.pass = equal(lhs, rhs);
  if (!item.pass)
    item.witness = "lhs: " + normal_form_text(normal_form(lhs)) +
                   "\nrhs: " + normal_form_text(normal_form(rhs));
  rep.add(std::move(item));
}

inline BraidWord square(const BraidWord& w) { return w * w; }

}  // namespace detail

// All six spellings of l_{i,j}: the two triangular products and the four
// one-step recursions.
inline std::vector<BraidWord> longest_lift_spellings(int i, int j, int n) {
  const int m = n + 1;
  std::vector<BraidWord> out;
  out.push_back(longest_lift({i, j, n}));

  BraidWord f2(m);  // (s_i ... s_j) l_{i,j-1}
  detail::push_run(f2, i, j);
  f2.append(longest_lift({i, j - 1, n}));
  out.push_back(f2);

  BraidWord f3 = longest_lift({i, j - 1, n});  // l_{i,j-1} (s_j ... s_i)
  detail::push_run(f3, j, i);
  out.push_back(f3);

  BraidWord f4(m);  // (s_j)(s_{j-1} s_j)...(s_i ... s_j)
  for (int t = j; t >= i; --t) detail::push_run(f4, t, j);
  out.push_back(f4);

  BraidWord f5(m);  // (s_j ... s_i) l_{i+1,j}
  detail::push_run(f5, j, i);
  f5.append(longest_lift({i + 1, j, n}));
  out.push_back(f5);

  BraidWord f6 = longest_lift({i + 1, j, n});  // l_{i+1,j} (s_i ... s_j)
  detail::push_run(f6, i, j);
  out.push_back(f6);

  return out;
}

inline VerificationReport verify_lemma_2_2(int n) {
  VerificationReport rep;
  rep.command = "lemma:2.2";
  rep.ambient = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      auto forms = longest_lift_spellings(i, j, n);
      for (size_t f = 1; f < forms.size(); ++f)
        detail::check_equal(rep,
                            "lemma:2.2 i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                " form=" + std::to_string(f + 1),
                            "factorization", forms[0], forms[f]);
    }
  return rep;
}

inline VerificationReport verify_cor_2_3(int n) {
  VerificationReport rep;
  rep.command = "cor:2.3";
  rep.ambient = n;
  const int m = n + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const BraidWord lhs = longest_square({i, j, n});
      std::vector<BraidWord> rhs;

      BraidWord r1(m);  // (s_j...s_i)(s_i...s_j) l_{i,j-1}^2
      detail::push_run(r1, j, i);
      detail::push_run(r1, i, j);
      r1.append(longest_square({i, j - 1, n}));
      rhs.push_back(r1);

      BraidWord r2(m);  // (s_i...s_j)(s_j...s_i) l_{i+1,j}^2
      detail::push_run(r2, i, j);
      detail::push_run(r2, j, i);
      r2.append(longest_square({i + 1, j, n}));
      rhs.push_back(r2);

      BraidWord r3 = longest_square({i, j - 1, n});  // l_{i,j-1}^2 (s_j...s_i)(s_i...s_j)
      detail::push_run(r3, j, i);
      detail::push_run(r3, i, j);
      rhs.push_back(r3);

      BraidWord r4 = longest_square({i + 1, j, n});  // l_{i+1,j}^2 (s_i...s_j)(s_j...s_i)
      detail::push_run(r4, i, j);
      detail::push_run(r4, j, i);
      rhs.push_back(r4);

      for (size_t e = 0; e < rhs.size(); ++e)
        detail::check_equal(rep,
                            "cor:2.3 i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                " eq=" + std::to_string(e + 1),
                            "square-recursion", lhs, rhs[e]);
    }
  return rep;
}

inline VerificationReport verify_lemma_3_1(int n) {
  VerificationReport rep;
  rep.command = "lemma:3.1";
  rep.ambient = n;
  const int m = n + 1;

  BraidWord down_up(m);  // (s_n ... s_1)(s_1 ... s_n)
  detail::push_run(down_up, n, 1);
  detail::push_run(down_up, 1, n);
  BraidWord up_down(m);  // (s_1 ... s_n)(s_n ... s_1)
  detail::push_run(up_down, 1, n);
  detail::push_run(up_down, n, 1);

  auto sweep = [&](int item, const BraidWord& c, int klo, int khi) {
    for (int ki = klo; ki <= khi; ++ki)
      for (int kj = ki; kj <= khi; ++kj) {
        BraidWord lk = longest_lift({ki, kj, n});
        detail::check_equal(rep,
                            "lemma:3.1(" + std::to_string(item) + ") K=[" + std::to_string(ki) +
                                "," + std::to_string(kj) + "]",
                            "commutation", lk * c, c * lk);
      }
  };
  if (n >= 2) {
    sweep(1, down_up, 1, n - 1);
    sweep(2, up_down, 2, n);
  }
  return rep;
}

inline VerificationReport verify_lemma_3_2(int n) {
  VerificationReport rep;
  rep.command = "lemma:3.2";
  rep.ambient = n;
  const int m = n + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const BraidWord lhs = longest_square({i, j, n});
      BraidWord desc(m), asc(m);
      detail::push_run(desc, j, i);
      detail::push_run(asc, i, j);
      BraidWord r1(m), r2(m);
      detail::push_power(r1, desc, j - i + 2);
      detail::push_power(r2, asc, j - i + 2);
      std::string at = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      detail::check_equal(rep, "lemma:3.2 desc" + at, "twist-power", lhs, r1);
      detail::check_equal(rep, "lemma:3.2 asc" + at, "twist-power", lhs, r2);
    }
  return rep;
}

inline VerificationReport verify_lemma_3_4(int n) {
  VerificationReport rep;
  rep.command = "lemma:3.4";
  rep.ambient = n;
  const int m = n + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      std::string at = " i=" + std::to_string(i) + " j=" + std::to_string(j);

      {  // (1)
        BraidWord lhs = detail::mountain(m, j, i) * detail::mountain(m, j - 1, i);
        BraidWord rhs(m);
        detail::push_run(rhs, j, i + 1);
        detail::push_run(rhs, j, i + 1);
        rhs.push(i);
        rhs.push(i + 1);
        for (int t = i + 1; t <= j; ++t) {
          rhs.push(t);
          rhs.push(t - 1);
        }
        detail::check_equal(rep, "lemma:3.4(1)" + at, "double-mountain", lhs, rhs);
      }
      {  // (2)
        BraidWord lhs = detail::mountain(m, i, j) * detail::mountain(m, i + 1, j);
        BraidWord rhs(m);
        detail::push_run(rhs, i, j - 1);
        detail::push_run(rhs, i, j - 1);
        rhs.push(j);
        rhs.push(j - 1);
        for (int t = j - 1; t >= i; --t) {
          rhs.push(t);
          rhs.push(t + 1);
        }
        detail::check_equal(rep, "lemma:3.4(2)" + at, "double-mountain", lhs, rhs);
      }
      {  // (3)
        BraidWord lhs = detail::mountain(m, j - 1, i) * detail::mountain(m, j, i);
        BraidWord rhs(m);
        for (int t = j - 1; t >= i; --t) {
          rhs.push(t);
          rhs.push(t + 1);
        }
        rhs.push(i + 1);
        rhs.push(i);
        detail::push_run(rhs, i + 1, j);
        detail::push_run(rhs, i + 1, j);
        detail::check_equal(rep, "lemma:3.4(3)" + at, "double-mountain", lhs, rhs);
      }
      {  // (4)
        BraidWord lhs = detail::mountain(m, i + 1, j) * detail::mountain(m, i, j);
        BraidWord rhs(m);
        for (int t = i + 1; t <= j; ++t) {
          rhs.push(t);
          rhs.push(t - 1);
        }
        rhs.push(j - 1);
        rhs.push(j);
        detail::push_run(rhs, j - 1, i);
        detail::push_run(rhs, j - 1, i);
        detail::check_equal(rep, "lemma:3.4(4)" + at, "double-mountain", lhs, rhs);
      }
    }
  return rep;
}

inline VerificationReport verify_lemma_3_7(int n) {
  VerificationReport rep;
  rep.command = "lemma:3.7";
  rep.ambient = n;
  const int m = n + 1;
  for (const BoxConfig& cfg : BoxConfig::all(n)) {
    const ChiWords chi = chi_words(cfg);
    const int x = cfg.x(), y = cfg.y();

    BraidWord run_ka(m), run_ak(m);
    detail::push_run(run_ka, cfg.k, cfg.a);
    detail::push_run(run_ak, cfg.a, cfg.k);

    {  // (1)
      BraidWord lhs(m);
      for (int t = cfg.k; t >= cfg.j + 1; --t) lhs.append(detail::mountain(m, t, cfg.i));
      BraidWord rhs(m);
      detail::push_power(rhs, run_ka, x);
      rhs.append(chi.c_outer);
      rhs.append(reverse_word(chi.c_outer));
      rhs.append(reverse_word(chi.c_inner));
      detail::check_equal(rep, "lemma:3.7(1) " + cfg.str(), "box-factorization", lhs, rhs);
    }
    {  // (2)
      BraidWord lhs(m);
      for (int t = cfg.j + 1; t >= cfg.a; --t) lhs.append(detail::mountain(m, t, cfg.p));
      BraidWord rhs = chi.d_outer;
      rhs.append(chi.d_inner);
      rhs.append(reverse_word(chi.d_inner));
      detail::push_power(rhs, run_ka, y);
      detail::check_equal(rep, "lemma:3.7(2) " + cfg.str(), "box-factorization", lhs, rhs);
    }
    {  // (3)
      BraidWord lhs(m);
      for (int t = cfg.a; t <= cfg.j + 1; ++t) lhs.append(detail::mountain(m, t, cfg.p));
      BraidWord rhs(m);
      detail::push_power(rhs, run_ak, y);
      rhs.append(chi.d_inner);
      rhs.append(reverse_word(chi.d_inner));
      rhs.append(reverse_word(chi.d_outer));
      detail::check_equal(rep, "lemma:3.7(3) " + cfg.str(), "box-factorization", lhs, rhs);
    }
    {  // (4)
      BraidWord lhs(m);
      for (int t = cfg.j + 1; t <= cfg.k; ++t) lhs.append(detail::mountain(m, t, cfg.i));
      BraidWord rhs = chi.c_inner;
      rhs.append(chi.c_outer);
      rhs.append(reverse_word(chi.c_outer));
      detail::push_power(rhs, run_ak, x);
      detail::check_equal(rep, "lemma:3.7(4) " + cfg.str(), "box-factorization", lhs, rhs);
    }
  }
  return rep;
}

inline VerificationReport verify_cor_3_8(int n) {
  VerificationReport rep;
  rep.command = "cor:3.8";
  rep.ambient = n;
  for (const BoxConfig& cfg : BoxConfig::all(n)) {
    const ChiWords chi = chi_words(cfg);
    detail::check_equal(rep, "cor:3.8 " + cfg.str(), "c-d-equality", chi.c_inner, chi.d_outer);
    detail::check_equal(rep, "cor:3.8 reversed " + cfg.str(), "c-d-equality",
                        reverse_word(chi.c_inner), reverse_word(chi.d_outer));
  }
  return rep;
}

// Dispatch by family id: lemma:2.2, cor:2.3, lemma:3.1, lemma:3.2, lemma:3.4,
// lemma:3.7, cor:3.8. Sweeps every legal parameter tuple at the given ambient.
inline VerificationReport verify_identity(const std::string& id, int n) {
  if (n < 1) throw std::invalid_argument("verify_identity: ambient must be >= 1");
  if (id == "lemma:2.2") return verify_lemma_2_2(n);
  if (id == "cor:2.3") return verify_cor_2_3(n);
  if (id == "lemma:3.1") return verify_lemma_3_1(n);
  if (id == "lemma:3.2") return verify_lemma_3_2(n);
  if (id == "lemma:3.4") return verify_lemma_3_4(n);
  if (id == "lemma:3.7") return verify_lemma_3_7(n);
  if (id == "cor:3.8") return verify_cor_3_8(n);
  throw std::invalid_argument("verify_identity: unknown identity family: " + id);
}

inline const std::vector<std::string>& identity_families() {
  static const std::vector<std::string> fams = {"lemma:2.2", "cor:2.3",  "lemma:3.1", "lemma:3.2",
                                                "lemma:3.4", "lemma:3.7", "cor:3.8"};
  return fams;
}

}  // namespace braid
