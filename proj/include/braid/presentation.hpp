#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid/catalog.hpp"
#include "braid/garside.hpp"
#include "braid/report.hpp"
#include "braid/word.hpp"

namespace braid {

enum class SymbolKind { ClassicalA, IntervalI };

// A formal generator symbol: A_{first,second} with 1 <= first < second <= n+1
// for the classical presentation, or I_{first,second} for the interval
// presentation, where second < first is the formal identity.
struct PresentationSymbol {
  SymbolKind kind = SymbolKind::IntervalI;
  int first = 1;
  int second = 0;

  static PresentationSymbol classical(int i, int j) {
    if (!(1 <= i && i < j)) throw std::invalid_argument("PresentationSymbol: need i < j");
    return {SymbolKind::ClassicalA, i, j};
  }
  static PresentationSymbol interval(int i, int j) { return {SymbolKind::IntervalI, i, j}; }

  bool trivial() const { return kind == SymbolKind::IntervalI && second < first; }

  friend bool operator==(const PresentationSymbol& a, const PresentationSymbol& b) {
    if (a.kind != b.kind) return false;
    if (a.trivial() && b.trivial()) return true;
    return a.first == b.first && a.second == b.second;
  }

  std::string str() const {
    std::string name = kind == SymbolKind::ClassicalA ? "A" : "I";
    return name + "(" + std::to_string(first) + "," + std::to_string(second) + ")";
  }
};

// A word in formal symbols with exponents +-1. All symbols share one kind and
// one ambient n.
struct PresentationWord {
  SymbolKind kind = SymbolKind::IntervalI;
  int ambient = 1;
  std::vector<std::pair<PresentationSymbol, int>> syms;

  void push(PresentationSymbol s, int e) {
    if (s.kind != kind) throw std::invalid_argument("PresentationWord: mixed symbol kinds");
    if (e != 1 && e != -1) throw std::invalid_argument("PresentationWord: exponent must be +-1");
    syms.emplace_back(s, e);
  }

  void append(const PresentationWord& w) {
    if (w.kind != kind || w.ambient != ambient)
      throw std::invalid_argument("PresentationWord: kind/ambient mismatch");
    syms.insert(syms.end(), w.syms.begin(), w.syms.end());
  }

  void append_inverse(const PresentationWord& w) {
    if (w.kind != kind || w.ambient != ambient)
      throw std::invalid_argument("PresentationWord: kind/ambient mismatch");
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it)
      syms.emplace_back(it->first, -it->second);
  }

  friend bool operator==(const PresentationWord& a, const PresentationWord& b) {
    return a.kind == b.kind && a.ambient == b.ambient && a.syms == b.syms;
  }

  std::string str() const {
    std::string s;
    for (const auto& [sym, e] : syms) {
      if (!s.empty()) s += ' ';
      s += sym.str();
      if (e < 0) s += "^-1";
    }
    return s.empty() ? "1" : s;
  }
};

// Cancels adjacent mutually inverse symbols, to a fixed point. Used only for
// witness certification, never before relation realization.
inline PresentationWord free_reduce(const PresentationWord& w) {
  PresentationWord out;
  out.kind = w.kind;
  out.ambient = w.ambient;
  for (const auto& se : w.syms) {
    if (!out.syms.empty() && out.syms.back().first == se.first &&
        out.syms.back().second == -se.second)
      out.syms.pop_back();
    else
      out.syms.push_back(se);
  }
  return out;
}

enum class RelationKind { FarCommutator, InclusionCommutator, Box };

inline std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::FarCommutator: return "far-commutator";
    case RelationKind::InclusionCommutator: return "inclusion-commutator";
    case RelationKind::Box: return "box";
  }
  return "?";
}

struct Relation {
  RelationKind kind;
  PresentationWord lhs, rhs;
  std::string id;
};

// All n(n+1)/2 nonempty intervals of the A_n graph, in lexicographic order.
inline std::vector<Interval> enumerate_generators(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_generators: ambient must be >= 1");
  std::vector<Interval> out;
  out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) out.emplace_back(lo, hi, n);
  return out;
}

// 0 when the intervals intersect, otherwise the number of edges strictly
// between them.
inline int distance(const Interval& u, const Interval& v) {
  if (u.ambient != v.ambient) throw std::invalid_argument("distance: ambient mismatch");
  if (u.empty() || v.empty()) throw std::invalid_argument("distance: empty interval");
  if (u.lo <= v.hi && v.lo <= u.hi) return 0;
  return u.hi < v.lo ? v.lo - u.hi : u.lo - v.hi;
}

inline bool nested(const Interval& u, const Interval& v) {
  return (v.lo <= u.lo && u.hi <= v.hi) || (u.lo <= v.lo && v.hi <= u.hi);
}

// Two interval generators commute when the intervals are at least two edges
// apart or one contains the other.
inline bool intervals_commute(const Interval& u, const Interval& v) {
  return distance(u, v) >= 2 || nested(u, v);
}

// For A = [i,j] and C = [j+2,p] one node apart, the compatible middle
// intervals B = [a,k] with i < a <= j+1 <= k < p.
inline std::vector<Interval> compatible_Bs(const Interval& A, const Interval& C) {
  if (distance(A, C) != 2 || A.hi > C.lo)
    throw std::invalid_argument("compatible_Bs: need d(A,C) = 2 with A left of C");
  std::vector<Interval> out;
  for (int a = A.lo + 1; a <= A.hi + 1; ++a)
    for (int k = A.hi + 1; k < C.hi; ++k) out.emplace_back(a, k, A.ambient);
  return out;
}

namespace detail {

inline PresentationSymbol isym(const Interval& v) {
  return PresentationSymbol::interval(v.lo, v.hi);
}

}  // namespace detail

// Emits each commutator relation once per unordered pair: every nested pair,
// and the distance-2 pairs (those flanking a box). Box relations are emitted
// once per compatible triple (A, B, C), with both length-5 sides spelled
// (AuB)^-1 A B C (BuC)^-1 = (CuB)^-1 C B A (BuA)^-1.
inline std::vector<Relation> enumerate_relations(int n) {
  std::vector<Interval> gens = enumerate_generators(n);
  std::vector<Relation> out;

  for (size_t s = 0; s < gens.size(); ++s)
    for (size_t t = s + 1; t < gens.size(); ++t) {
      const Interval &u = gens[s], &v = gens[t];
      bool incl = nested(u, v);
      if (!incl && distance(u, v) != 2) continue;
      Relation rel;
      rel.kind = incl ? RelationKind::InclusionCommutator : RelationKind::FarCommutator;
      rel.id = "commutator " + u.str() + "*" + v.str();
      rel.lhs.ambient = rel.rhs.ambient = n;
      rel.lhs.push(detail::isym(u), 1);
      rel.lhs.push(detail::isym(v), 1);
      rel.rhs.push(detail::isym(v), 1);
      rel.rhs.push(detail::isym(u), 1);
      out.push_back(std::move(rel));
    }

  for (const Interval& A : gens) {
    if (A.hi + 2 > n) continue;
    for (int p = A.hi + 2; p <= n; ++p) {
      Interval C(A.hi + 2, p, n);
      for (const Interval& B : compatible_Bs(A, C)) {
        Interval AuB(A.lo, B.hi, n), BuC(B.lo, C.hi, n);
        Relation rel;
        rel.kind = RelationKind::Box;
        rel.id = "box A=" + A.str() + " B=" + B.str() + " C=" + C.str();
        rel.lhs.ambient = rel.rhs.ambient = n;
        rel.lhs.push(detail::isym(AuB), -1);
        rel.lhs.push(detail::isym(A), 1);
        rel.lhs.push(detail::isym(B), 1);
        rel.lhs.push(detail::isym(C), 1);
        rel.lhs.push(detail::isym(BuC), -1);
        rel.rhs.push(detail::isym(BuC), -1);
        rel.rhs.push(detail::isym(C), 1);
        rel.rhs.push(detail::isym(B), 1);
        rel.rhs.push(detail::isym(A), 1);
        rel.rhs.push(detail::isym(AuB), -1);
        out.push_back(std::move(rel));
      }
    }
  }
  return out;
}

// The homomorphism from the classical to the interval presentation:
// A_{i,j} -> I_{i,j-2}^{-1} I_{i,j-1} I_{i+1,j-2} I_{i+1,j-1}^{-1}, with
// formal-identity symbols dropped and inverses mapped to reversed inverted
// blocks.
inline PresentationWord phi(const PresentationWord& w) {
  if (w.kind != SymbolKind::ClassicalA) throw std::invalid_argument("phi: expects a classical word");
  PresentationWord out;
  out.kind = SymbolKind::IntervalI;
  out.ambient = w.ambient;
  for (const auto& [sym, e] : w.syms) {
    const int i = sym.first, j = sym.second;
    std::vector<std::pair<PresentationSymbol, int>> block = {
        {PresentationSymbol::interval(i, j - 2), -1},
        {PresentationSymbol::interval(i, j - 1), 1},
        {PresentationSymbol::interval(i + 1, j - 2), 1},
        {PresentationSymbol::interval(i + 1, j - 1), -1}};
    if (e < 0) {
      std::reverse(block.begin(), block.end());
      for (auto& be : block) be.second = -be.second;
    }
    for (const auto& [bs, be] : block)
      if (!bs.trivial()) out.push(bs, be);
  }
  return out;
}

// Substitutes braid words for symbols: I_{i,j} -> l_{i,j}^2 and A_{i,j} -> the
// classical generator word, with exponent -1 giving the inverse word.
inline BraidWord realize(const PresentationWord& w) {
  const int n = w.ambient;
  BraidWord out(n + 1);
  for (const auto& [sym, e] : w.syms) {
    BraidWord piece =
        sym.kind == SymbolKind::IntervalI
            ? longest_square(Interval(sym.first, sym.trivial() ? sym.first - 1 : sym.second, n))
            : classical_generator(sym.first, sym.second, n).second;
    out.append(e > 0 ? piece : inverse_word(piece));
  }
  return out;
}

inline VerificationReport verify_relations(int n) {
  VerificationReport rep;
  rep.command = "relations";
  rep.ambient = n;
  for (const Relation& rel : enumerate_relations(n)) {
    ReportItem item;
    item.id = rel.id;
    item.kind = relation_kind_name(rel.kind);
    BraidWord lhs = realize(rel.lhs), rhs = realize(rel.rhs);
    item.pass = equal(lhs, rhs);
    if (!item.pass)
      item.witness = "lhs: " + normal_form_text(normal_form(lhs)) +
                     "\nrhs: " + normal_form_text(normal_form(rhs));
    rep.add(std::move(item));
  }
  return rep;
}

namespace detail {

inline PresentationWord a_word(int n, std::vector<std::pair<std::pair<int, int>, int>> syms) {
  PresentationWord w;
  w.kind = SymbolKind::ClassicalA;
  w.ambient = n;
  for (const auto& [ij, e] : syms) w.push(PresentationSymbol::classical(ij.first, ij.second), e);
  return w;
}

inline void check_phi_instance(VerificationReport& rep, const std::string& id,
                               const std::string& kind, const PresentationWord& lhs,
                               const PresentationWord& rhs) {
  ReportItem item;
  item.id = id;
  item.kind = kind;
  BraidWord l = realize(phi(lhs)), r = realize(phi(rhs));
  item.pass = equal(l, r);
  if (!item.pass)
    item.witness = "phi(lhs): " + normal_form_text(normal_form(l)) +
                   "\nphi(rhs): " + normal_form_text(normal_form(r));
  rep.add(std::move(item));
}

}  // namespace detail

// Tracks every instance of the classical relations through phi and certifies
// the images agree in the braid group. Case split on (r,s) against (i,j):
// disjoint, nested, s = i, r = i, and linked r < i < s < j.
inline VerificationReport verify_phi_well_defined(int n) {
  VerificationReport rep;
  rep.command = "phi";
  rep.ambient = n;
  const int m = n + 1;
  auto A = [](int i, int j) { return std::pair<int, int>{i, j}; };

  for (int r = 1; r <= m; ++r)
    for (int s = r + 1; s <= m; ++s)
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          std::string at = " (r,s,i,j)=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                           std::to_string(i) + "," + std::to_string(j) + ")";
          PresentationWord lhs =
              detail::a_word(n, {{A(r, s), -1}, {A(i, j), 1}, {A(r, s), 1}});
          if ((r < s && s < i && i < j) || (i < r && r < s && s < j)) {
            PresentationWord rhs = detail::a_word(n, {{A(i, j), 1}});
            detail::check_phi_instance(rep, "R1-case-1" + at, "classical-R1-case-1", lhs, rhs);
          } else if (r < s && s == i && i < j) {
            PresentationWord rhs =
                detail::a_word(n, {{A(r, j), 1}, {A(i, j), 1}, {A(r, j), -1}});
            detail::check_phi_instance(rep, "R1-case-2" + at, "classical-R1-case-2", lhs, rhs);
          } else if (r == i && i < s && s < j) {
            PresentationWord rhs = detail::a_word(
                n, {{A(i, j), 1}, {A(s, j), 1}, {A(i, j), 1}, {A(s, j), -1}, {A(i, j), -1}});
            detail::check_phi_instance(rep, "R1-case-3" + at, "classical-R1-case-3", lhs, rhs);
          } else if (r < i && i < s && s < j) {
            PresentationWord rhs = detail::a_word(
                n, {{A(r, j), 1},  {A(s, j), 1}, {A(r, j), -1}, {A(s, j), -1}, {A(i, j), 1},
                    {A(s, j), 1},  {A(r, j), 1}, {A(s, j), -1}, {A(r, j), -1}});
            detail::check_phi_instance(rep, "R1-case-4" + at, "classical-R1-case-4", lhs, rhs);
          }
        }
  return rep;
}

// The inductive preimage of I_{i,j} under phi from the surjectivity argument:
// w([i,i]) = A_{i,i+1} and
// w([i,j]) = w([i,j-1]) A_{i,j+1} w([i+1,j]) w([i+1,j-1])^{-1}.
inline PresentationWord surjectivity_witness(const Interval& v) {
  PresentationWord w;
  w.kind = SymbolKind::ClassicalA;
  w.ambient = v.ambient;
  if (v.empty()) return w;
  if (v.lo == v.hi) {
    w.push(PresentationSymbol::classical(v.lo, v.lo + 1), 1);
    return w;
  }
  const int i = v.lo, j = v.hi, n = v.ambient;
  w.append(surjectivity_witness(Interval(i, j - 1, n)));
  w.push(PresentationSymbol::classical(i, j + 1), 1);
  w.append(surjectivity_witness(Interval(i + 1, j, n)));
  w.append_inverse(surjectivity_witness(Interval(i + 1, j - 1, n)));
  return w;
}

// Certifies each witness twice over: phi(w) cancels freely to the single
// symbol I_v, and its realization is Garside-equal to l_v^2.
inline VerificationReport verify_witnesses(int n) {
  VerificationReport rep;
  rep.command = "witnesses";
  rep.ambient = n;
  for (const Interval& v : enumerate_generators(n)) {
    ReportItem item;
    item.id = "witness " + v.str();
    item.kind = "surjectivity-witness";
    PresentationWord image = phi(surjectivity_witness(v));
    PresentationWord reduced = free_reduce(image);
    bool free_ok = reduced.syms.size() == 1 && reduced.syms[0].first == detail::isym(v) &&
                   reduced.syms[0].second == 1;
    bool oracle_ok = equal(realize(image), longest_square(v));
    item.pass = free_ok && oracle_ok;
    if (!item.pass)
      item.witness = "phi(witness) reduces to: " + reduced.str();
    rep.add(std::move(item));
  }
  return rep;
}

// Double-index reindexing: the pair ij with 1 <= i < j <= n+1 names the
// connected subset [i, j-1].
struct ZPair {
  int i, j;
};

inline ZPair interval_to_zpair(const Interval& v) {
  if (v.empty()) throw std::invalid_argument("interval_to_zpair: empty interval");
  return {v.lo, v.hi + 1};
}

inline Interval zpair_to_interval(const ZPair& z, int n) {
  if (!(1 <= z.i && z.i < z.j && z.j <= n + 1))
    throw std::invalid_argument("zpair_to_interval: need 1 <= i < j <= n+1");
  return {z.i, z.j - 1, n};
}

// Commutation of double-index generators, derived from the interval
// conditions (distance >= 2 or nesting).
inline bool zpairs_commute(const ZPair& a, const ZPair& b, int n) {
  return intervals_commute(zpair_to_interval(a, n), zpair_to_interval(b, n));
}

}  // namespace braid
