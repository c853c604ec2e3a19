// Acceptance suite: every exact claim the toolkit is expected to reproduce,
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "braid/catalog.hpp"
#include "braid/dihedral.hpp"
#include "braid/linking.hpp"
#include "braid/oracle_suite.hpp"
#include "braid/presentation.hpp"

using namespace braid;

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

template <typename F>
void criterion(int id, const std::string& label, double time_budget_s, F&& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  body(out);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_budget_s > 0 && secs >= time_budget_s)
    out.require(false, "runtime " + std::to_string(secs) + "s exceeds budget");
  if (!out.pass) ++failures;
  std::printf("%s  criterion %d: %s [%.2fs]%s%s\n", out.pass ? "PASS" : "FAIL", id, label.c_str(),
              secs, out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "counting: 29 commutators & 6 boxes at n=4; box count C(n+2,5) for n=2..10", 1.0,
            [](Outcome& out) {
              auto rels = enumerate_relations(4);
              int comm = 0, box = 0;
              for (const auto& r : rels) (r.kind == RelationKind::Box ? box : comm)++;
              out.require(comm == 29, "commutator count " + std::to_string(comm));
              out.require(box == 6, "box count " + std::to_string(box));
              for (int n = 2; n <= 10; ++n) {
                long long boxes = 0;
                for (const auto& r : enumerate_relations(n))
                  boxes += r.kind == RelationKind::Box;
                out.require(boxes == binom(n + 2, 5), "box count mismatch at n=" + std::to_string(n));
              }
            });

  criterion(2, "relation soundness: every emitted relation verifies for n<=6", 60.0,
            [](Outcome& out) {
              for (int n = 1; n <= 6; ++n) {
                VerificationReport rep = verify_relations(n);
                out.require(rep.ok(), "failures at n=" + std::to_string(n) + ": " +
                                           std::to_string(rep.failed));
              }
            });

  criterion(3, "generation: realize(phi(A_ij)) equals A_ij for all pairs, n<=6", 0,
            [](Outcome& out) {
              for (int n = 1; n <= 6; ++n)
                for (int i = 1; i <= n + 1; ++i)
                  for (int j = i + 1; j <= n + 1; ++j) {
                    PresentationWord a;
                    a.kind = SymbolKind::ClassicalA;
                    a.ambient = n;
                    a.push(PresentationSymbol::classical(i, j), 1);
                    out.require(equal(realize(phi(a)), realize(a)),
                                "mismatch at n=" + std::to_string(n) + " A(" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
                  }
            });

  criterion(4, "well-definedness: all classical relation instances map to identities, n<=5", 0,
            [](Outcome& out) {
              for (int n = 1; n <= 5; ++n) {
                VerificationReport rep = verify_phi_well_defined(n);
                out.require(rep.ok(), "failures at n=" + std::to_string(n) + ": " +
                                           std::to_string(rep.failed));
              }
            });

  criterion(5, "identity sweeps: all seven catalog families pass for n<=6", 0, [](Outcome& out) {
    for (int n = 1; n <= 6; ++n)
      for (const std::string& fam : identity_families()) {
        VerificationReport rep = verify_identity(fam, n);
        out.require(rep.ok(), fam + " failed at n=" + std::to_string(n));
      }
  });

  criterion(6, "surjectivity witnesses certify every interval, n<=5", 0, [](Outcome& out) {
    for (int n = 1; n <= 5; ++n) {
      VerificationReport rep = verify_witnesses(n);
      out.require(rep.ok(),
                  "failures at n=" + std::to_string(n) + ": " + std::to_string(rep.failed));
    }
  });

  criterion(7, "abelianization: linking(A_ij)=e_ij (n<=5), relators vanish, 1000-trial invariance",
            0, [](Outcome& out) {
              for (int n = 1; n <= 5; ++n)
                for (int i = 1; i <= n + 1; ++i)
                  for (int j = i + 1; j <= n + 1; ++j) {
                    LinkingVector v = linking(classical_generator(i, j, n).second);
                    bool unit = true;
                    for (int p = 1; p <= n + 1; ++p)
                      for (int q = p + 1; q <= n + 1; ++q)
                        unit = unit && v.at(p, q) == ((p == i && q == j) ? 1 : 0);
                    out.require(unit, "linking(A) not e_ij at n=" + std::to_string(n));
                  }
              for (int n = 2; n <= 5; ++n)
                for (const Relation& rel : enumerate_relations(n)) {
                  BraidWord relator = realize(rel.lhs) * inverse_word(realize(rel.rhs));
                  out.require(linking(relator).is_zero(), "relator abelianization nonzero: " + rel.id);
                }
              VerificationReport rep = verify_linking_invariance(6, 1000, 2024);
              out.require(rep.ok(), "linking invariance failures: " + std::to_string(rep.failed));
            });

  criterion(8, "dihedral: rank n free abelianization, wall monodromies rank<=3, proper for n>=4",
            5.0, [](Outcome& out) {
              for (int n = 2; n <= 8; ++n) {
                AbelianizationResult ab = abelianization_rank(reidemeister_schreier(n));
                out.require(ab.rank == n, "abelianization rank at n=" + std::to_string(n));
                out.require(ab.torsion.empty(), "torsion at n=" + std::to_string(n));
                KSubgroupResult k = k_subgroup_rank(n);
                out.require(k.rank <= 3, "wall rank > 3 at n=" + std::to_string(n));
                if (n >= 4)
                  out.require(k.proper, "not proper at n=" + std::to_string(n));
                else
                  out.require(k.rank == n && !k.proper,
                              "unexpected proper verdict at n=" + std::to_string(n));
              }
            });

  criterion(9, "oracle property suite: 1000 randomized soundness checks, strands<=7", 0,
            [](Outcome& out) {
              VerificationReport rep = verify_oracle_properties(7, 1000, 4242);
              out.require(rep.ok(), std::to_string(rep.failed) + " failures");
            });

  if (failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
