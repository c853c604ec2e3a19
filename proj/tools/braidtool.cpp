// braidtool: braid-word normalization, interval-presentation enumeration and
// verification, pure-braid abelianization, and dihedral kernel analysis.
// JSON goes to stdout; a short human summary goes to stderr when it is a tty.
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braid/catalog.hpp"
#include "braid/dihedral.hpp"
#include "braid/garside.hpp"
#include "braid/linking.hpp"
#include "braid/oracle_suite.hpp"
#include "braid/presentation.hpp"
#include "braid/word.hpp"

using json = nlohmann::ordered_json;

namespace {

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void summarize(const std::string& line) {
  if (isatty(fileno(stderr))) std::fputs((line + "\n").c_str(), stderr);
}

json report_json(const braid::VerificationReport& rep) {
  json items = json::array();
  for (const auto& item : rep.items) {
    json j{{"id", item.id}, {"kind", item.kind}, {"verdict", item.pass ? "pass" : "fail"}};
    if (!item.pass) j["witness"] = item.witness;
    items.push_back(std::move(j));
  }
  return json{{"command", rep.command}, {"ambient", rep.ambient}, {"total", rep.total},
              {"passed", rep.passed},   {"failed", rep.failed},   {"items", std::move(items)}};
}

json symbols_json(const braid::PresentationWord& w) {
  json arr = json::array();
  for (const auto& [sym, e] : w.syms)
    arr.push_back(json{{"sym", {sym.first, sym.second}}, {"exp", e}});
  return arr;
}

int finish_report(const braid::VerificationReport& rep, const std::string& family) {
  json doc = report_json(rep);
  doc["family"] = family;
  emit(doc);
  summarize("verify " + family + ": " + std::to_string(rep.passed) + "/" +
            std::to_string(rep.total) + " passed");
  return rep.ok() ? 0 : 1;
}

int cmd_enumerate(int n, const std::string& kind) {
  auto gens = braid::enumerate_generators(n);
  auto rels = braid::enumerate_relations(n);

  int far = 0, incl = 0, box = 0;
  for (const auto& r : rels) {
    if (r.kind == braid::RelationKind::FarCommutator) ++far;
    if (r.kind == braid::RelationKind::InclusionCommutator) ++incl;
    if (r.kind == braid::RelationKind::Box) ++box;
  }

  json jgens = json::array();
  for (const auto& g : gens) {
    braid::ZPair z = braid::interval_to_zpair(g);
    jgens.push_back(json{{"interval", {g.lo, g.hi}}, {"pair", {z.i, z.j}}});
  }

  json jrels = json::array();
  for (const auto& r : rels) {
    bool is_box = r.kind == braid::RelationKind::Box;
    if (kind == "box" && !is_box) continue;
    if (kind == "commutator" && is_box) continue;
    jrels.push_back(json{{"id", r.id},
                         {"kind", braid::relation_kind_name(r.kind)},
                         {"lhs", symbols_json(r.lhs)},
                         {"rhs", symbols_json(r.rhs)}});
  }

  emit(json{{"command", "enumerate"},
            {"ambient", n},
            {"kind", kind},
            {"counts",
             {{"generators", gens.size()},
              {"commutators", far + incl},
              {"far_commutators", far},
              {"inclusion_commutators", incl},
              {"boxes", box}}},
            {"generators", std::move(jgens)},
            {"relations", std::move(jrels)}});
  summarize("enumerate n=" + std::to_string(n) + ": " + std::to_string(gens.size()) +
            " generators, " + std::to_string(far + incl) + " commutators, " +
            std::to_string(box) + " boxes");
  return 0;
}

int cmd_verify(int n, const std::string& family, int trials, uint64_t seed) {
  using namespace braid;
  if (family == "relations") return finish_report(verify_relations(n), family);
  if (family == "phi") return finish_report(verify_phi_well_defined(n), family);
  if (family == "witnesses") return finish_report(verify_witnesses(n), family);
  if (family == "oracle")
    return finish_report(verify_oracle_properties(n + 1, trials, seed), family);
  if (family == "linking")
    return finish_report(verify_linking_invariance(n + 1, trials, seed), family);
  if (family == "all") {
    VerificationReport rep;
    rep.command = "all";
    rep.ambient = n;
    for (const std::string& fam : identity_families()) rep.merge(verify_identity(fam, n));
    rep.merge(verify_relations(n));
    rep.merge(verify_phi_well_defined(n));
    rep.merge(verify_witnesses(n));
    return finish_report(rep, family);
  }
  return finish_report(verify_identity(family, n), family);  // lemma:* / cor:*
}

int cmd_normalize(int n, const std::string& word) {
  braid::BraidWord w = braid::parse_word(word, n + 1);
  braid::GarsideNormalForm nf = braid::normal_form(w);
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(f.images());
  emit(json{{"command", "normalize"},
            {"ambient", n},
            {"strands", n + 1},
            {"word", word},
            {"infimum", nf.infimum},
            {"factors", std::move(factors)},
            {"canonical_word", braid::word_to_string(braid::normal_form_word(nf))},
            {"text", braid::normal_form_text(nf)}});
  summarize("normalize: infimum " + std::to_string(nf.infimum) + ", " +
            std::to_string(nf.factors.size()) + " factors");
  return 0;
}

// Tokens are strand pairs "i,j" with an optional leading - for the inverse,
// e.g. "1,3 -2,4" for A_{1,3} A_{2,4}^{-1}.
braid::PresentationWord parse_classical_word(const std::string& text, int n) {
  braid::PresentationWord w;
  w.kind = braid::SymbolKind::ClassicalA;
  w.ambient = n;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int e = 1;
    std::string body = tok;
    if (!body.empty() && body[0] == '-') {
      e = -1;
      body = body.substr(1);
    }
    size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("rewrite: token must be i,j or -i,j: " + tok);
    int i = 0, j = 0;
    try {
      i = std::stoi(body.substr(0, comma));
      j = std::stoi(body.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("rewrite: malformed token: " + tok);
    }
    if (!(1 <= i && i < j && j <= n + 1))
      throw std::invalid_argument("rewrite: need 1 <= i < j <= n+1 in token: " + tok);
    w.push(braid::PresentationSymbol::classical(i, j), e);
  }
  return w;
}

int cmd_rewrite(int n, const std::string& word) {
  braid::PresentationWord a = parse_classical_word(word, n);
  braid::PresentationWord image = braid::phi(a);
  braid::BraidWord ra = braid::realize(a), ri = braid::realize(image);
  bool ok = braid::equal(ra, ri);
  emit(json{{"command", "rewrite"},
            {"ambient", n},
            {"input", symbols_json(a)},
            {"phi", symbols_json(image)},
            {"realized_input", braid::word_to_string(ra)},
            {"realized_phi", braid::word_to_string(ri)},
            {"garside_equal", ok}});
  summarize(std::string("rewrite: images ") + (ok ? "agree" : "DISAGREE"));
  return ok ? 0 : 1;
}

int cmd_abelianize(int n, const std::string& word) {
  braid::BraidWord w = braid::parse_word(word, n + 1);
  braid::LinkingVector v = braid::linking(w);
  json entries = json::object();
  for (int p = 1; p <= n + 1; ++p)
    for (int q = p + 1; q <= n + 1; ++q)
      if (v.at(p, q) != 0) entries[std::to_string(p) + "," + std::to_string(q)] = v.at(p, q);
  emit(json{{"command", "abelianize"},
            {"ambient", n},
            {"strands", n + 1},
            {"word", word},
            {"linking", std::move(entries)}});
  summarize("abelianize: " + std::to_string(entries.size()) + " nonzero linking numbers");
  return 0;
}

long long small_int(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value too large for JSON output");
  return v.get_si();
}

int cmd_dihedral(int n, bool want_presentation, bool want_ab, bool want_k) {
  if (!want_presentation && !want_ab && !want_k) want_presentation = want_ab = want_k = true;
  braid::SubgroupPresentation p = braid::reidemeister_schreier(n);

  json doc{{"command", "dihedral"},
           {"label", n},
           {"index", p.index},
           {"generator_count", p.generator_count}};
  if (want_presentation) {
    json transversal = json::array();
    for (const auto& t : p.transversal) transversal.push_back(t.str());
    json relators = json::array();
    for (const auto& rel : p.relators) {
      json r = json::array();
      for (const auto& [id, e] : rel) r.push_back({id, e});
      relators.push_back(std::move(r));
    }
    doc["presentation"] = {{"transversal", std::move(transversal)},
                           {"relators", std::move(relators)}};
  }
  if (want_ab) {
    braid::SmithResult snf = braid::smith_normal_form(p.relator_matrix());
    json diag = json::array();
    for (const mpz_class& d : snf.diagonal()) diag.push_back(small_int(d));
    braid::AbelianizationResult ab = braid::abelianization_rank(p);
    doc["abelianization"] = {{"snf_diagonal", std::move(diag)},
                             {"rank", ab.rank},
                             {"torsion", ab.torsion}};
  }
  if (want_k) {
    braid::KSubgroupResult k = braid::k_subgroup_rank(n);
    doc["k_subgroup"] = {{"rank", k.rank}, {"proper", k.proper}};
    summarize("dihedral n=" + std::to_string(n) + ": wall-monodromy rank " +
              std::to_string(k.rank) + (k.proper ? " < n (proper subgroup)" : " (full rank)"));
  }
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pure braid presentation toolkit"};
  app.require_subcommand(1);

  int n = 3;
  std::string kind = "all", family = "relations", word;
  int trials = 1000;
  uint64_t seed = 0;
  bool want_presentation = false, want_ab = false, want_k = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list generators and relations");
  enumerate->add_option("--n", n, "ambient Dynkin graph size")->required();
  enumerate->add_option("--kind", kind, "box|commutator|all")
      ->check(CLI::IsMember({"box", "commutator", "all"}));

  CLI::App* verify = app.add_subcommand("verify", "machine-verify a relation family");
  verify->add_option("--n", n, "ambient Dynkin graph size")->required();
  verify->add_option("--family", family,
                     "relations|phi|witnesses|oracle|linking|all|lemma:2.2|cor:2.3|lemma:3.1|"
                     "lemma:3.2|lemma:3.4|lemma:3.7|cor:3.8")
      ->required();
  verify->add_option("--trials", trials, "trial count for randomized families");
  verify->add_option("--seed", seed, "seed for randomized families");

  CLI::App* normalize = app.add_subcommand("normalize", "Garside normal form of a word");
  normalize->add_option("--n", n, "ambient Dynkin graph size")->required();
  normalize->add_option("--word", word, "signed generator indices, e.g. \"1 2 -1\"")->required();

  CLI::App* rewrite = app.add_subcommand("rewrite", "apply the classical-to-interval rewriting");
  rewrite->add_option("--n", n, "ambient Dynkin graph size")->required();
  rewrite->add_option("--word", word, "classical symbols, e.g. \"1,3 -2,4\"")->required();

  CLI::App* abelianize = app.add_subcommand("abelianize", "linking numbers of a pure word");
  abelianize->add_option("--n", n, "ambient Dynkin graph size")->required();
  abelianize->add_option("--word", word, "signed generator indices")->required();

  CLI::App* dihedral = app.add_subcommand("dihedral", "dihedral kernel analysis");
  dihedral->add_option("--n", n, "Coxeter label on the edge")->required();
  dihedral->add_flag("--presentation", want_presentation, "emit transversal and relators");
  dihedral->add_flag("--ab-rank", want_ab, "emit abelianization rank and torsion");
  dihedral->add_flag("--k-rank", want_k, "emit wall-monodromy subgroup rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(n, kind);
    if (app.got_subcommand(verify)) return cmd_verify(n, family, trials, seed);
    if (app.got_subcommand(normalize)) return cmd_normalize(n, word);
    if (app.got_subcommand(rewrite)) return cmd_rewrite(n, word);
    if (app.got_subcommand(abelianize)) return cmd_abelianize(n, word);
    if (app.got_subcommand(dihedral)) return cmd_dihedral(n, want_presentation, want_ab, want_k);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
