#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "braid/garside.hpp"
#include "braid/linking.hpp"
#include "braid/report.hpp"
#include "braid/word.hpp"

namespace braid {

inline BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord w(strands);
  for (int t = 0; t < length; ++t) {
    int g = gen(rng);
    w.push(sign(rng) ? g : -g);
  }
  return w;
}

// Inserts one defining relator (a cancelling pair, a braid relator, or a far
// commutation) at a random position; the result spells the same element.
inline BraidWord insert_relator(std::mt19937_64& rng, const BraidWord& w) {
  const int n = w.strands() - 1;
  std::vector<int> rel;
  switch (std::uniform_int_distribution<int>(0, n >= 3 ? 2 : (n >= 2 ? 1 : 0))(rng)) {
    case 0: {
      int g = std::uniform_int_distribution<int>(1, n)(rng);
      rel = {g, -g};
      break;
    }
    case 1: {
      int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
      rel = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
      break;
    }
    default: {
      int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
      int j = std::uniform_int_distribution<int>(i + 2, n)(rng);
      rel = {i, j, -i, -j};
      break;
    }
  }
  std::vector<int> out = w.letters();
  size_t pos = std::uniform_int_distribution<size_t>(0, out.size())(rng);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), rel.begin(), rel.end());
  return BraidWord(w.strands(), std::move(out));
}

// A random pure word: a random word times the positive lift of the inverse of
// its underlying permutation.
inline BraidWord random_pure_word(std::mt19937_64& rng, int strands, int length) {
  BraidWord w = random_word(rng, strands, length);
  Permutation q = project_to_permutation(w).inverse();
  for (int g : detail::positive_word(q)) w.push(g);
  return w;
}

// Randomized soundness suite for the normal-form oracle: relator-insertion
// invariance, inverse cancellation, projection compatibility, and stability
// under free reduction. One report item per trial.
inline VerificationReport verify_oracle_properties(int max_strands, int trials, uint64_t seed) {
  VerificationReport rep;
  rep.command = "oracle";
  rep.ambient = max_strands - 1;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
    int length = std::uniform_int_distribution<int>(0, 24)(rng);
    BraidWord w = random_word(rng, strands, length);
    BraidWord w2 = insert_relator(rng, w);

    bool ok = equal(w, w2);
    ok = ok && equal(w, free_reduce(w));
    ok = ok && normal_form(w * inverse_word(w)) == GarsideNormalForm{strands, 0, {}};
    ok = ok && project_to_permutation(w) == project_to_permutation(w2);

    ReportItem item;
    item.id = "trial-" + std::to_string(t) + " strands=" + std::to_string(strands);
    item.kind = "oracle-soundness";
    item.pass = ok;
    if (!ok) item.witness = "word: " + word_to_string(w);
    rep.add(std::move(item));
  }
  return rep;
}

// Garside-equal pure words must have equal linking vectors.
inline VerificationReport verify_linking_invariance(int max_strands, int trials, uint64_t seed) {
  VerificationReport rep;
  rep.command = "linking";
  rep.ambient = max_strands - 1;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
    int length = std::uniform_int_distribution<int>(0, 20)(rng);
    BraidWord w = random_pure_word(rng, strands, length);
    BraidWord w2 = insert_relator(rng, w);

    ReportItem item;
    item.id = "trial-" + std::to_string(t) + " strands=" + std::to_string(strands);
    item.kind = "linking-invariance";
    item.pass = linking(w) == linking(w2);
    if (!item.pass) item.witness = "word: " + word_to_string(w);
    rep.add(std::move(item));
  }
  return rep;
}

}  // namespace braid
