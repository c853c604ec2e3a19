#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braid {

// Permutation of {1,...,m}, stored as the image sequence (1-based values).
// Composition is function composition: (a*b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(int m) : img_(static_cast<size_t>(m)) {
    if (m < 1) throw std::invalid_argument("Permutation: size must be >= 1");
    std::iota(img_.begin(), img_.end(), 1);
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: images must be a bijection of 1..m");
      seen[v - 1] = 1;
    }
  }

  static Permutation transposition(int m, int i) {
    Permutation p(m);
    if (i < 1 || i >= m) throw std::invalid_argument("Permutation: transposition index out of range");
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  // The order-reversing permutation p -> m+1-p (image of the half twist).
  static Permutation reversal(int m) {
    Permutation p(m);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x - 1)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int x = 1; x <= size(); ++x)
      if (img_[x - 1] != x) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p(size());
    for (int x = 1; x <= size(); ++x) p.img_[img_[x - 1] - 1] = x;
    return p;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
    Permutation p(a.size());
    for (int x = 1; x <= a.size(); ++x) p.img_[x - 1] = a(b(x));
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
  std::vector<int> img_;
};

// A word in the Artin generators of the braid group on `strands` strands.
// Letters are signed generator indices: +g for s_g, -g for its inverse,
// with 1 <= g <= strands-1. The empty word is the identity.
class BraidWord {
public:
  BraidWord() : strands_(1) {}

  explicit BraidWord(int strands) : strands_(strands) { check_strands(); }

  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    check_strands();
    for (int l : letters_) check_letter(l);
  }

  int strands() const { return strands_; }
  // Largest legal generator index; the ambient Dynkin graph size n.
  int index_bound() const { return strands_ - 1; }
  const std::vector<int>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(int letter) {
    check_letter(letter);
    letters_.push_back(letter);
  }

  void append(const BraidWord& w) {
    if (w.strands_ != strands_)
      throw std::invalid_argument("BraidWord: cannot concatenate words with different strand counts");
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  friend BraidWord operator*(const BraidWord& u, const BraidWord& v) {
    BraidWord w = u;
    w.append(v);
    return w;
  }

  friend bool operator==(const BraidWord& u, const BraidWord& v) {
    return u.strands_ == v.strands_ && u.letters_ == v.letters_;
  }

private:
  void check_strands() const {
    if (strands_ < 1) throw std::invalid_argument("BraidWord: strand count must be >= 1");
  }
  void check_letter(int l) const {
    int g = l < 0 ? -l : l;
    if (l == 0 || g > strands_ - 1)
      throw std::invalid_argument("BraidWord: letter index out of range for strand count");
  }

  int strands_;
  std::vector<int> letters_;
};

// Removes adjacent cancelling pairs s_g s_g^{-1} and s_g^{-1} s_g, to a fixed point.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strands(), std::move(out));
}

// The reversal antiautomorphism g -> g-bar: letters in reverse order, signs kept.
inline BraidWord reverse_word(const BraidWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(out));
}

// Group inverse: letters reversed with signs flipped.
inline BraidWord inverse_word(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return BraidWord(w.strands(), std::move(out));
}

// Image under Br_{m} -> S_m, s_g -> (g, g+1). Signs are ignored.
inline Permutation project_to_permutation(const BraidWord& w) {
  std::vector<int> img(static_cast<size_t>(w.strands()));
  std::iota(img.begin(), img.end(), 1);
  for (int l : w.letters()) {
    int g = l < 0 ? -l : l;
    std::swap(img[g - 1], img[g]);
  }
  return Permutation(std::move(img));
}

inline bool is_pure(const BraidWord& w) { return project_to_permutation(w).is_identity(); }

// Text format: whitespace-separated signed generator indices, e.g. "1 2 -1".
// The empty string is the identity.
inline BraidWord parse_word(const std::string& text, int strands) {
  BraidWord w(strands);
  std::istringstream in(text);
  long long v = 0;
  while (in >> v) {
    if (v == 0 || v < -(strands - 1) || v > strands - 1)
      throw std::invalid_argument("parse_word: letter out of range: " + std::to_string(v));
    w.push(static_cast<int>(v));
  }
  if (!in.eof())
    throw std::invalid_argument("parse_word: malformed word text");
  return w;
}

inline std::string word_to_string(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters()[i]);
  }
  return s;
}

}  // namespace braid
