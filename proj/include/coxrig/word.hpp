#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace coxrig {

// Reduced word in the universal Coxeter group W_n = <x_1,...,x_n | x_i^2 = 1>.
// Letters are generator indices in 1..n; a word is reduced when no two adjacent
// letters are equal. The empty word is the identity. Values are immutable;
// reduction happens at construction and every operation returns a new value.
class Word {
 public:
  // Identity of W_rank.
  explicit Word(int rank) : rank_(rank) { check_rank(rank); }

  // Reduces an arbitrary letter sequence.
  Word(int rank, const std::vector<int>& raw) : rank_(rank) {
    check_rank(rank);
    letters_.reserve(raw.size());
    for (int a : raw) push_reduced(a);
  }

  static Word generator(int rank, int i) { return Word(rank, {i}); }

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }

  // Reduced product. Cancellation can only happen at the junction.
  Word operator*(const Word& v) const {
    check_same_rank(v);
    Word out = *this;
    for (int a : v.letters_) out.push_reduced(a);
    return out;
  }

  // Every generator is its own inverse, so the inverse is the reversal.
  Word inverse() const {
    Word out(rank_);
    out.letters_.assign(letters_.rbegin(), letters_.rend());
    return out;
  }

  // g * u * g^-1, reduced.
  Word conjugated_by(const Word& g) const {
    check_same_rank(g);
    return g * (*this) * g.inverse();
  }

  // Splits u = conjugator * core * conjugator^-1 with core cyclically reduced
  // (first letter != last letter, or length <= 1).
  std::pair<Word, Word> cyclic_reduce() const {
    Word core = *this;
    Word conj(rank_);
    while (core.length() >= 2 && core.letters_.front() == core.letters_.back()) {
      conj.letters_.push_back(core.letters_.front());
      core.letters_.erase(core.letters_.begin());
      core.letters_.pop_back();
    }
    return {core, conj};
  }

  // u is an involution iff u != e and u*u = e; for reduced words this happens
  // exactly when u is a palindrome (necessarily of odd length).
  bool is_involution() const {
    if (is_identity()) return false;
    return ((*this) * (*this)).is_identity();
  }

  // Writes an involution uniquely as w * x_j * w^-1 with w reduced and not
  // ending in x_j; w is the half before the middle letter.
  std::pair<Word, int> involution_decompose() const {
    if (is_identity() || !std::equal(letters_.begin(), letters_.end(), letters_.rbegin()))
      throw NotInvolution("involution_decompose: word is not an involution: " + str());
    std::size_t half = letters_.size() / 2;
    Word w(rank_);
    w.letters_.assign(letters_.begin(), letters_.begin() + half);
    return {w, letters_[half]};
  }

  bool operator==(const Word& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }

  // Total order: length first, then lexicographic. Used wherever a canonical
  // minimum is taken.
  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    if (auto c = letters_ <=> o.letters_; c != 0) return c;
    return rank_ <=> o.rank_;
  }

  // Text form: space-separated letters, "e" for the identity.
  std::string str() const {
    if (letters_.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k) os << ' ';
      os << letters_[k];
    }
    return os.str();
  }

  static Word parse(const std::string& text, int rank) {
    std::istringstream is(text);
    std::string tok;
    std::vector<int> raw;
    while (is >> tok) {
      if (tok == "e") continue;
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        raw.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad word token '" + tok + "'");
      }
    }
    return Word(rank, raw);
  }

 private:
  void push_reduced(int a) {
    if (a < 1 || a > rank_)
      throw IndexOutOfRank("letter " + std::to_string(a) + " out of rank " + std::to_string(rank_));
    if (!letters_.empty() && letters_.back() == a)
      letters_.pop_back();
    else
      letters_.push_back(a);
  }

  static void check_rank(int rank) {
    if (rank < 1) throw IndexOutOfRank("rank must be positive, got " + std::to_string(rank));
  }

  void check_same_rank(const Word& o) const {
    if (rank_ != o.rank_)
      throw RankMismatch("word ranks differ: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

  int rank_;
  std::vector<int> letters_;
};

// Conjugacy test by the free-product criterion: cyclically reduce both words;
// cores of length <= 1 are conjugate iff equal, longer cores iff one is a
// cyclic rotation of the other.
inline bool are_conjugate(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankMismatch("are_conjugate: ranks differ");
  Word cu = u.cyclic_reduce().first;
  Word cv = v.cyclic_reduce().first;
  if (cu.length() != cv.length()) return false;
  if (cu.length() <= 1) return cu == cv;
  const auto& a = cu.letters();
  const auto& b = cv.letters();
  std::size_t m = a.size();
  for (std::size_t s = 0; s < m; ++s) {
    bool match = true;
    for (std::size_t k = 0; k < m && match; ++k) match = a[(s + k) % m] == b[k];
    if (match) return true;
  }
  return false;
}

}  // namespace coxrig
