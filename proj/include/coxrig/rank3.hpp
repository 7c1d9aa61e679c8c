#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace coxrig {

// Freely reduced word in F_2 = <a, b>. Letters are +1/-1 for a/a^-1 and
// +2/-2 for b/b^-1.
class FreeWord2 {
 public:
  FreeWord2() = default;

  void push(int letter) {
    if (!ls_.empty() && ls_.back() == -letter)
      ls_.pop_back();
    else
      ls_.push_back(letter);
  }

  FreeWord2 operator*(const FreeWord2& o) const {
    FreeWord2 r = *this;
    for (int l : o.ls_) r.push(l);
    return r;
  }

  FreeWord2 inverse() const {
    FreeWord2 r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back(-*it);
    return r;
  }

  bool is_identity() const { return ls_.empty(); }
  const std::vector<int>& letters() const { return ls_; }

  // Exponent sums of a and b.
  std::array<long long, 2> abelianized() const {
    std::array<long long, 2> e{0, 0};
    for (int l : ls_) e[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    return e;
  }

  bool operator==(const FreeWord2&) const = default;

  std::string str() const {
    if (ls_.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < ls_.size(); ++k) {
      if (k) os << ' ';
      os << "aAbB"[std::abs(ls_[k]) == 1 ? (ls_[k] > 0 ? 0 : 1) : (ls_[k] > 0 ? 2 : 3)];
    }
    return os.str();
  }

 private:
  std::vector<int> ls_;
};

// Length parity: the kernel of this map is the even-length words, freely
// generated by a = x1 x2 and b = x2 x3.
inline int epsilon(const Word& u) {
  if (u.rank() != 3) throw RankMismatch("epsilon is defined on rank-3 words");
  return static_cast<int>(u.length() % 2);
}

// Rewrites an even-length rank-3 word over the free basis a = x1 x2,
// b = x2 x3, scanning two letters at a time:
//   x1 x2 -> a      x2 x1 -> a^-1
//   x2 x3 -> b      x3 x2 -> b^-1
//   x1 x3 -> a b    x3 x1 -> b^-1 a^-1
inline FreeWord2 to_free(const Word& u) {
  if (epsilon(u) != 0) throw OddLength("to_free needs an even-length word: " + u.str());
  FreeWord2 out;
  const auto& ls = u.letters();
  for (std::size_t k = 0; k + 1 < ls.size(); k += 2) {
    int p = ls[k], q = ls[k + 1];
    if (p == 1 && q == 2) {
      out.push(1);
    } else if (p == 2 && q == 1) {
      out.push(-1);
    } else if (p == 2 && q == 3) {
      out.push(2);
    } else if (p == 3 && q == 2) {
      out.push(-2);
    } else if (p == 1 && q == 3) {
      out.push(1);
      out.push(2);
    } else {  // p == 3, q == 1
      out.push(-2);
      out.push(-1);
    }
  }
  return out;
}

// Inverse substitution a -> x1 x2, b -> x2 x3; round-trips with to_free.
inline Word from_free(const FreeWord2& f) {
  std::vector<int> raw;
  for (int l : f.letters()) {
    switch (l) {
      case 1: raw.push_back(1); raw.push_back(2); break;
      case -1: raw.push_back(2); raw.push_back(1); break;
      case 2: raw.push_back(2); raw.push_back(3); break;
      default: raw.push_back(3); raw.push_back(2); break;
    }
  }
  return Word(3, raw);
}

// 2x2 integer matrix; everything this module produces has determinant +-1.
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 negated() const { return {-a, -b, -c, -d}; }
  long long det() const { return a * d - b * c; }
  bool operator==(const Mat2&) const = default;

  static Mat2 id() { return {}; }

  // Sign-normalized representative of the class {M, -M}: first nonzero entry
  // positive in row-major order.
  Mat2 pgl_normalized() const {
    for (long long v : {a, b, c, d}) {
      if (v > 0) return *this;
      if (v < 0) return negated();
    }
    return *this;
  }

  bool pgl_equal(const Mat2& o) const { return pgl_normalized() == o.pgl_normalized(); }
  bool pgl_trivial() const { return pgl_normalized() == id(); }

  std::string str() const {
    std::ostringstream os;
    os << "[[" << a << ',' << b << "],[" << c << ',' << d << "]]";
    return os.str();
  }
};

// The matrix induced on the abelianization of ker(epsilon): columns are the
// exponent vectors of the images of a and b.
inline Mat2 induced_matrix(const Automorphism& alpha) {
  if (alpha.rank() != 3) throw RankMismatch("induced_matrix is defined at rank 3");
  auto col_a = to_free(alpha.apply(from_free([] {
                 FreeWord2 f;
                 f.push(1);
                 return f;
               }()))).abelianized();
  auto col_b = to_free(alpha.apply(from_free([] {
                 FreeWord2 f;
                 f.push(2);
                 return f;
               }()))).abelianized();
  return {col_a[0], col_b[0], col_a[1], col_b[1]};
}

}  // namespace coxrig
