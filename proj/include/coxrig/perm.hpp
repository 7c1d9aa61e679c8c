#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace coxrig {

// Permutation of {1..m}, stored as 0-based image vector. Composition applies
// the right factor first, matching automorphism composition.
class Perm {
 public:
  explicit Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
    if (degree < 1) throw IndexOutOfRank("permutation degree must be positive");
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm transposition(int degree, int i, int j) {
    Perm p(degree);
    p.check_point(i);
    p.check_point(j);
    if (i == j) throw EqualIndices("transposition needs distinct points");
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
  }

  // 1-based one-line notation.
  static Perm from_images(const std::vector<int>& images) {
    Perm p(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::size_t k = 0; k < images.size(); ++k) {
      int v = images[k];
      if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
        throw PermutationNotBijective("image list is not a permutation");
      seen[v - 1] = true;
      p.img_[k] = v - 1;
    }
    return p;
  }

  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 1);
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k) images[c[k] - 1] = c[(k + 1) % c.size()];
    return from_images(images);
  }

  int degree() const { return static_cast<int>(img_.size()); }

  // 1-based application.
  int map(int i) const {
    check_point(i);
    return img_[i - 1] + 1;
  }

  // (p*q)(i) = p(q(i)).
  Perm operator*(const Perm& q) const {
    if (degree() != q.degree()) throw RankMismatch("permutation degrees differ");
    Perm r(degree());
    for (std::size_t k = 0; k < img_.size(); ++k) r.img_[k] = img_[q.img_[k]];
    return r;
  }

  Perm inverse() const {
    Perm r(degree());
    for (std::size_t k = 0; k < img_.size(); ++k) r.img_[img_[k]] = static_cast<int>(k);
    return r;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
      if (img_[k] != static_cast<int>(k)) return false;
    return true;
  }

  int order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
      p = p * (*this);
      ++n;
    }
    return n;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  auto operator<=>(const Perm& o) const = default;

  std::string key() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < img_.size(); ++k) {
      if (k) os << ' ';
      os << img_[k] + 1;
    }
    return os.str();
  }

  // Cycle notation, fixed points omitted; identity prints as "id".
  std::string cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s] || img_[s] == static_cast<int>(s)) continue;
      os << '(';
      std::size_t k = s;
      bool first = true;
      while (!seen[k]) {
        seen[k] = true;
        if (!first) os << ' ';
        os << k + 1;
        first = false;
        k = static_cast<std::size_t>(img_[k]);
      }
      os << ')';
      any = true;
    }
    return any ? os.str() : "id";
  }

 private:
  void check_point(int i) const {
    if (i < 1 || i > degree()) throw IndexOutOfRank("point " + std::to_string(i) + " out of degree");
  }

  std::vector<int> img_;
};

}  // namespace coxrig
