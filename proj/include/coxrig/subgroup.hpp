#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace coxrig {

template <class T>
concept GroupElement = requires(const T a, const T b) {
  { a* b } -> std::convertible_to<T>;
  { a.inverse() } -> std::convertible_to<T>;
  { a.key() } -> std::convertible_to<std::string>;
};

// Explicitly enumerated finite subgroup: the full closure of its generators,
// ordered by canonical element key. Immutable once built.
template <GroupElement T>
class Subgroup {
 public:
  static constexpr std::size_t kDefaultCap = 50000;

  static Subgroup closure(const std::vector<T>& gens, std::size_t cap = kDefaultCap) {
    auto got = try_closure(gens, cap);
    if (!got)
      throw CapExceeded("closure exceeded cap " + std::to_string(cap) +
                        "; subgroup is infinite or larger than expected");
    return *std::move(got);
  }

  // Same, but signals overflow by absence; used by exhaustive sweeps that
  // probe many generator sets.
  static std::optional<Subgroup> try_closure(const std::vector<T>& gens, std::size_t cap) {
    if (gens.empty() || cap < 1) throw CapExceeded("closure needs generators and cap >= 1");
    Subgroup g;
    g.gens_ = gens;
    std::map<std::string, T> seen;
    T id = gens.front() * gens.front().inverse();
    seen.emplace(id.key(), id);
    std::vector<T> frontier{id};
    std::vector<T> step = gens;
    for (const T& s : gens) step.push_back(s.inverse());
    while (!frontier.empty()) {
      std::vector<T> next;
      for (const T& f : frontier)
        for (const T& s : step) {
          T p = f * s;
          auto [it, fresh] = seen.emplace(p.key(), p);
          if (fresh) {
            if (seen.size() > cap) return std::nullopt;
            next.push_back(std::move(p));
          }
          (void)it;
        }
      frontier = std::move(next);
    }
    g.elems_.reserve(seen.size());
    for (auto& [k, v] : seen) {
      g.index_.emplace(k, g.elems_.size());
      g.elems_.push_back(std::move(v));
    }
    return g;
  }

  const std::vector<T>& elements() const { return elems_; }
  const std::vector<T>& generators() const { return gens_; }
  std::size_t order() const { return elems_.size(); }
  const T& identity() const { return elems_[index_.at((gens_.front() * gens_.front().inverse()).key())]; }

  bool contains(const T& g) const { return index_.count(g.key()) > 0; }

  bool same_elements(const Subgroup& o) const {
    if (order() != o.order()) return false;
    for (const auto& [k, i] : index_)
      if (!o.index_.count(k)) return false;
    return true;
  }

  // Sorted element keys; two subgroups of one ambient group are equal iff
  // their set keys agree.
  std::string set_key() const {
    std::ostringstream os;
    for (const auto& [k, i] : index_) os << k << ';';
    return os.str();
  }

  bool is_abelian() const {
    for (const T& a : gens_)
      for (const T& b : gens_)
        if ((a * b).key() != (b * a).key()) return false;
    return true;
  }

  Subgroup center() const {
    std::vector<T> zs;
    for (const T& h : elems_) {
      bool central = true;
      for (const T& g : gens_)
        if ((g * h).key() != (h * g).key()) {
          central = false;
          break;
        }
      if (central) zs.push_back(h);
    }
    return closure(zs, order());
  }

  // {h in G : g h g^-1 = h}. Requires g to normalize G.
  Subgroup fixed_set(const T& g) const {
    T gi = g.inverse();
    std::vector<T> fixed;
    for (const T& h : elems_) {
      T c = g * h * gi;
      if (!contains(c)) throw NotNormalizing("fixed_set: element does not normalize the subgroup");
      if (c.key() == h.key()) fixed.push_back(h);
    }
    return closure(fixed, order());
  }

  Subgroup derived_subgroup() const {
    std::vector<T> comms;
    std::set<std::string> seen;
    for (const T& a : elems_)
      for (const T& b : elems_) {
        T c = a * b * a.inverse() * b.inverse();
        if (seen.insert(c.key()).second) comms.push_back(c);
      }
    return closure(comms, order());
  }

  Subgroup normal_closure_of(const T& g) const {
    std::vector<T> conj;
    std::set<std::string> seen;
    for (const T& h : elems_) {
      T c = h * g * h.inverse();
      if (seen.insert(c.key()).second) conj.push_back(c);
    }
    return closure(conj, order());
  }

  bool is_normal_in(const Subgroup& big) const {
    for (const T& g : big.gens_) {
      T gi = g.inverse();
      for (const T& h : elems_)
        if (!contains(g * h * gi)) return false;
    }
    return true;
  }

  int element_order(const T& g) const {
    T p = g;
    int n = 1;
    const std::string id_key = identity().key();
    while (p.key() != id_key) {
      p = p * g;
      ++n;
      if (n > static_cast<int>(order())) throw CapExceeded("element order exceeds group order");
    }
    return n;
  }

  // No nontrivial proper normal subgroup: the normal closure of every
  // nontrivial element is the whole group.
  bool is_simple() const {
    const std::string id_key = identity().key();
    for (const T& g : elems_) {
      if (g.key() == id_key) continue;
      if (normal_closure_of(g).order() != order()) return false;
    }
    return true;
  }

  // All nontrivial normal subgroups of 2-power order: normal closures of
  // 2-power-order elements, closed under pairwise join.
  std::vector<Subgroup> normal_two_subgroups() const {
    auto is_two_power = [](std::size_t m) { return m > 0 && (m & (m - 1)) == 0; };
    std::map<std::string, Subgroup> found;
    const std::string id_key = identity().key();
    for (const T& g : elems_) {
      if (g.key() == id_key) continue;
      if (!is_two_power(static_cast<std::size_t>(element_order(g)))) continue;
      Subgroup n = normal_closure_of(g);
      if (is_two_power(n.order())) found.emplace(n.set_key(), n);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Subgroup> current;
      for (auto& [k, v] : found) current.push_back(v);
      for (std::size_t a = 0; a < current.size(); ++a)
        for (std::size_t b = a + 1; b < current.size(); ++b) {
          std::vector<T> joint = current[a].gens_;
          joint.insert(joint.end(), current[b].gens_.begin(), current[b].gens_.end());
          Subgroup j = closure(joint, order());
          if (is_two_power(j.order()) && found.emplace(j.set_key(), j).second) grew = true;
        }
    }
    std::vector<Subgroup> out;
    for (auto& [k, v] : found)
      if (v.order() > 1) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [](const Subgroup& x, const Subgroup& y) {
                return x.order() != y.order() ? x.order() < y.order() : x.set_key() < y.set_key();
              });
    return out;
  }

 private:
  Subgroup() = default;

  std::vector<T> gens_;
  std::vector<T> elems_;
  std::map<std::string, std::size_t> index_;
};

// --- permutation-group helpers ---------------------------------------------

inline bool is_transitive(const Subgroup<Perm>& g, int degree) {
  std::vector<bool> orbit(static_cast<std::size_t>(degree), false);
  orbit[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int p = 1; p <= degree; ++p) {
      if (!orbit[static_cast<std::size_t>(p - 1)]) continue;
      for (const Perm& s : g.generators()) {
        int q = s.map(p);
        if (!orbit[static_cast<std::size_t>(q - 1)]) {
          orbit[static_cast<std::size_t>(q - 1)] = true;
          grew = true;
        }
      }
    }
  }
  return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

inline std::vector<int> global_fixed_points(const Subgroup<Perm>& g, int degree) {
  std::vector<int> fixed;
  for (int p = 1; p <= degree; ++p) {
    bool all = true;
    for (const Perm& s : g.elements())
      if (s.map(p) != p) {
        all = false;
        break;
      }
    if (all) fixed.push_back(p);
  }
  return fixed;
}

inline Subgroup<Perm> symmetric_group(int degree) {
  std::vector<Perm> gens;
  for (int i = 1; i < degree; ++i) gens.push_back(Perm::transposition(degree, i, i + 1));
  if (gens.empty()) gens.push_back(Perm(degree));
  return Subgroup<Perm>::closure(gens);
}

// Recognition special-cased to the shapes needed here, not a general
// isomorphism engine.
template <GroupElement T>
bool isomorphic_to_symmetric(const Subgroup<T>& g, int m) {
  static const std::size_t fact[] = {1, 1, 2, 6, 24, 120, 720};
  if (m < 3 || m > 5) throw Error("isomorphic_to_symmetric: only m in 3..5 supported");
  if (g.order() != fact[m]) return false;
  if (m == 3) return !g.is_abelian();
  auto d = g.derived_subgroup();
  if (g.center().order() != 1) return false;
  if (m == 4) return d.order() == 12;
  return d.order() == 60 && d.is_simple();
}

template <GroupElement T>
bool is_klein_four(const Subgroup<T>& g) {
  if (g.order() != 4) return false;
  for (const T& e : g.elements())
    if (g.element_order(e) > 2) return false;
  return true;
}

// --- the order-120 transitive subgroup of Sym(6) ---------------------------

struct S6CheckResult {
  bool order_ok = false;
  bool transitive = false;
  bool no_fixed_point = false;
  bool isomorphic_s5 = false;
  std::size_t order = 0;
  bool pass() const { return order_ok && transitive && no_fixed_point && isomorphic_s5; }
  std::string details() const {
    std::ostringstream os;
    os << "order=" << order << (order_ok ? " (=120)" : " (!=120)")
       << ", transitive=" << (transitive ? "yes" : "no")
       << ", fixed-point-free=" << (no_fixed_point ? "yes" : "no")
       << ", S5-recognition=" << (isomorphic_s5 ? "yes" : "no");
    return os.str();
  }
};

inline std::vector<Perm> exceptional_s6_generators() {
  return {Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
          Perm::from_cycles(6, {{1, 6}, {2, 4}, {3, 5}}),
          Perm::from_cycles(6, {{1, 4}, {2, 3}, {5, 6}}),
          Perm::from_cycles(6, {{1, 6}, {2, 5}, {3, 4}})};
}

// Checks that the given generators produce a transitive, fixed-point-free
// subgroup of Sym(6) of order 120 isomorphic to S_5 (order, trivial center,
// simple derived subgroup of order 60).
inline S6CheckResult check_s6_subgroup(const std::vector<Perm>& gens) {
  S6CheckResult r;
  auto h = Subgroup<Perm>::closure(gens, 720);
  r.order = h.order();
  r.order_ok = h.order() == 120;
  r.transitive = is_transitive(h, 6);
  r.no_fixed_point = global_fixed_points(h, 6).empty();
  r.isomorphic_s5 = r.order_ok && isomorphic_to_symmetric(h, 5);
  return r;
}

// --- census of S_{n-1}-subgroups of Sym(n) ---------------------------------

struct StabilizerCensus {
  int n = 0;
  std::size_t count = 0;
  bool all_point_stabilizers = false;
  bool pass() const { return all_point_stabilizers; }
};

// Enumerates every subgroup of Sym(n) of order (n-1)! isomorphic to S_{n-1}
// (closures of element pairs; symmetric groups of order >= 6 are
// 2-generated) and checks each is a point stabilizer. Only n = 4, 5 are
// supported; n = 6 is excluded because of the exceptional conjugacy class of
// transitive S_5 subgroups.
inline StabilizerCensus point_stabilizer_census(int n) {
  if (n != 4 && n != 5)
    throw Error("point_stabilizer_census: only n = 4 and n = 5 are supported");
  StabilizerCensus out;
  out.n = n;
  static const std::size_t fact[] = {1, 1, 2, 6, 24, 120};
  const std::size_t target = fact[n - 1];
  auto sym = symmetric_group(n);
  std::map<std::string, Subgroup<Perm>> found;
  const auto& els = sym.elements();
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = a; b < els.size(); ++b) {
      auto sub = Subgroup<Perm>::try_closure({els[a], els[b]}, target);
      if (!sub || sub->order() != target) continue;
      if (!isomorphic_to_symmetric(*sub, n - 1)) continue;
      found.emplace(sub->set_key(), *sub);
    }
  out.count = found.size();
  out.all_point_stabilizers = true;
  for (auto& [k, sub] : found) {
    // A subgroup of order (n-1)! fixing some point is the full stabilizer of
    // that point.
    if (global_fixed_points(sub, n).empty()) out.all_point_stabilizers = false;
  }
  return out;
}

}  // namespace coxrig
