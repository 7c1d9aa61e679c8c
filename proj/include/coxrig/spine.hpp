#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace coxrig {

// --- canonical forms of colored trees ---------------------------------------

struct TreeCanon {
  std::string key;
  unsigned long long autos = 1;  // color-preserving graph automorphisms
};

namespace detail {

inline std::vector<std::vector<int>> adjacency(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

// Centers of a tree by leaf peeling (one or two of them).
inline std::vector<int> tree_centers(int nv, const std::vector<std::vector<int>>& adj) {
  if (nv == 1) return {0};
  std::vector<int> deg(static_cast<std::size_t>(nv));
  std::vector<int> layer;
  for (int v = 0; v < nv; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = nv;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : adj[static_cast<std::size_t>(v)])
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct RootedCanon {
  std::string key;
  unsigned long long autos;
};

inline RootedCanon rooted_canon(int v, int parent, const std::vector<std::vector<int>>& adj,
                                const std::vector<std::string>& color) {
  std::vector<RootedCanon> kids;
  for (int w : adj[static_cast<std::size_t>(v)])
    if (w != parent) kids.push_back(rooted_canon(w, v, adj, color));
  std::sort(kids.begin(), kids.end(),
            [](const RootedCanon& a, const RootedCanon& b) { return a.key < b.key; });
  unsigned long long autos = 1;
  for (std::size_t k = 0; k < kids.size();) {
    std::size_t j = k;
    while (j < kids.size() && kids[j].key == kids[k].key) ++j;
    for (std::size_t m = 2; m <= j - k; ++m) autos *= m;
    for (std::size_t m = k; m < j; ++m) autos *= kids[m].autos;
    k = j;
  }
  std::string key = "(" + color[static_cast<std::size_t>(v)];
  for (const auto& kid : kids) key += kid.key;
  key += ")";
  return {key, autos};
}

// Canonical key and automorphism count of a colored tree; automorphisms must
// preserve the color of every vertex. Rooting at the (color-independent)
// center makes the key isomorphism-invariant.
inline TreeCanon tree_canonical(int nv, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<std::string>& color) {
  auto adj = adjacency(nv, edges);
  auto centers = tree_centers(nv, adj);
  if (centers.size() == 1) {
    auto rc = rooted_canon(centers[0], -1, adj, color);
    return {rc.key, rc.autos};
  }
  auto h0 = rooted_canon(centers[0], centers[1], adj, color);
  auto h1 = rooted_canon(centers[1], centers[0], adj, color);
  if (h1.key < h0.key) std::swap(h0, h1);
  unsigned long long autos = h0.autos * h1.autos * (h0.key == h1.key ? 2 : 1);
  return {"<" + h0.key + h1.key + ">", autos};
}

inline std::vector<int> component_without_edge(int start, int avoid_a, int avoid_b,
                                               const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp{start};
  std::vector<bool> seen(adj.size(), false);
  seen[static_cast<std::size_t>(start)] = true;
  for (std::size_t k = 0; k < comp.size(); ++k)
    for (int w : adj[static_cast<std::size_t>(comp[k])]) {
      if ((comp[k] == avoid_a && w == avoid_b) || (comp[k] == avoid_b && w == avoid_a)) continue;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        comp.push_back(w);
      }
    }
  return comp;
}

}  // namespace detail

// --- graph shapes ------------------------------------------------------------

enum class StarClass { ZeroStar, FStar, Other };

inline std::string star_class_name(StarClass c) {
  switch (c) {
    case StarClass::ZeroStar: return "zero-star";
    case StarClass::FStar: return "F-star";
    default: return "other";
  }
}

// Underlying combinatorial data of a spine vertex: a finite tree with exactly
// n vertices carrying the order-2 group, all leaves among them, every trivial
// vertex of degree >= 3, and (in the pointed variant) a base vertex.
struct GraphShape {
  int rank = 0;
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> labeled;
  std::optional<int> base;

  int degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
  }
  bool is_leaf(int v) const { return degree(v) == 1; }

  std::vector<int> labeled_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices; ++v)
      if (labeled[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices; ++v)
      if (is_leaf(v)) out.push_back(v);
    return out;
  }

  void validate() const {
    if (num_vertices < 1 || static_cast<int>(labeled.size()) != num_vertices)
      throw Error("shape: bad vertex data");
    if (static_cast<int>(edges.size()) != num_vertices - 1) throw Error("shape: not a tree");
    for (auto [a, b] : edges)
      if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices || a == b)
        throw Error("shape: bad edge");
    auto adj = detail::adjacency(num_vertices, edges);
    auto comp = num_vertices == 1
                    ? std::vector<int>{0}
                    : detail::component_without_edge(0, -1, -1, adj);
    if (static_cast<int>(comp.size()) != num_vertices) throw Error("shape: not connected");
    if (static_cast<int>(labeled_vertices().size()) != rank)
      throw Error("shape: needs exactly rank labeled vertices");
    for (int v = 0; v < num_vertices; ++v) {
      if (!labeled[static_cast<std::size_t>(v)]) {
        if (is_leaf(v)) throw Error("shape: trivial leaf");
        if (degree(v) < 3) throw Error("shape: trivial vertex of degree < 3");
      }
    }
    if (base && (*base < 0 || *base >= num_vertices)) throw Error("shape: bad base vertex");
  }

  StarClass classify_star() const {
    int n = rank;
    int nleaves = static_cast<int>(leaves().size());
    StarClass cls = StarClass::Other;
    if (num_vertices == n + 1 && nleaves == n)
      cls = StarClass::ZeroStar;
    else if (num_vertices == n && nleaves == n - 1)
      cls = StarClass::FStar;
    if (cls != StarClass::Other && base) {
      // Pointed stars additionally require the base at the center.
      int center = -1;
      for (int v = 0; v < num_vertices; ++v)
        if (!is_leaf(v) || num_vertices <= 2) {
          center = v;
          break;
        }
      if (*base != center) cls = StarClass::Other;
    }
    return cls;
  }

  // Rank of the twist group at this vertex: each labeled vertex contributes
  // its degree minus one, except a labeled base vertex which contributes its
  // full degree.
  int twist_kernel_rank() const {
    int k = 0;
    for (int v : labeled_vertices()) k += degree(v) - (base && *base == v ? 0 : 1);
    return k;
  }

  std::vector<std::string> colors() const {
    std::vector<std::string> c(static_cast<std::size_t>(num_vertices));
    for (int v = 0; v < num_vertices; ++v) {
      c[static_cast<std::size_t>(v)] = labeled[static_cast<std::size_t>(v)] ? "L" : "T";
      if (base && *base == v) c[static_cast<std::size_t>(v)] += "*";
    }
    return c;
  }

  TreeCanon canonical() const { return detail::tree_canonical(num_vertices, edges, colors()); }
};

// All shapes up to isomorphism (base-preserving isomorphism in the pointed
// variant, the base ranging over all vertices). Trees are generated by
// growing a leaf at every attachment point and deduplicating canonically; a
// valid shape has at most n-2 trivial vertices, so at most 2n-2 vertices.
inline std::vector<GraphShape> enumerate_shapes(int n, bool pointed) {
  if (n < 2 || n > 6) throw Error("enumerate_shapes expects 2 <= n <= 6");
  int max_v = std::max(n, 2 * n - 2);
  std::vector<std::vector<std::pair<int, int>>> trees{{}};  // single vertex
  std::map<int, std::vector<std::vector<std::pair<int, int>>>> by_size;
  by_size[1] = trees;
  for (int size = 1; size < max_v; ++size) {
    std::set<std::string> seen;
    std::vector<std::vector<std::pair<int, int>>> grown;
    for (const auto& t : by_size[size])
      for (int attach = 0; attach < size; ++attach) {
        auto e = t;
        e.emplace_back(attach, size);
        auto canon = detail::tree_canonical(size + 1, e,
                                            std::vector<std::string>(static_cast<std::size_t>(size + 1)));
        if (seen.insert(canon.key).second) grown.push_back(std::move(e));
      }
    by_size[size + 1] = std::move(grown);
  }

  std::map<std::string, GraphShape> out;
  for (int nv = n; nv <= max_v; ++nv) {
    for (const auto& edges : by_size[nv]) {
      GraphShape proto;
      proto.rank = n;
      proto.num_vertices = nv;
      proto.edges = edges;
      proto.labeled.assign(static_cast<std::size_t>(nv), true);
      // Candidate trivial vertices must have degree >= 3.
      std::vector<int> internal;
      for (int v = 0; v < nv; ++v)
        if (proto.degree(v) >= 3) internal.push_back(v);
      int t = nv - n;
      if (t > static_cast<int>(internal.size())) continue;
      std::vector<int> pick(static_cast<std::size_t>(t));
      std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == t) {
          GraphShape s = proto;
          for (int v : pick) s.labeled[static_cast<std::size_t>(v)] = false;
          try {
            s.validate();
          } catch (const Error&) {
            return;
          }
          if (!pointed) {
            out.emplace(s.canonical().key, s);
          } else {
            for (int b = 0; b < nv; ++b) {
              GraphShape p = s;
              p.base = b;
              out.emplace(p.canonical().key, p);
            }
          }
          return;
        }
        for (int k = from; k < static_cast<int>(internal.size()); ++k) {
          pick[static_cast<std::size_t>(depth)] = internal[static_cast<std::size_t>(k)];
          choose(k + 1, depth + 1);
        }
      };
      choose(0, 0);
    }
  }
  std::vector<GraphShape> result;
  for (auto& [k, s] : out) result.push_back(std::move(s));
  return result;
}

// --- marked graphs and spine vertices ----------------------------------------

// Marked graph: involution labels on the labeled vertices. The labels always
// form a free-product basis because marked graphs are only created from the
// standard stars, the group action, collapses, and the explicit blow-up
// family; `basis` witnesses this (basis maps x_{slot[v]} to labels[v]).
struct MarkedGraph {
  GraphShape shape;
  std::map<int, Word> labels;
  std::map<int, int> slot;
  Automorphism basis = Automorphism::identity(1);

  void check_consistency() const {
    shape.validate();
    if (static_cast<int>(labels.size()) != shape.rank) throw Error("marked graph: wrong label count");
    for (const auto& [v, y] : labels) {
      if (!shape.labeled[static_cast<std::size_t>(v)]) throw Error("marked graph: label on trivial vertex");
      if (!y.is_involution()) throw NotInvolution("marked graph: label is not an involution");
      if (basis.image_of(slot.at(v)) != y) throw Error("marked graph: basis witness mismatch");
    }
  }
};

namespace detail {

inline std::string tuple_string(const std::vector<Word>& t) {
  std::string s;
  for (const Word& w : t) {
    s += w.str();
    s += '|';
  }
  return s;
}

// Orbit of the label tuple under edge twist moves: for an edge with a
// labeled, non-leaf origin, conjugate every label strictly on the far side
// by the origin's current label. Leaf origins are omitted (they reproduce a
// global conjugation). The orbit is finite: it is an image of the finite
// twist group at this vertex.
inline std::vector<std::vector<Word>> twist_orbit(const GraphShape& shape,
                                                  const std::vector<int>& lverts,
                                                  const std::vector<Word>& start) {
  auto adj = adjacency(shape.num_vertices, shape.edges);
  struct Move {
    std::size_t origin_pos;          // index into lverts
    std::vector<std::size_t> far;    // indices into lverts on the far side
  };
  std::vector<Move> moves;
  std::map<int, std::size_t> pos;
  for (std::size_t k = 0; k < lverts.size(); ++k) pos[lverts[k]] = k;
  for (auto [a, b] : shape.edges)
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!shape.labeled[static_cast<std::size_t>(u)] || shape.degree(u) <= 1) continue;
      Move m;
      m.origin_pos = pos.at(u);
      for (int w : component_without_edge(v, u, v, adj))
        if (shape.labeled[static_cast<std::size_t>(w)]) m.far.push_back(pos.at(w));
      moves.push_back(std::move(m));
    }

  std::map<std::string, std::vector<Word>> seen;
  seen.emplace(tuple_string(start), start);
  std::vector<std::vector<Word>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<Word>> next;
    for (const auto& tup : frontier)
      for (const Move& m : moves) {
        auto t2 = tup;
        const Word z = tup[m.origin_pos];
        for (std::size_t fi : m.far) t2[fi] = t2[fi].conjugated_by(z);
        auto key = tuple_string(t2);
        if (seen.emplace(key, t2).second) {
          if (seen.size() > (std::size_t{1} << 14))
            throw Error("twist orbit unexpectedly large");
          next.push_back(std::move(t2));
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<Word>> orbit;
  for (auto& [k, t] : seen) orbit.push_back(std::move(t));
  return orbit;
}

}  // namespace detail

// Spine vertex: equivalence class of marked graphs under tree isomorphism,
// simultaneous conjugation of all labels, and the edge twist moves above.
// The canonical key minimizes a colored-tree serialization over the twist
// orbit and, per tuple, over the <= 2n global conjugations that turn some
// label into a bare generator (two per labeled vertex, since the centralizer
// of a generator has order 2).
class SpineVertex {
 public:
  static SpineVertex from_marked(MarkedGraph m) {
    m.check_consistency();
    SpineVertex v;
    v.key_ = canonical_key(m);
    v.rep_ = std::move(m);
    return v;
  }

  const MarkedGraph& rep() const { return rep_; }
  const std::string& key() const { return key_; }
  int rank() const { return rep_.shape.rank; }
  StarClass star_class() const { return rep_.shape.classify_star(); }

  bool operator==(const SpineVertex& o) const { return key_ == o.key_; }
  bool operator<(const SpineVertex& o) const { return key_ < o.key_; }

  // Left action of an outer class: apply a representative automorphism to
  // every label. Well defined because inner representatives differ by a
  // simultaneous conjugation, which the canonical key quotients out.
  SpineVertex acted_by(const OuterClass& c) const {
    if (c.rank() != rank()) throw RankMismatch("act: rank mismatch");
    return acted_by(c.rep());
  }

  SpineVertex acted_by(const Automorphism& a) const {
    if (a.rank() != rank()) throw RankMismatch("act: rank mismatch");
    MarkedGraph m = rep_;
    for (auto& [v, y] : m.labels) y = a.apply(y);
    m.basis = a * m.basis;
    return from_marked(std::move(m));
  }

  bool stabilized_by(const OuterClass& c) const { return acted_by(c) == *this; }

  // Collapses a forest of edges; every forest component may contain at most
  // one labeled vertex (two nontrivial vertex groups must never merge).
  SpineVertex collapsed(const std::vector<std::pair<int, int>>& forest) const {
    const GraphShape& s = rep_.shape;
    auto has_edge = [&s](int a, int b) {
      for (auto [x, y] : s.edges)
        if ((x == a && y == b) || (x == b && y == a)) return true;
      return false;
    };
    std::vector<int> comp(static_cast<std::size_t>(s.num_vertices));
    for (int v = 0; v < s.num_vertices; ++v) comp[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
      while (comp[static_cast<std::size_t>(v)] != v) v = comp[static_cast<std::size_t>(v)];
      return v;
    };
    for (auto [a, b] : forest) {
      if (!has_edge(a, b)) throw IllegalCollapse("collapse: not an edge of the shape");
      comp[static_cast<std::size_t>(find(a))] = find(b);
    }
    std::map<int, int> fresh;
    for (int v = 0; v < s.num_vertices; ++v) {
      int r = find(v);
      if (!fresh.count(r)) fresh[r] = static_cast<int>(fresh.size());
    }
    MarkedGraph m;
    m.shape.rank = s.rank;
    m.shape.num_vertices = static_cast<int>(fresh.size());
    m.shape.labeled.assign(fresh.size(), false);
    for (auto [a, b] : s.edges) {
      int ra = fresh[find(a)], rb = fresh[find(b)];
      if (ra != rb) m.shape.edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    for (int v = 0; v < s.num_vertices; ++v) {
      if (!s.labeled[static_cast<std::size_t>(v)]) continue;
      int nv = fresh[find(v)];
      if (m.shape.labeled[static_cast<std::size_t>(nv)])
        throw IllegalCollapse("collapse: forest component merges two nontrivial vertex groups");
      m.shape.labeled[static_cast<std::size_t>(nv)] = true;
      m.labels.emplace(nv, rep_.labels.at(v));
      m.slot.emplace(nv, rep_.slot.at(v));
    }
    if (s.base) m.shape.base = fresh[find(*s.base)];
    m.basis = rep_.basis;
    try {
      m.shape.validate();
    } catch (const Error& e) {
      throw IllegalCollapse(std::string("collapse: result is not a valid shape (") + e.what() + ")");
    }
    return from_marked(std::move(m));
  }

  // The twist by z around the given oriented edge (origin, target): identity
  // on the origin side, conjugation by z on the far side, expressed through
  // the basis witness as a product of sigma generators.
  Automorphism twist(std::pair<int, int> edge, const Word& z) const {
    const GraphShape& s = rep_.shape;
    auto [u, v] = edge;
    bool found = false;
    for (auto [a, b] : s.edges) found = found || (a == u && b == v) || (a == v && b == u);
    if (!found) throw Error("twist: not an edge of the shape");
    if (!s.labeled[static_cast<std::size_t>(u)])
      throw OriginNotLabeled("twist: edge origin carries the trivial group");
    if (s.is_leaf(u)) throw OriginIsLeaf("twist: edge origin is a leaf");
    if (z.is_identity()) return Automorphism::identity(s.rank);
    if (!(z == rep_.labels.at(u)))
      throw Error("twist: z must lie in the origin's vertex group");
    auto adj = detail::adjacency(s.num_vertices, s.edges);
    Automorphism d0 = Automorphism::identity(s.rank);
    for (int w : detail::component_without_edge(v, u, v, adj))
      if (s.labeled[static_cast<std::size_t>(w)])
        d0 = d0 * Automorphism::sigma(rep_.slot.at(w), rep_.slot.at(u), s.rank);
    return rep_.basis * d0 * rep_.basis.inverse();
  }

 private:
  SpineVertex() = default;

  static std::string canonical_key(const MarkedGraph& m) {
    auto lverts = m.shape.labeled_vertices();
    std::vector<Word> tuple;
    for (int v : lverts) tuple.push_back(m.labels.at(v));
    std::optional<std::string> best;
    for (const auto& t : detail::twist_orbit(m.shape, lverts, tuple)) {
      std::vector<Word> gs;
      for (const Word& y : t) {
        auto [c, j] = y.involution_decompose();
        gs.push_back(c.inverse());
        gs.push_back(Word::generator(y.rank(), j) * c.inverse());
      }
      for (const Word& g : gs) {
        std::vector<std::string> colors(static_cast<std::size_t>(m.shape.num_vertices), "T");
        for (std::size_t k = 0; k < lverts.size(); ++k)
          colors[static_cast<std::size_t>(lverts[k])] = "[" + t[k].conjugated_by(g).str() + "]";
        if (m.shape.base)
          colors[static_cast<std::size_t>(*m.shape.base)] += "*";
        auto canon = detail::tree_canonical(m.shape.num_vertices, m.shape.edges, colors);
        if (!best || canon.key < *best) best = canon.key;
      }
    }
    return *best;
  }

  MarkedGraph rep_;
  std::string key_;
};

// The marked star with one trivial center and n leaves labeled x_1..x_n.
inline SpineVertex standard_zero_star(int n) {
  if (n < 3) throw Error("standard stars need n >= 3");
  MarkedGraph m;
  m.shape.rank = n;
  m.shape.num_vertices = n + 1;
  m.shape.labeled.assign(static_cast<std::size_t>(n + 1), true);
  m.shape.labeled[0] = false;
  for (int i = 1; i <= n; ++i) {
    m.shape.edges.emplace_back(0, i);
    m.labels.emplace(i, Word::generator(n, i));
    m.slot.emplace(i, i);
  }
  m.basis = Automorphism::identity(n);
  return SpineVertex::from_marked(std::move(m));
}

// The marked star with labeled center x_n and n-1 leaves labeled x_1..x_{n-1}.
inline SpineVertex standard_f_star(int n) {
  if (n < 3) throw Error("standard stars need n >= 3");
  MarkedGraph m;
  m.shape.rank = n;
  m.shape.num_vertices = n;
  m.shape.labeled.assign(static_cast<std::size_t>(n), true);
  m.labels.emplace(0, Word::generator(n, n));
  m.slot.emplace(0, n);
  for (int i = 1; i <= n - 1; ++i) {
    m.shape.edges.emplace_back(0, i);
    m.labels.emplace(i, Word::generator(n, i));
    m.slot.emplace(i, i);
  }
  m.basis = Automorphism::identity(n);
  return SpineVertex::from_marked(std::move(m));
}

// The zero-stars adjacent to the standard F-star: leaf labels
// x_n^{a_i} x_i x_n^{a_i} for a in {0,1}^{n-1} plus an x_n leaf, around a
// trivial center. Built as explicit blow-ups, deduplicated, and each one
// verified adjacent by collapsing the blown-up edge back onto the F-star.
inline std::vector<SpineVertex> zero_stars_adjacent_to_f_star(int n) {
  if (n < 3 || n > 6) throw Error("adjacency family expects 3 <= n <= 6");
  SpineVertex fstar = standard_f_star(n);
  std::map<std::string, SpineVertex> dedup;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (n - 1)); ++bits) {
    MarkedGraph m;
    m.shape.rank = n;
    m.shape.num_vertices = n + 1;
    m.shape.labeled.assign(static_cast<std::size_t>(n + 1), true);
    m.shape.labeled[0] = false;
    Automorphism mu = Automorphism::identity(n);
    for (int i = 1; i <= n; ++i) {
      m.shape.edges.emplace_back(0, i);
      m.slot.emplace(i, i);
      if (i < n && (bits >> (i - 1)) & 1) {
        m.labels.emplace(i, Word::generator(n, i).conjugated_by(Word::generator(n, n)));
        mu = mu * Automorphism::sigma(i, n, n);
      } else {
        m.labels.emplace(i, Word::generator(n, i));
      }
    }
    m.basis = mu;
    auto z = SpineVertex::from_marked(std::move(m));
    // Collapsing the edge to the x_n leaf must recover the standard F-star.
    if (!(z.collapsed({{0, n}}) == fstar))
      throw Error("blow-up candidate failed the collapse round-trip");
    dedup.emplace(z.key(), std::move(z));
  }
  std::vector<SpineVertex> out;
  for (auto& [k, v] : dedup) out.push_back(std::move(v));
  return out;
}

// --- DOT export ---------------------------------------------------------------

inline std::string shape_dot(const GraphShape& s, const std::string& name = "shape") {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (int v = 0; v < s.num_vertices; ++v) {
    os << "  v" << v << " [label=\"" << (s.labeled[static_cast<std::size_t>(v)] ? "F" : "1") << "\"";
    if (s.base && *s.base == v) os << " peripheries=2";
    os << "];\n";
  }
  for (auto [a, b] : s.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string marked_dot(const MarkedGraph& m, const std::string& name = "marked") {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (int v = 0; v < m.shape.num_vertices; ++v) {
    os << "  v" << v << " [label=\"";
    if (m.shape.labeled[static_cast<std::size_t>(v)])
      os << m.labels.at(v).str();
    else
      os << "1";
    os << "\"";
    if (m.shape.base && *m.shape.base == v) os << " peripheries=2";
    os << "];\n";
  }
  for (auto [a, b] : m.shape.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxrig
