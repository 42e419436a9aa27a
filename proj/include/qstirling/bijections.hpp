#pragma once

// The tree encodings of k-quasi-Stirling words.
//
//   phi   compartmented trees -> words: depth-first walk, each edge label
//         recorded on the way down and up, each compartment wall once.
//   psi   k-ary trees -> words: depth-first walk recording a vertex label on
//         every return to it.
//   canonical_plane  unordered trees -> plane trees realizing the maximal
//         descent statistic; forget_order is its inverse on that image.
//   to_cayley        unordered edge-labeled trees -> unrooted vertex-labeled
//         trees on n+1 vertices.
//
// phi transports (casc, cdes, emp) to (asc, des, plat); psi maps onto the
// same word family. Inverse maps validate their input and report an
// offending 1212/2121 position quadruple on failure.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qstirling/trees.hpp"
#include "qstirling/words.hpp"

namespace qstirling {

// ------------------------------------------------------------------- phi ----

namespace bij_detail {

inline void phi_walk(const CompNode& v, std::vector<int>& out) {
  for (std::size_t i = 0; i < v.parts.size(); ++i) {
    for (const CompNode& c : v.parts[i]) {
      out.push_back(c.label);
      phi_walk(c, out);
      out.push_back(c.label);
    }
    if (i + 1 < v.parts.size()) out.push_back(v.label);
  }
}

}  // namespace bij_detail

inline MultisetWord phi(const CompartmentedTree& t) {
  validate(t);
  std::vector<int> out;
  long n = edge_count(t);
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(t.k));
  bij_detail::phi_walk(t.root, out);
  return MultisetWord(std::move(out));
}

inline MultisetWord phi(const PlaneTree& t) { return phi(to_compartmented(t)); }

// --------------------------------------------------------------- phi_inv ----

namespace bij_detail {

// Order-preserving compression of a word onto 1..m plus the value table used
// to undo it.
inline std::pair<std::vector<int>, std::vector<int>> compress(const std::vector<int>& v) {
  std::vector<int> values = v;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> compressed;
  compressed.reserve(v.size());
  for (int x : v) {
    auto it = std::lower_bound(values.begin(), values.end(), x);
    compressed.push_back(static_cast<int>(it - values.begin()) + 1);
  }
  return {std::move(compressed), std::move(values)};
}

// Builds the tree of a validated quasi-Stirling word over 1..m; returns a
// root-style node (single compartment).
inline CompNode phi_inv_build(const std::vector<int>& v, int k) {
  CompNode root;
  root.parts.resize(1);
  if (v.empty()) return root;

  int a = v[0];
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == a) pos.push_back(i);

  CompNode child;
  child.label = a;
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<int> segment(v.begin() + static_cast<long>(pos[static_cast<std::size_t>(i)]) + 1,
                             v.begin() + static_cast<long>(pos[static_cast<std::size_t>(i) + 1]));
    auto [compressed, values] = compress(segment);
    CompNode sub = phi_inv_build(compressed, k);
    sub = tree_detail::map_labels(
        sub, [&](int x) { return values[static_cast<std::size_t>(x) - 1]; }, true);
    child.parts.push_back(std::move(sub.parts[0]));
  }

  std::vector<int> tail(v.begin() + static_cast<long>(pos.back()) + 1, v.end());
  auto [compressed, values] = compress(tail);
  CompNode rest = phi_inv_build(compressed, k);
  rest = tree_detail::map_labels(
      rest, [&](int x) { return values[static_cast<std::size_t>(x) - 1]; }, true);

  root.parts[0].push_back(std::move(child));
  for (auto& sibling : rest.parts[0]) root.parts[0].push_back(std::move(sibling));
  return root;
}

inline void require_quasi_stirling(const MultisetWord& w) {
  if (is_quasi_stirling(w)) return;
  auto quad = crossing_quadruple(w);
  if (!quad) throw std::logic_error("crossing detection disagrees with the nesting scan");
  throw invalid_word_error(*quad);
}

}  // namespace bij_detail

// Inverse of phi. The multiplicity k is read off the word; pass it explicitly
// only to disambiguate the empty word.
inline CompartmentedTree phi_inv(const MultisetWord& w, int k = 0) {
  if (w.size() == 0) {
    int ke = k >= 2 ? k : 2;
    CompartmentedTree t;
    t.k = ke;
    t.root.parts.resize(1);
    return t;
  }
  if (k != 0 && k != w.k())
    throw std::invalid_argument("phi_inv: k does not match the word multiplicity");
  if (w.k() < 2) throw std::invalid_argument("phi_inv: word multiplicity must be >= 2");
  bij_detail::require_quasi_stirling(w);
  CompartmentedTree t;
  t.k = w.k();
  t.root = bij_detail::phi_inv_build(w.entries(), w.k());
  validate(t);
  return t;
}

// ------------------------------------------------------------------- psi ----

namespace bij_detail {

inline void psi_walk(const KaryNode& v, std::vector<int>& out) {
  if (v.children.empty()) return;
  for (const KaryNode& c : v.children) {
    psi_walk(c, out);
    out.push_back(v.label);
  }
}

inline KaryNode psi_inv_build(const std::vector<int>& v, int k) {
  if (v.empty()) return KaryNode{};  // leaf
  int b = v.back();
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == b) pos.push_back(i);

  KaryNode node;
  node.label = b;
  std::size_t start = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    std::vector<int> segment(v.begin() + static_cast<long>(start),
                             v.begin() + static_cast<long>(pos[i]));
    auto [compressed, values] = compress(segment);
    KaryNode child = psi_inv_build(compressed, k);
    // decompress the labels of the child subtree
    std::function<void(KaryNode&)> relabel = [&](KaryNode& x) {
      if (!x.children.empty()) x.label = values[static_cast<std::size_t>(x.label) - 1];
      for (auto& c : x.children) relabel(c);
    };
    relabel(child);
    node.children.push_back(std::move(child));
    start = pos[i] + 1;
  }
  return node;
}

}  // namespace bij_detail

inline MultisetWord psi(const KaryTree& t) {
  validate(t);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(internal_count(t)) * static_cast<std::size_t>(t.k));
  bij_detail::psi_walk(t.root, out);
  return MultisetWord(std::move(out));
}

// Inverse of psi; k is read off the word (pass it for the empty word only).
inline KaryTree psi_inv(const MultisetWord& w, int k = 0) {
  if (w.size() == 0) {
    KaryTree t;
    t.k = k >= 1 ? k : 2;
    return t;
  }
  if (k != 0 && k != w.k())
    throw std::invalid_argument("psi_inv: k does not match the word multiplicity");
  bij_detail::require_quasi_stirling(w);
  KaryTree t;
  t.k = w.k();
  t.root = bij_detail::psi_inv_build(w.entries(), w.k());
  validate(t);
  return t;
}

// -------------------------------------------------- canonical plane order ----

namespace bij_detail {

inline PlaneNode canonical_plane_node(const UnorderedNode& v, int parent_label, bool is_root) {
  std::vector<const UnorderedNode*> kids;
  for (const auto& c : v.children) kids.push_back(&c);
  std::sort(kids.begin(), kids.end(),
            [](const UnorderedNode* a, const UnorderedNode* b) { return a->label < b->label; });

  std::vector<const UnorderedNode*> ordered;
  if (is_root) {
    // children by decreasing edge label
    ordered.assign(kids.rbegin(), kids.rend());
  } else {
    // a_1 < ... < a_i < parent < a_{i+1} < ... < a_d becomes
    // a_i, ..., a_1, a_d, ..., a_{i+1}
    std::size_t i = 0;
    while (i < kids.size() && kids[i]->label < parent_label) ++i;
    for (std::size_t j = i; j-- > 0;) ordered.push_back(kids[j]);
    for (std::size_t j = kids.size(); j-- > i;) ordered.push_back(kids[j]);
  }

  PlaneNode out;
  out.label = is_root ? 0 : v.label;
  for (const UnorderedNode* c : ordered)
    out.children.push_back(canonical_plane_node(*c, c->label, false));
  return out;
}

}  // namespace bij_detail

// Plane embedding with cdes equal to the edge count; inverse of forget_order
// on its image.
inline PlaneTree canonical_plane(const UnorderedTree& u) {
  return PlaneTree{bij_detail::canonical_plane_node(u.root, 0, true)};
}

namespace bij_detail {

inline UnorderedNode forget_node(const PlaneNode& v) {
  UnorderedNode out;
  out.label = v.label;
  for (const auto& c : v.children) out.children.push_back(forget_node(c));
  return out;
}

}  // namespace bij_detail

inline UnorderedTree forget_order(const PlaneTree& t) {
  UnorderedTree u;
  u.root = bij_detail::forget_node(t.root);
  return canonicalized(std::move(u));
}

// ---------------------------------------------------------------- cayley ----

// Unrooted tree on vertices 1..n+1: every edge label slides to its lower
// endpoint and the root receives n+1. Edges are returned as sorted pairs in
// lexicographic order.
using CayleyEdges = std::vector<std::pair<int, int>>;

namespace bij_detail {

inline void cayley_edges(const UnorderedNode& v, int vertex_label, CayleyEdges& out) {
  for (const auto& c : v.children) {
    out.emplace_back(std::min(vertex_label, c.label), std::max(vertex_label, c.label));
    cayley_edges(c, c.label, out);
  }
}

}  // namespace bij_detail

inline CayleyEdges to_cayley(const UnorderedTree& u) {
  CayleyEdges out;
  int root_label = static_cast<int>(edge_count(u)) + 1;
  bij_detail::cayley_edges(u.root, root_label, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------- derived word families ----

// Labels strictly increase away from the root.
inline bool is_increasing(const CompNode& v, bool is_root) {
  for (const auto& part : v.parts)
    for (const auto& c : part) {
      if (!is_root && c.label < v.label) return false;
      if (!is_increasing(c, false)) return false;
    }
  return true;
}

inline bool is_increasing(const CompartmentedTree& t) { return is_increasing(t.root, true); }

// Quasi-Stirling words generated through the tree encoding (primary route).
// With k = 1 there are no repeated letters, so every permutation qualifies
// and the tree encoding is not needed.
template <class Fn>
void for_each_k_quasi_stirling(int n, int k, const Config& cfg, Fn&& fn) {
  if (k == 1) {
    check_enumeration_size(n, 1, cfg);
    for_each_multiset_permutation(n, 1, [&](const std::vector<int>& w) { fn(MultisetWord(w)); });
    return;
  }
  for_each_compartmented_tree(n, k, cfg, [&](const CompartmentedTree& t) { fn(phi(t)); });
}

inline std::vector<MultisetWord> enumerate_k_quasi_stirling(int n, int k,
                                                            const Config& cfg = Config{}) {
  std::vector<MultisetWord> out;
  for_each_k_quasi_stirling(n, k, cfg, [&](MultisetWord w) { out.push_back(std::move(w)); });
  return out;
}

// The words with the maximal descent count n, one per unordered tree.
template <class Fn>
void for_each_max_descent_word(int n, const Config& cfg, Fn&& fn) {
  for_each_unordered_tree(n, cfg, [&](const UnorderedTree& u) {
    fn(phi(to_compartmented(canonical_plane(u))));
  });
}

inline std::vector<MultisetWord> max_descent_words(int n, const Config& cfg = Config{}) {
  std::vector<MultisetWord> out;
  for_each_max_descent_word(n, cfg, [&](MultisetWord w) { out.push_back(std::move(w)); });
  return out;
}

}  // namespace qstirling
