#pragma once

// Edge-labeled tree families and their descent statistics.
//
//   PlaneTree         children ordered, edges labeled 1..n
//   CompartmentedTree plane tree whose non-root vertices carry k-1 ordered
//                     compartments of children (k = 2 is a plane tree)
//   KaryTree          vertex-labeled, every vertex has 0 or k children
//   UnorderedTree     children unordered; stored sorted by subtree minimum
//
// Per-vertex descent contributions: a non-root vertex reads the labels of its
// incident edges and half-edges counterclockwise starting from the parent
// edge and counts cyclic descents; the root reads its child labels left to
// right and counts descents with the final position included (ascents with
// position 0 included for casc). The empty label sequence contributes 0.

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qstirling/config.hpp"
#include "qstirling/words.hpp"

namespace qstirling {

// ---------------------------------------------------------------- plane ----

struct PlaneNode {
  int label = 0;  // parent-edge label; unused at the root
  std::vector<PlaneNode> children;
  friend bool operator==(const PlaneNode&, const PlaneNode&) = default;
};

struct PlaneTree {
  PlaneNode root;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// ---------------------------------------------------- compartmented (k) ----

struct CompNode {
  int label = 0;
  std::vector<std::vector<CompNode>> parts;  // k-1 compartments below a non-root vertex
  friend bool operator==(const CompNode&, const CompNode&) = default;
};

struct CompartmentedTree {
  int k = 2;
  CompNode root;  // root carries exactly one compartment: its child list
  friend bool operator==(const CompartmentedTree&, const CompartmentedTree&) = default;
};

// ----------------------------------------------------------------- k-ary ----

struct KaryNode {
  int label = 0;  // 0 on leaves
  std::vector<KaryNode> children;  // empty or exactly k
  friend bool operator==(const KaryNode&, const KaryNode&) = default;
};

struct KaryTree {
  int k = 2;
  KaryNode root;
  friend bool operator==(const KaryTree&, const KaryTree&) = default;
};

// ------------------------------------------------------------- unordered ----

struct UnorderedNode {
  int label = 0;
  std::vector<UnorderedNode> children;
  friend bool operator==(const UnorderedNode&, const UnorderedNode&) = default;
};

struct UnorderedTree {
  UnorderedNode root;
  friend bool operator==(const UnorderedTree&, const UnorderedTree&) = default;
};

// ------------------------------------------------------------ validation ----

namespace tree_detail {

inline void validate_comp_node(const CompNode& v, int k, bool is_root) {
  std::size_t expected = is_root ? 1 : static_cast<std::size_t>(k - 1);
  if (v.parts.size() != expected)
    throw std::invalid_argument("CompartmentedTree: wrong compartment count");
  for (const auto& part : v.parts)
    for (const auto& c : part) validate_comp_node(c, k, false);
}

inline void validate_kary_node(const KaryNode& v, int k) {
  if (v.children.empty()) return;  // leaf
  if (static_cast<int>(v.children.size()) != k)
    throw std::invalid_argument("KaryTree: internal vertex must have k children");
  for (const auto& c : v.children) validate_kary_node(c, k);
}

}  // namespace tree_detail

inline void validate(const CompartmentedTree& t) {
  if (t.k < 2) throw std::invalid_argument("CompartmentedTree: k must be >= 2");
  tree_detail::validate_comp_node(t.root, t.k, true);
}

inline void validate(const KaryTree& t) {
  if (t.k < 1) throw std::invalid_argument("KaryTree: k must be >= 1");
  tree_detail::validate_kary_node(t.root, t.k);
}

// ------------------------------------------------------------ basic sizes ----

inline long edge_count(const PlaneNode& v) {
  long n = static_cast<long>(v.children.size());
  for (const auto& c : v.children) n += edge_count(c);
  return n;
}
inline long edge_count(const PlaneTree& t) { return edge_count(t.root); }

inline long edge_count(const CompNode& v) {
  long n = 0;
  for (const auto& part : v.parts) {
    n += static_cast<long>(part.size());
    for (const auto& c : part) n += edge_count(c);
  }
  return n;
}
inline long edge_count(const CompartmentedTree& t) { return edge_count(t.root); }

inline long internal_count(const KaryNode& v) {
  if (v.children.empty()) return 0;
  long n = 1;
  for (const auto& c : v.children) n += internal_count(c);
  return n;
}
inline long internal_count(const KaryTree& t) { return internal_count(t.root); }

inline long edge_count(const UnorderedNode& v) {
  long n = static_cast<long>(v.children.size());
  for (const auto& c : v.children) n += edge_count(c);
  return n;
}
inline long edge_count(const UnorderedTree& t) { return edge_count(t.root); }

// ------------------------------------------------------------- statistics ----

namespace tree_detail {

// Descents of a plain label sequence with the end-of-word convention.
inline long des_with_final(const std::vector<int>& labels) {
  if (labels.empty()) return 0;
  long d = 1;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i] > labels[i + 1]) ++d;
  return d;
}

inline long asc_with_initial(const std::vector<int>& labels) {
  if (labels.empty()) return 0;
  long a = 1;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i] < labels[i + 1]) ++a;
  return a;
}

inline std::vector<int> child_labels(const PlaneNode& v) {
  std::vector<int> out;
  out.reserve(v.children.size());
  for (const auto& c : v.children) out.push_back(c.label);
  return out;
}

// Counterclockwise incident-label sequence of a non-root vertex: the parent
// label once before each compartment (the k-2 compartment walls are
// half-edges carrying the parent label).
inline std::vector<int> incident_sequence(const CompNode& v) {
  std::vector<int> seq;
  for (const auto& part : v.parts) {
    seq.push_back(v.label);
    for (const auto& c : part) seq.push_back(c.label);
  }
  return seq;
}

template <class Fn>
void plane_cdes_walk(const PlaneNode& v, bool is_root, Fn&& per_vertex) {
  per_vertex(v, is_root);
  for (const auto& c : v.children) plane_cdes_walk(c, false, per_vertex);
}

template <class Fn>
void comp_walk(const CompNode& v, bool is_root, Fn&& per_vertex) {
  per_vertex(v, is_root);
  for (const auto& part : v.parts)
    for (const auto& c : part) comp_walk(c, false, per_vertex);
}

}  // namespace tree_detail

inline long cdes_tree(const PlaneTree& t) {
  long total = 0;
  tree_detail::plane_cdes_walk(t.root, true, [&](const PlaneNode& v, bool is_root) {
    if (is_root) {
      total += tree_detail::des_with_final(tree_detail::child_labels(v));
    } else {
      std::vector<int> seq{v.label};
      for (const auto& c : v.children) seq.push_back(c.label);
      total += cyclic_descents(seq);
    }
  });
  return total;
}

inline long casc_tree(const PlaneTree& t) {
  long total = 0;
  tree_detail::plane_cdes_walk(t.root, true, [&](const PlaneNode& v, bool is_root) {
    if (is_root) {
      total += tree_detail::asc_with_initial(tree_detail::child_labels(v));
    } else {
      std::vector<int> seq{v.label};
      for (const auto& c : v.children) seq.push_back(c.label);
      total += cyclic_ascents(seq);
    }
  });
  return total;
}

inline long cdes_tree(const CompartmentedTree& t) {
  long total = 0;
  tree_detail::comp_walk(t.root, true, [&](const CompNode& v, bool is_root) {
    if (is_root) {
      std::vector<int> labels;
      for (const auto& c : v.parts[0]) labels.push_back(c.label);
      total += tree_detail::des_with_final(labels);
    } else {
      total += cyclic_descents(tree_detail::incident_sequence(v));
    }
  });
  return total;
}

inline long casc_tree(const CompartmentedTree& t) {
  long total = 0;
  tree_detail::comp_walk(t.root, true, [&](const CompNode& v, bool is_root) {
    if (is_root) {
      std::vector<int> labels;
      for (const auto& c : v.parts[0]) labels.push_back(c.label);
      total += tree_detail::asc_with_initial(labels);
    } else {
      total += cyclic_ascents(tree_detail::incident_sequence(v));
    }
  });
  return total;
}

inline long leaves(const PlaneNode& v) {
  if (v.children.empty()) return 1;
  long n = 0;
  for (const auto& c : v.children) n += leaves(c);
  return n;
}
inline long leaves(const PlaneTree& t) { return leaves(t.root); }

// Empty compartments across non-root vertices.
inline long empty_compartments(const CompartmentedTree& t) {
  long total = 0;
  tree_detail::comp_walk(t.root, true, [&](const CompNode& v, bool is_root) {
    if (is_root) return;
    for (const auto& part : v.parts)
      if (part.empty()) ++total;
  });
  return total;
}

// ------------------------------------------------------------ conversions ----

inline CompNode to_comp_node(const PlaneNode& v) {
  CompNode c;
  c.label = v.label;
  c.parts.resize(1);
  for (const auto& ch : v.children) c.parts[0].push_back(to_comp_node(ch));
  return c;
}

inline CompartmentedTree to_compartmented(const PlaneTree& t) {
  return CompartmentedTree{2, to_comp_node(t.root)};
}

inline PlaneNode to_plane_node(const CompNode& v) {
  PlaneNode p;
  p.label = v.label;
  for (const auto& part : v.parts)
    for (const auto& c : part) p.children.push_back(to_plane_node(c));
  return p;
}

inline PlaneTree to_plane(const CompartmentedTree& t) {
  if (t.k != 2) throw std::invalid_argument("to_plane: tree has k != 2");
  return PlaneTree{to_plane_node(t.root)};
}

// ------------------------------------------------------------ label utils ----

namespace tree_detail {

inline void collect_labels(const CompNode& v, std::vector<int>& out, bool is_root) {
  if (!is_root) out.push_back(v.label);
  for (const auto& part : v.parts)
    for (const auto& c : part) collect_labels(c, out, false);
}

template <class MapFn>
CompNode map_labels(const CompNode& v, MapFn&& f, bool is_root) {
  CompNode r;
  r.label = is_root ? 0 : f(v.label);
  r.parts.resize(v.parts.size());
  for (std::size_t i = 0; i < v.parts.size(); ++i)
    for (const auto& c : v.parts[i]) r.parts[i].push_back(map_labels(c, f, false));
  return r;
}

template <class MapFn>
PlaneNode map_labels(const PlaneNode& v, MapFn&& f, bool is_root) {
  PlaneNode r;
  r.label = is_root ? 0 : f(v.label);
  for (const auto& c : v.children) r.children.push_back(map_labels(c, f, false));
  return r;
}

}  // namespace tree_detail

// Shift every label by i positions around the cycle 1..n. Requires a
// single-child root; the cyclic per-vertex statistics and the trivial root
// contribution are unchanged by this relabeling.
inline CompartmentedTree rotate_labels(const CompartmentedTree& t, long i) {
  validate(t);
  if (t.root.parts[0].size() != 1)
    throw std::invalid_argument("rotate_labels: root must have exactly one child");
  long n = edge_count(t);
  if (n == 0) return t;
  long shift = ((i % n) + n) % n;
  CompartmentedTree r = t;
  r.root = tree_detail::map_labels(
      t.root, [&](int x) { return static_cast<int>((x - 1 + shift) % n) + 1; }, true);
  return r;
}

inline PlaneTree rotate_labels(const PlaneTree& t, long i) {
  if (t.root.children.size() != 1)
    throw std::invalid_argument("rotate_labels: root must have exactly one child");
  long n = edge_count(t);
  if (n == 0) return t;
  long shift = ((i % n) + n) % n;
  PlaneTree r;
  r.root = tree_detail::map_labels(
      t.root, [&](int x) { return static_cast<int>((x - 1 + shift) % n) + 1; }, true);
  return r;
}

/// Join k-1 trees under a fresh root: the roots of the parts fuse into one
// vertex whose compartments are the parts' child lists, and a new top edge
// labeled m+1 is attached. The parts must carry disjoint labels covering
// 1..m. Adds exactly one cdes and one casc; emp grows by the number of empty
// parts.
inline CompartmentedTree attach_root(const std::vector<CompartmentedTree>& parts) {
  if (parts.empty()) throw std::invalid_argument("attach_root: need k-1 >= 1 parts");
  int k = static_cast<int>(parts.size()) + 1;
  long m = 0;
  std::vector<int> all_labels;
  for (const auto& p : parts) {
    validate(p);
    if (p.k != k)
      throw std::invalid_argument("attach_root: parts must have matching k");
    m += edge_count(p);
    tree_detail::collect_labels(p.root, all_labels, true);
  }
  std::sort(all_labels.begin(), all_labels.end());
  for (long v = 0; v < m; ++v)
    if (all_labels[static_cast<std::size_t>(v)] != v + 1)
      throw std::invalid_argument("attach_root: part labels must partition 1..m");

  CompNode fused;
  fused.label = static_cast<int>(m + 1);
  for (const auto& p : parts) fused.parts.push_back(p.root.parts[0]);

  CompartmentedTree out;
  out.k = k;
  out.root.parts.resize(1);
  out.root.parts[0].push_back(std::move(fused));
  return out;
}

// ------------------------------------------------------------- enumerators ----

namespace tree_detail {

// Plane-tree shapes as children-forests with a given edge total.
inline std::vector<std::vector<PlaneNode>> plane_forests(int n) {
  std::vector<std::vector<std::vector<PlaneNode>>> memo(static_cast<std::size_t>(n) + 1);
  memo[0] = {{}};
  for (int total = 1; total <= n; ++total) {
    std::vector<std::vector<PlaneNode>> out;
    for (int c = 1; c <= total; ++c) {
      for (const auto& below : memo[static_cast<std::size_t>(c - 1)]) {
        PlaneNode first;
        first.children = below;
        for (const auto& rest : memo[static_cast<std::size_t>(total - c)]) {
          std::vector<PlaneNode> f;
          f.reserve(rest.size() + 1);
          f.push_back(first);
          f.insert(f.end(), rest.begin(), rest.end());
          out.push_back(std::move(f));
        }
      }
    }
    memo[static_cast<std::size_t>(total)] = std::move(out);
  }
  return memo[static_cast<std::size_t>(n)];
}

inline void assign_plane_labels(PlaneNode& v, const std::vector<int>& perm, std::size_t& idx,
                                bool is_root) {
  if (!is_root) v.label = perm[idx++];
  for (auto& c : v.children) assign_plane_labels(c, perm, idx, false);
}

// Compartmented shapes. node_bodies(m, k) are the (k-1)-tuples of forests
// with m edges in total; comp_forests are child lists.
inline std::vector<std::vector<CompNode>> comp_forests(int n, int k);

inline std::vector<std::vector<std::vector<CompNode>>> comp_bodies(int m, int parts, int k) {
  // list of `parts`-tuples of forests with m edges total
  if (parts == 0)
    return m == 0 ? std::vector<std::vector<std::vector<CompNode>>>{{}}
                  : std::vector<std::vector<std::vector<CompNode>>>{};
  std::vector<std::vector<std::vector<CompNode>>> out;
  for (int e = 0; e <= m; ++e) {
    auto firsts = comp_forests(e, k);
    if (firsts.empty()) continue;
    auto rests = comp_bodies(m - e, parts - 1, k);
    for (const auto& f : firsts)
      for (const auto& r : rests) {
        std::vector<std::vector<CompNode>> tuple;
        tuple.reserve(static_cast<std::size_t>(parts));
        tuple.push_back(f);
        tuple.insert(tuple.end(), r.begin(), r.end());
        out.push_back(std::move(tuple));
      }
  }
  return out;
}

inline std::vector<std::vector<CompNode>> comp_forests(int n, int k) {
  if (n == 0) return {{}};
  std::vector<std::vector<CompNode>> out;
  for (int c = 1; c <= n; ++c) {
    auto bodies = comp_bodies(c - 1, k - 1, k);
    auto rests = comp_forests(n - c, k);
    for (const auto& body : bodies) {
      CompNode first;
      first.parts = body;
      for (const auto& rest : rests) {
        std::vector<CompNode> f;
        f.reserve(rest.size() + 1);
        f.push_back(first);
        f.insert(f.end(), rest.begin(), rest.end());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

inline void assign_comp_labels(CompNode& v, const std::vector<int>& perm, std::size_t& idx,
                               bool is_root) {
  if (!is_root) v.label = perm[idx++];
  for (auto& part : v.parts)
    for (auto& c : part) assign_comp_labels(c, perm, idx, false);
}

inline std::vector<KaryNode> kary_shapes(int n, int k) {
  if (n == 0) return {KaryNode{}};
  // root is internal; distribute n-1 internal vertices over k ordered children
  std::vector<KaryNode> out;
  std::vector<std::vector<KaryNode>> child_choices;
  std::function<void(int, int, std::vector<KaryNode>&)> rec = [&](int slot, int remaining,
                                                                  std::vector<KaryNode>& acc) {
    if (slot == k) {
      if (remaining == 0) {
        KaryNode v;
        v.label = -1;  // internal marker, labels assigned later
        v.children = acc;
        out.push_back(v);
      }
      return;
    }
    int tail_slots = k - slot - 1;
    for (int take = 0; take <= remaining; ++take) {
      if (tail_slots == 0 && take != remaining) continue;
      for (const auto& s : kary_shapes(take, k)) {
        acc.push_back(s);
        rec(slot + 1, remaining - take, acc);
        acc.pop_back();
      }
    }
  };
  std::vector<KaryNode> acc;
  rec(0, n - 1, acc);
  return out;
}

inline void assign_kary_labels(KaryNode& v, const std::vector<int>& perm, std::size_t& idx) {
  if (v.children.empty()) {
    v.label = 0;
    return;
  }
  v.label = perm[idx++];
  for (auto& c : v.children) assign_kary_labels(c, perm, idx);
}

}  // namespace tree_detail

/// All plane trees with edges labeled 1..n, no duplicates: every tree is one
// shape plus one permutation written along the preorder edge slots.
template <class Fn>
void for_each_plane_tree(int n, const Config& cfg, Fn&& fn) {
  check_enumeration_size(n, 2, cfg);
  auto forests = tree_detail::plane_forests(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& forest : forests) {
    std::vector<int> p = perm;
    do {
      PlaneTree t;
      t.root.children = forest;
      std::size_t idx = 0;
      tree_detail::assign_plane_labels(t.root, p, idx, true);
      fn(t);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

template <class Fn>
void for_each_compartmented_tree(int n, int k, const Config& cfg, Fn&& fn) {
  if (k < 2) throw std::invalid_argument("for_each_compartmented_tree: k must be >= 2");
  check_enumeration_size(n, k, cfg);
  auto forests = tree_detail::comp_forests(n, k);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& forest : forests) {
    std::vector<int> p = perm;
    do {
      CompartmentedTree t;
      t.k = k;
      t.root.parts.assign(1, forest);
      std::size_t idx = 0;
      tree_detail::assign_comp_labels(t.root, p, idx, true);
      fn(t);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

template <class Fn>
void for_each_kary_tree(int n, int k, const Config& cfg, Fn&& fn) {
  if (k < 1) throw std::invalid_argument("for_each_kary_tree: k must be >= 1");
  check_enumeration_size(n, k, cfg);
  auto shapes = tree_detail::kary_shapes(n, k);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& shape : shapes) {
    std::vector<int> p = perm;
    do {
      KaryTree t;
      t.k = k;
      t.root = shape;
      std::size_t idx = 0;
      tree_detail::assign_kary_labels(t.root, p, idx);
      fn(t);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

inline std::vector<PlaneTree> enumerate_plane_trees(int n, const Config& cfg = Config{}) {
  std::vector<PlaneTree> out;
  for_each_plane_tree(n, cfg, [&](const PlaneTree& t) { out.push_back(t); });
  return out;
}

inline std::vector<CompartmentedTree> enumerate_compartmented(int n, int k,
                                                              const Config& cfg = Config{}) {
  std::vector<CompartmentedTree> out;
  for_each_compartmented_tree(n, k, cfg, [&](const CompartmentedTree& t) { out.push_back(t); });
  return out;
}

inline std::vector<KaryTree> enumerate_kary(int n, int k, const Config& cfg = Config{}) {
  std::vector<KaryTree> out;
  for_each_kary_tree(n, k, cfg, [&](const KaryTree& t) { out.push_back(t); });
  return out;
}

// ----------------------------------------------------- unordered trees ----

namespace tree_detail {

inline int min_subtree_label(const UnorderedNode& v) {
  int m = v.label;
  for (const auto& c : v.children) m = std::min(m, min_subtree_label(c));
  return m;
}

inline void canonicalize_node(UnorderedNode& v) {
  for (auto& c : v.children) canonicalize_node(c);
  std::stable_sort(v.children.begin(), v.children.end(),
                   [](const UnorderedNode& a, const UnorderedNode& b) {
                     return min_subtree_label(a) < min_subtree_label(b);
                   });
}

// All forests (canonically ordered child lists) on a sorted label set.
inline std::vector<std::vector<UnorderedNode>> unordered_forests(const std::vector<int>& labels);

inline std::vector<UnorderedNode> unordered_trees_on(const std::vector<int>& labels) {
  std::vector<UnorderedNode> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (j != i) rest.push_back(labels[j]);
    for (const auto& forest : unordered_forests(rest)) {
      UnorderedNode v;
      v.label = labels[i];
      v.children = forest;
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline std::vector<std::vector<UnorderedNode>> unordered_forests(const std::vector<int>& labels) {
  if (labels.empty()) return {{}};
  std::vector<std::vector<UnorderedNode>> out;
  // the subtree containing the smallest label comes first; enumerate its
  // label set as {labels[0]} plus any subset of the rest
  std::size_t m = labels.size() - 1;
  for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << m); ++mask) {
    std::vector<int> first_set{labels[0]};
    std::vector<int> rest_set;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (static_cast<std::size_t>(1) << b))
        first_set.push_back(labels[b + 1]);
      else
        rest_set.push_back(labels[b + 1]);
    }
    for (const auto& first : unordered_trees_on(first_set))
      for (const auto& rest : unordered_forests(rest_set)) {
        std::vector<UnorderedNode> f;
        f.reserve(rest.size() + 1);
        f.push_back(first);
        f.insert(f.end(), rest.begin(), rest.end());
        out.push_back(std::move(f));
      }
  }
  return out;
}

}  // namespace tree_detail

inline UnorderedTree canonicalized(UnorderedTree t) {
  tree_detail::canonicalize_node(t.root);
  return t;
}

// Direct duplicate-free generation; children are produced in canonical order
// (increasing subtree minimum) by construction.
template <class Fn>
void for_each_unordered_tree(int n, const Config& cfg, Fn&& fn) {
  check_enumeration_size(n, 2, cfg);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  for (const auto& forest : tree_detail::unordered_forests(labels)) {
    UnorderedTree t;
    t.root.children = forest;
    fn(t);
  }
}

inline std::vector<UnorderedTree> enumerate_unordered_trees(int n, const Config& cfg = Config{}) {
  std::vector<UnorderedTree> out;
  for_each_unordered_tree(n, cfg, [&](const UnorderedTree& t) { out.push_back(t); });
  return out;
}

}  // namespace qstirling
