#pragma once

// Words over the multiset {1^k, ..., n^k} and their statistics. Conventions:
// position 0 always counts as an ascent and the final position always counts
// as a descent, so asc + des + plat = kn + 1 for a nonempty word; the empty
// word has all three statistics zero.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qstirling/config.hpp"

namespace qstirling {

struct StatTriple {
  long asc = 0;
  long des = 0;
  long plat = 0;
  friend bool operator==(const StatTriple&, const StatTriple&) = default;
};

// Validated word: every value 1..n occurs exactly k times. The empty word is
// allowed (n = 0) and carries k = 1 by convention.
class MultisetWord {
 public:
  MultisetWord() = default;

  explicit MultisetWord(std::vector<int> entries) : w_(std::move(entries)) {
    if (w_.empty()) {
      n_ = 0;
      k_ = 1;
      return;
    }
    int n = *std::max_element(w_.begin(), w_.end());
    std::vector<long> count(static_cast<std::size_t>(n) + 1, 0);
    for (int x : w_) {
      if (x < 1) throw std::invalid_argument("MultisetWord: entries must be positive");
      ++count[static_cast<std::size_t>(x)];
    }
    long k = count[1];
    for (int v = 1; v <= n; ++v)
      if (count[static_cast<std::size_t>(v)] != k)
        throw std::invalid_argument("MultisetWord: value " + std::to_string(v) +
                                    " occurs " + std::to_string(count[static_cast<std::size_t>(v)]) +
                                    " times, expected " + std::to_string(k));
    n_ = n;
    k_ = static_cast<int>(k);
  }

  MultisetWord(std::vector<int> entries, int n, int k) : MultisetWord(std::move(entries)) {
    if (size() == 0) {
      if (n != 0) throw std::invalid_argument("MultisetWord: empty word but n > 0");
      return;
    }
    if (n_ != n || k_ != k)
      throw std::invalid_argument("MultisetWord: entries do not form {1^k..n^k} for the given n, k");
  }

  const std::vector<int>& entries() const { return w_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return w_.size(); }

  friend bool operator==(const MultisetWord& a, const MultisetWord& b) { return a.w_ == b.w_; }
  friend bool operator!=(const MultisetWord& a, const MultisetWord& b) { return !(a == b); }
  friend bool operator<(const MultisetWord& a, const MultisetWord& b) { return a.w_ < b.w_; }

 private:
  std::vector<int> w_;
  int n_ = 0;
  int k_ = 1;
};

inline StatTriple statistics(const std::vector<int>& w) {
  StatTriple s;
  if (w.empty()) return s;
  s.asc = 1;  // position 0
  s.des = 1;  // final position
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1])
      ++s.asc;
    else if (w[i] > w[i + 1])
      ++s.des;
    else
      ++s.plat;
  }
  return s;
}

inline StatTriple statistics(const MultisetWord& w) { return statistics(w.entries()); }

inline long ascents(const std::vector<int>& w) { return statistics(w).asc; }
inline long descents(const std::vector<int>& w) { return statistics(w).des; }
inline long plateaus(const std::vector<int>& w) { return statistics(w).plat; }

// Descents of the cyclic word w_1 ... w_r w_1.
inline long cyclic_descents(const std::vector<int>& w) {
  if (w.empty()) throw std::invalid_argument("cyclic_descents: empty word");
  long d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > w[(i + 1) % w.size()]) ++d;
  return d;
}

inline long cyclic_ascents(const std::vector<int>& w) {
  if (w.empty()) throw std::invalid_argument("cyclic_ascents: empty word");
  long a = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < w[(i + 1) % w.size()]) ++a;
  return a;
}

// Classical pattern with repeated letters: values must cover 1..m.
class Pattern {
 public:
  explicit Pattern(std::vector<int> letters) : p_(std::move(letters)) {
    if (p_.empty()) throw std::invalid_argument("Pattern: empty");
    int m = *std::max_element(p_.begin(), p_.end());
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int x : p_) {
      if (x < 1) throw std::invalid_argument("Pattern: letters must be positive");
      seen[static_cast<std::size_t>(x)] = true;
    }
    for (int v = 1; v <= m; ++v)
      if (!seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Pattern: letters must cover 1..m");
  }

  const std::vector<int>& letters() const { return p_; }

 private:
  std::vector<int> p_;
};

// Occurrence semantics: equal pattern letters match equal word entries,
// distinct pattern letters match strictly ordered entries.
inline bool contains_pattern(const std::vector<int>& word, const Pattern& pattern) {
  const std::vector<int>& p = pattern.letters();
  std::size_t m = p.size();
  // match[letter] = word value assigned to that pattern letter, 0 if none yet
  int maxletter = *std::max_element(p.begin(), p.end());
  std::vector<int> assigned(static_cast<std::size_t>(maxletter) + 1, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t wi, std::size_t pi) {
    if (pi == m) return true;
    if (word.size() - wi < m - pi) return false;
    int pl = p[pi];
    for (std::size_t j = wi; j < word.size(); ++j) {
      int x = word[j];
      bool ok = true;
      for (int other = 1; other <= maxletter && ok; ++other) {
        int v = assigned[static_cast<std::size_t>(other)];
        if (v == 0) continue;
        if (other == pl && x != v) ok = false;
        if (other < pl && !(v < x)) ok = false;
        if (other > pl && !(v > x)) ok = false;
      }
      if (!ok) continue;
      int saved = assigned[static_cast<std::size_t>(pl)];
      assigned[static_cast<std::size_t>(pl)] = x;
      if (rec(j + 1, pi + 1)) return true;
      assigned[static_cast<std::size_t>(pl)] = saved;
    }
    return false;
  };
  return rec(0, 0);
}

inline bool contains_pattern(const MultisetWord& word, const Pattern& pattern) {
  return contains_pattern(word.entries(), pattern);
}

// Fast scan used by generators and validation: a word avoids 1212 and 2121
// exactly when the occurrence blocks of its values nest like brackets.
inline bool is_quasi_stirling(const MultisetWord& w) {
  const auto& v = w.entries();
  int k = w.k();
  std::vector<int> open_count(static_cast<std::size_t>(w.n()) + 1, 0);
  std::vector<int> stack;
  for (int x : v) {
    std::size_t xi = static_cast<std::size_t>(x);
    if (open_count[xi] == 0) {
      open_count[xi] = 1;
      stack.push_back(x);
    } else if (!stack.empty() && stack.back() == x) {
      if (++open_count[xi] == k) stack.pop_back();
    } else {
      return false;  // x resurfaces while another block is open
    }
  }
  return true;
}

// 212-avoidance: everything between the first and last copy of a value must
// be at least that value.
inline bool is_k_stirling(const MultisetWord& w) {
  const auto& v = w.entries();
  std::vector<int> first(static_cast<std::size_t>(w.n()) + 1, -1);
  std::vector<int> last(static_cast<std::size_t>(w.n()) + 1, -1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t xi = static_cast<std::size_t>(v[i]);
    if (first[xi] < 0) first[xi] = static_cast<int>(i);
    last[xi] = static_cast<int>(i);
  }
  for (int a = 1; a <= w.n(); ++a) {
    for (int i = first[static_cast<std::size_t>(a)]; i <= last[static_cast<std::size_t>(a)]; ++i)
      if (v[static_cast<std::size_t>(i)] < a) return false;
  }
  return true;
}

// First 1212 or 2121 occurrence as 1-based positions, if any.
inline std::optional<std::array<std::size_t, 4>> crossing_quadruple(const MultisetWord& w) {
  const auto& v = w.entries();
  // positions of each value
  std::map<int, std::vector<std::size_t>> occ;
  for (std::size_t i = 0; i < v.size(); ++i) occ[v[i]].push_back(i);
  std::optional<std::array<std::size_t, 4>> best;
  for (const auto& [a, pa] : occ) {
    for (const auto& [b, pb] : occ) {
      if (a == b) continue;
      // look for a..b..a..b in positions
      for (std::size_t i : pa) {
        for (std::size_t j : pb) {
          if (j <= i) continue;
          auto it_a2 = std::upper_bound(pa.begin(), pa.end(), j);
          if (it_a2 == pa.end()) continue;
          std::size_t k2 = *it_a2;
          auto it_b2 = std::upper_bound(pb.begin(), pb.end(), k2);
          if (it_b2 == pb.end()) continue;
          std::array<std::size_t, 4> quad{i + 1, j + 1, k2 + 1, *it_b2 + 1};
          if (!best || quad < *best) best = quad;
        }
      }
    }
  }
  return best;
}

// Thrown when a word fails the 1212/2121 avoidance required by the tree
// decompositions; carries the positions of one offending occurrence.
struct invalid_word_error : std::runtime_error {
  std::array<std::size_t, 4> quadruple;
  explicit invalid_word_error(const std::array<std::size_t, 4>& q)
      : std::runtime_error("word contains a 1212 or 2121 occurrence at positions (" +
                           std::to_string(q[0]) + ", " + std::to_string(q[1]) + ", " +
                           std::to_string(q[2]) + ", " + std::to_string(q[3]) + ")"),
        quadruple(q) {}
};

// All permutations of {1^k..n^k} in lexicographic order.
template <class Fn>
void for_each_multiset_permutation(int n, int k, Fn&& fn) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int v = 1; v <= n; ++v)
    for (int j = 0; j < k; ++j) w.push_back(v);
  if (w.empty()) {
    fn(w);
    return;
  }
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

// Filter route for the quasi-Stirling family; retained as a slow oracle and
// guarded to at most 12 letters regardless of the configured limit.
inline std::vector<MultisetWord> enumerate_k_quasi_stirling_filter(int n, int k,
                                                                   const Config& cfg = Config{}) {
  check_enumeration_size(n, k, cfg);
  if (static_cast<long>(n) * k > 12)
    throw enumeration_limit_error("filter enumeration is limited to 12 letters");
  std::vector<MultisetWord> out;
  for_each_multiset_permutation(n, k, [&](const std::vector<int>& w) {
    MultisetWord word(w);
    if (is_quasi_stirling(word)) out.push_back(std::move(word));
  });
  return out;
}

// k-Stirling words by repeated insertion of the block m^k into every gap of
// each word on m-1 values; every word arises exactly once because the block
// of the largest value is contiguous and its position determines the parent.
template <class Fn>
void for_each_k_stirling(int n, int k, const Config& cfg, Fn&& fn) {
  check_enumeration_size(n, k, cfg);
  std::vector<std::vector<int>> level{{}};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<int>> next;
    next.reserve(level.size() * (static_cast<std::size_t>(k) * (m - 1) + 1));
    for (const auto& w : level) {
      for (std::size_t gap = 0; gap <= w.size(); ++gap) {
        std::vector<int> nw;
        nw.reserve(w.size() + static_cast<std::size_t>(k));
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(gap));
        nw.insert(nw.end(), static_cast<std::size_t>(k), m);
        nw.insert(nw.end(), w.begin() + static_cast<long>(gap), w.end());
        next.push_back(std::move(nw));
      }
    }
    level = std::move(next);
  }
  for (auto& w : level) fn(MultisetWord(std::move(w)));
}

inline std::vector<MultisetWord> enumerate_k_stirling(int n, int k, const Config& cfg = Config{}) {
  std::vector<MultisetWord> out;
  for_each_k_stirling(n, k, cfg, [&](MultisetWord w) { out.push_back(std::move(w)); });
  return out;
}

}  // namespace qstirling
