#pragma once

// Text round-trips for words, polynomials and trees.
//
//   word            4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3   (empty word: empty string)
//   polynomial      1*t + 13*t^2 + 16*t^3             (constant term bare)
//   trivariate      1*q^2*t + 1*q*t^2                 (ascending q,t,u term order)
//   plane tree      (4(1),6,3(7,5(8),2))              (root is the outer list)
//   compartmented   (6(2|),3(5|7(|4),1))              (| separates the k-1
//                                                      compartments; leaves bare)
//   k-ary tree      4(3(2(.,.),7(.,.)),1(.,.))        (. is a leaf)
//   unordered tree  plane syntax, canonical child order
//   edge list       1-4,2-3,3-5
//
// Parsers are strict recursive descent; any trailing garbage is an error.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstirling/bijections.hpp"
#include "qstirling/mpoly.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/trees.hpp"
#include "qstirling/words.hpp"

namespace qstirling {

// ------------------------------------------------------------------ words ----

inline std::string format_word(const MultisetWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.entries().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w.entries()[i]);
  }
  return out;
}

inline MultisetWord parse_word(const std::string& text) {
  std::vector<int> entries;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("parse_word: expected a number at position " +
                                                std::to_string(i));
    entries.push_back(std::stoi(text.substr(start, i - start)));
    skip_space();
    if (i < text.size()) {
      if (text[i] != ',')
        throw std::invalid_argument("parse_word: expected ',' at position " + std::to_string(i));
      ++i;
      skip_space();
    }
  }
  return MultisetWord(std::move(entries));
}

// ------------------------------------------------------------ polynomials ----

namespace textio_detail {

inline void append_signed_term(std::string& out, const Rat& c, const std::string& monomial) {
  Rat mag = c < 0 ? Rat(-c) : c;
  if (out.empty()) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  out += to_string(mag);
  if (!monomial.empty()) out += "*" + monomial;
}

}  // namespace textio_detail

inline std::string format_poly(const Poly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    const Rat& c = p.coeffs()[d];
    if (c == 0) continue;
    std::string mono;
    if (d == 1) mono = var;
    if (d > 1) mono = var + "^" + std::to_string(d);
    textio_detail::append_signed_term(out, c, mono);
  }
  return out;
}

inline std::string format_mpoly(const MPoly& p) {
  if (p.is_zero()) return "0";
  static const char* names[3] = {"q", "t", "u"};
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    textio_detail::append_signed_term(out, c, mono);
  }
  return out;
}

// ------------------------------------------------------------- tree text ----

namespace textio_detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at(char c) {
    skip_space();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument(std::string("tree parse: expected '") + c + "' at position " +
                                  std::to_string(pos));
    ++pos;
  }
  bool accept(char c) {
    if (!at(c)) return false;
    ++pos;
    return true;
  }
  int read_label() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw std::invalid_argument("tree parse: expected a label at position " +
                                  std::to_string(pos));
    return std::stoi(text.substr(start, pos - start));
  }
  void expect_end() {
    skip_space();
    if (pos != text.size())
      throw std::invalid_argument("tree parse: trailing input at position " +
                                  std::to_string(pos));
  }
};

// ---- plane

inline void format_plane_children(const PlaneNode& v, std::string& out);

inline void format_plane_node(const PlaneNode& v, std::string& out) {
  out += std::to_string(v.label);
  if (!v.children.empty()) {
    out += '(';
    format_plane_children(v, out);
    out += ')';
  }
}

inline void format_plane_children(const PlaneNode& v, std::string& out) {
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    if (i > 0) out += ',';
    format_plane_node(v.children[i], out);
  }
}

inline PlaneNode parse_plane_node(Cursor& c);

inline std::vector<PlaneNode> parse_plane_list(Cursor& c, char closer) {
  std::vector<PlaneNode> out;
  if (c.at(closer)) return out;
  out.push_back(parse_plane_node(c));
  while (c.accept(',')) out.push_back(parse_plane_node(c));
  return out;
}

inline PlaneNode parse_plane_node(Cursor& c) {
  PlaneNode v;
  v.label = c.read_label();
  if (c.accept('(')) {
    v.children = parse_plane_list(c, ')');
    c.expect(')');
  }
  return v;
}

// ---- compartmented

inline void format_comp_part(const std::vector<CompNode>& part, std::string& out);

inline void format_comp_node(const CompNode& v, std::string& out) {
  out += std::to_string(v.label);
  bool all_empty = true;
  for (const auto& part : v.parts) all_empty = all_empty && part.empty();
  if (all_empty) return;
  out += '(';
  for (std::size_t i = 0; i < v.parts.size(); ++i) {
    if (i > 0) out += '|';
    format_comp_part(v.parts[i], out);
  }
  out += ')';
}

inline void format_comp_part(const std::vector<CompNode>& part, std::string& out) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (i > 0) out += ',';
    format_comp_node(part[i], out);
  }
}

inline CompNode parse_comp_node(Cursor& c, int k);

inline std::vector<CompNode> parse_comp_part(Cursor& c, int k) {
  std::vector<CompNode> out;
  if (c.at('|') || c.at(')')) return out;
  out.push_back(parse_comp_node(c, k));
  while (c.accept(',')) out.push_back(parse_comp_node(c, k));
  return out;
}

inline CompNode parse_comp_node(Cursor& c, int k) {
  CompNode v;
  v.label = c.read_label();
  if (c.accept('(')) {
    v.parts.push_back(parse_comp_part(c, k));
    while (c.accept('|')) v.parts.push_back(parse_comp_part(c, k));
    c.expect(')');
    if (static_cast<int>(v.parts.size()) != k - 1)
      throw std::invalid_argument("tree parse: vertex " + std::to_string(v.label) + " has " +
                                  std::to_string(v.parts.size()) + " compartments, expected " +
                                  std::to_string(k - 1));
  } else {
    v.parts.assign(static_cast<std::size_t>(k - 1), {});
  }
  return v;
}

// ---- k-ary

inline void format_kary_node(const KaryNode& v, std::string& out) {
  if (v.children.empty()) {
    out += '.';
    return;
  }
  out += std::to_string(v.label);
  out += '(';
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    if (i > 0) out += ',';
    format_kary_node(v.children[i], out);
  }
  out += ')';
}

inline KaryNode parse_kary_node(Cursor& c, int k) {
  if (c.accept('.')) return KaryNode{};
  KaryNode v;
  v.label = c.read_label();
  c.expect('(');
  v.children.push_back(parse_kary_node(c, k));
  while (c.accept(',')) v.children.push_back(parse_kary_node(c, k));
  c.expect(')');
  return v;
}

}  // namespace textio_detail

inline std::string format_plane(const PlaneTree& t) {
  std::string out = "(";
  textio_detail::format_plane_children(t.root, out);
  out += ')';
  return out;
}

inline PlaneTree parse_plane(const std::string& text) {
  textio_detail::Cursor c{text};
  c.expect('(');
  PlaneTree t;
  t.root.children = textio_detail::parse_plane_list(c, ')');
  c.expect(')');
  c.expect_end();
  return t;
}

inline std::string format_compartmented(const CompartmentedTree& t) {
  std::string out = "(";
  textio_detail::format_comp_part(t.root.parts[0], out);
  out += ')';
  return out;
}

inline CompartmentedTree parse_compartmented(const std::string& text, int k) {
  if (k < 2) throw std::invalid_argument("parse_compartmented: need k >= 2");
  textio_detail::Cursor c{text};
  c.expect('(');
  CompartmentedTree t;
  t.k = k;
  t.root.parts.push_back(textio_detail::parse_comp_part(c, k));
  c.expect(')');
  c.expect_end();
  validate(t);
  return t;
}

inline std::string format_kary(const KaryTree& t) {
  std::string out;
  textio_detail::format_kary_node(t.root, out);
  return out;
}

inline KaryTree parse_kary(const std::string& text, int k) {
  textio_detail::Cursor c{text};
  KaryTree t;
  t.k = k;
  t.root = textio_detail::parse_kary_node(c, k);
  c.expect_end();
  validate(t);
  return t;
}

namespace textio_detail {

inline PlaneNode plane_of_unordered(const UnorderedNode& v) {
  PlaneNode out;
  out.label = v.label;
  for (const auto& c : v.children) out.children.push_back(plane_of_unordered(c));
  return out;
}

}  // namespace textio_detail

inline std::string format_unordered(const UnorderedTree& u) {
  UnorderedTree canon = canonicalized(u);
  return format_plane(PlaneTree{textio_detail::plane_of_unordered(canon.root)});
}

inline UnorderedTree parse_unordered(const std::string& text) {
  PlaneTree p = parse_plane(text);
  return forget_order(p);
}

inline std::string format_cayley(const CayleyEdges& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return out;
}

}  // namespace qstirling
