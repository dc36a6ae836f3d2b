#pragma once

#include "sculpt/guards.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sculpt {

// Monotone Boolean formula over guard labels. There is no negation node.
class Formula {
 public:
  enum class Op { Leaf, And, Or };

  static Formula leaf(std::string label) {
    Formula f;
    f.op_ = Op::Leaf;
    f.label_ = std::move(label);
    return f;
  }
  // Same-operator children are flattened; a single child is returned as is.
  static Formula all_of(std::vector<Formula> parts) { return combine(Op::And, std::move(parts)); }
  static Formula any_of(std::vector<Formula> parts) { return combine(Op::Or, std::move(parts)); }

  Op op() const { return op_; }
  bool is_leaf() const { return op_ == Op::Leaf; }
  const std::string& label() const { return label_; }
  const std::vector<Formula>& children() const { return children_; }

  template <typename Truth>
  bool evaluate_with(const Truth& truth) const {
    switch (op_) {
      case Op::Leaf: return truth(label_);
      case Op::And:
        return std::all_of(children_.begin(), children_.end(),
                           [&](const Formula& c) { return c.evaluate_with(truth); });
      case Op::Or:
        return std::any_of(children_.begin(), children_.end(),
                           [&](const Formula& c) { return c.evaluate_with(truth); });
    }
    return false;
  }

  void collect_labels(std::set<std::string>& out) const {
    if (is_leaf()) out.insert(label_);
    for (const auto& c : children_) c.collect_labels(out);
  }
  std::set<std::string> labels() const {
    std::set<std::string> s;
    collect_labels(s);
    return s;
  }
  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
  }

  // Fully parenthesised text with '&' and '|'.
  std::string to_string() const {
    if (is_leaf()) return label_;
    std::string s = "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) s += op_ == Op::And ? " & " : " | ";
      s += children_[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  static Formula combine(Op op, std::vector<Formula> parts) {
    if (parts.empty()) throw PreconditionError("empty AND/OR in formula");
    if (parts.size() == 1) return std::move(parts.front());
    Formula f;
    f.op_ = op;
    for (auto& p : parts) {
      if (p.op_ == op) {
        for (auto& c : p.children_) f.children_.push_back(std::move(c));
      } else {
        f.children_.push_back(std::move(p));
      }
    }
    return f;
  }

  Op op_ = Op::Leaf;
  std::string label_;
  std::vector<Formula> children_;
};

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
         c == ':';
}

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view s) : s_(s) {}

  Formula parse() {
    Formula f = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return f;
  }

 private:
  Formula expr() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of formula");
    if (s_[pos_] != '(') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && is_label_char(s_[pos_])) ++pos_;
      if (b == pos_) fail("expected a guard label");
      return Formula::leaf(std::string(s_.substr(b, pos_ - b)));
    }
    ++pos_;
    std::vector<Formula> parts{expr()};
    char op = 0;
    while (true) {
      skip();
      if (pos_ >= s_.size()) fail("unbalanced parenthesis");
      char c = s_[pos_];
      if (c == ')') { ++pos_; break; }
      if (c != '&' && c != '|') fail("expected '&', '|' or ')'");
      if (op && op != c) fail("mixed operators without parentheses");
      op = c;
      ++pos_;
      parts.push_back(expr());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return op == '&' ? Formula::all_of(std::move(parts)) : Formula::any_of(std::move(parts));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

// Parses and checks every label against the guard set.
inline Formula parse_formula(std::string_view text, const GuardSet& guards) {
  Formula f = parse_formula(text);
  for (const auto& l : f.labels())
    if (!guards.contains(l)) throw ParseError("formula references unknown guard '" + l + "'");
  return f;
}

inline bool evaluate(const Formula& f, const GuardSet& g, const Point& p) {
  return f.evaluate_with([&](const std::string& l) { return g.wedge(l).contains(p); });
}

using Clause = std::vector<std::string>;  // sorted, unique labels

struct DnfOverflow : Error {
  using Error::Error;
};

namespace detail {

inline std::vector<Clause> absorb(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<Clause> kept;
  for (auto& c : cs) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Clause& k) {
      return std::includes(c.begin(), c.end(), k.begin(), k.end());
    });
    if (!absorbed) kept.push_back(std::move(c));
  }
  return kept;
}

inline std::vector<Clause> dnf(const Formula& f, std::size_t cap) {
  switch (f.op()) {
    case Formula::Op::Leaf: return {Clause{f.label()}};
    case Formula::Op::Or: {
      std::vector<Clause> out;
      for (const auto& c : f.children()) {
        auto sub = dnf(c, cap);
        out.insert(out.end(), sub.begin(), sub.end());
        if (out.size() > cap) throw DnfOverflow("DNF exceeds clause cap");
      }
      return absorb(std::move(out));
    }
    case Formula::Op::And: {
      std::vector<Clause> acc{Clause{}};
      for (const auto& c : f.children()) {
        auto sub = dnf(c, cap);
        if (acc.size() * sub.size() > cap) throw DnfOverflow("DNF exceeds clause cap");
        std::vector<Clause> next;
        next.reserve(acc.size() * sub.size());
        for (const auto& a : acc)
          for (const auto& s : sub) {
            Clause m;
            std::set_union(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(m));
            next.push_back(std::move(m));
          }
        acc = absorb(std::move(next));
      }
      return acc;
    }
  }
  return {};
}

}  // namespace detail

// Equivalent DNF, minimal under subset absorption. Throws DnfOverflow when an
// intermediate clause list exceeds `cap`.
inline std::vector<Clause> to_dnf(const Formula& f, std::size_t cap = 1u << 16) {
  return detail::dnf(f, cap);
}

// Greedy prime implicant among the guards that are true at p, or nullopt
// when F(p) is false.
inline std::optional<Clause> extract_certificate(const Formula& f, const GuardSet& g,
                                                 const Point& p) {
  std::set<std::string> on;
  for (const auto& l : f.labels())
    if (g.wedge(l).contains(p)) on.insert(l);
  auto forced = [&](const std::set<std::string>& s) {
    return f.evaluate_with([&](const std::string& l) { return s.count(l) != 0; });
  };
  if (!forced(on)) return std::nullopt;
  std::vector<std::string> order(on.begin(), on.end());
  for (const auto& l : order) {
    on.erase(l);
    if (!forced(on)) on.insert(l);
  }
  return Clause(on.begin(), on.end());
}

// A guard set, a formula over it, and the name of the strategy that built it.
struct Placement {
  GuardSet guards;
  Formula formula;
  std::string strategy;
  std::optional<std::size_t> certificate_bound;  // nullopt = unbounded

  std::size_t guard_count() const { return guards.size(); }
};

// Largest DNF clause, or nullopt when the DNF is too large to enumerate.
inline std::optional<std::size_t> max_clause_size(const Formula& f, std::size_t cap = 1u << 16) {
  try {
    std::size_t m = 0;
    for (const auto& c : to_dnf(f, cap)) m = std::max(m, c.size());
    return m;
  } catch (const DnfOverflow&) {
    return std::nullopt;
  }
}

inline void check_placement_labels(const Placement& pl) {
  for (const auto& l : pl.formula.labels())
    if (!pl.guards.contains(l)) throw PreconditionError("formula references unknown guard '" + l + "'");
}

}  // namespace sculpt
