// SPDX-License-Identifier: Apache-2.0

#include "forget/formula_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace forget {

ParseError::ParseError(std::size_t token_index, const std::string& message)
    : std::runtime_error("token " + std::to_string(token_index) + ": " + message),
      token_index_(token_index) {}

namespace {

constexpr std::string_view kReserved = "-&;=!#>";

bool plain_variable_char(char c) {
  return std::isspace(static_cast<unsigned char>(c)) == 0 && kReserved.find(c) == std::string_view::npos;
}

enum class Connective { None, Implies, Equivalent };

class TokenParser {
 public:
  TokenParser(std::string_view token, std::size_t index) : token_(token), index_(index) {}

  void parse_into(std::vector<Clause>& out) {
    if (token_.empty()) fail("empty token");
    if (token_ == "!") {
      out.emplace_back();
      return;
    }
    std::vector<Literal> lhs = side();
    Connective conn = connective();
    if (conn == Connective::None) {
      if (lhs.empty()) fail("no literals");
      out.emplace_back(std::move(lhs));
      return;
    }
    if (lhs.empty()) fail("missing left side");
    std::vector<Literal> rhs = side();
    if (rhs.empty()) fail("missing right side");
    if (pos_ != token_.size()) fail("more than one connective");
    out.push_back(implication(lhs, rhs));
    if (conn == Connective::Equivalent) out.push_back(implication(rhs, lhs));
  }

  /// The literals of a token without connectives, in written order.
  std::vector<Literal> sequence() {
    if (token_.empty()) fail("empty token");
    std::vector<Literal> lits = side();
    if (pos_ != token_.size()) fail("connective in a variable list");
    return lits;
  }

 private:
  static Clause implication(const std::vector<Literal>& lhs, const std::vector<Literal>& rhs) {
    std::vector<Literal> lits;
    for (Literal l : lhs) lits.push_back(~l);
    lits.insert(lits.end(), rhs.begin(), rhs.end());
    return Clause(std::move(lits));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(index_, what + " in '" + std::string(token_) + "'");
  }

  bool at_arrow() const {
    return pos_ + 1 < token_.size() && token_[pos_] == '-' && token_[pos_ + 1] == '>';
  }

  std::vector<Literal> side() {
    std::vector<Literal> lits;
    while (pos_ < token_.size() && token_[pos_] != '=' && !at_arrow()) lits.push_back(literal());
    return lits;
  }

  Connective connective() {
    if (pos_ >= token_.size()) return Connective::None;
    if (token_[pos_] == '=') {
      ++pos_;
      return Connective::Equivalent;
    }
    pos_ += 2;  // "->"
    return Connective::Implies;
  }

  Literal literal() {
    bool positive = true;
    if (token_[pos_] == '-') {
      positive = false;
      ++pos_;
      if (pos_ >= token_.size()) fail("stray '-' at end");
      if (token_[pos_] == '-' || token_[pos_] == '=' || token_[pos_] == '>') fail("stray '-'");
    }
    return Literal(variable(), positive);
  }

  Variable variable() {
    const char c = token_[pos_];
    if (c == '&') {
      const auto end = token_.find(';', pos_ + 1);
      if (end == std::string_view::npos) fail("unterminated entity");
      if (end == pos_ + 1) fail("empty entity name");
      const std::string_view name = token_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return Variable(name);
    }
    if (!plain_variable_char(c)) fail(std::string("unexpected character '") + c + "'");
    ++pos_;
    return Variable(token_.substr(pos_ - 1, 1));
  }

  std::string_view token_;
  std::size_t index_;
  std::size_t pos_ = 0;
};

template <typename OnToken>
void for_each_token(std::string_view text, OnToken&& on_token) {
  std::size_t index = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const auto first = line.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t p = first;
      while (p < line.size()) {
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p >= line.size()) break;
        std::size_t q = p;
        while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q]))) ++q;
        on_token(line.substr(p, q - p), index++);
        p = q;
      }
    }
    line_start = line_end + 1;
  }
}

std::string variable_text(Variable v) {
  const std::string& name = v.name();
  if (name.size() == 1 && plain_variable_char(name[0])) return name;
  return "&" + name + ";";
}

bool literal_name_less(Literal a, Literal b) {
  if (a.variable() != b.variable()) return name_less(a.variable(), b.variable());
  return a.positive() && !b.positive();
}

std::vector<Literal> name_sorted(const Clause& c) {
  std::vector<Literal> lits(c.begin(), c.end());
  std::sort(lits.begin(), lits.end(), literal_name_less);
  return lits;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  std::vector<Clause> clauses;
  for_each_token(text, [&](std::string_view token, std::size_t index) {
    TokenParser(token, index).parse_into(clauses);
  });
  return Formula(std::move(clauses));
}

std::vector<Variable> parse_variable_sequence(std::string_view text) {
  std::vector<Variable> vars;
  for_each_token(text, [&](std::string_view token, std::size_t index) {
    for (Literal l : TokenParser(token, index).sequence()) {
      if (!l.positive()) throw ParseError(index, "negated variable in variable list");
      if (std::find(vars.begin(), vars.end(), l.variable()) == vars.end())
        vars.push_back(l.variable());
    }
  });
  return vars;
}

VarSet parse_variables(std::string_view text) { return VarSet(parse_variable_sequence(text)); }

bool canonical_less(const Clause& a, const Clause& b) {
  const auto la = name_sorted(a);
  const auto lb = name_sorted(b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(), literal_name_less);
}

std::string serialize_clause(const Clause& c) {
  if (c.empty()) return "!";
  std::string out;
  for (Literal l : name_sorted(c)) {
    if (!l.positive()) out += '-';
    out += variable_text(l.variable());
  }
  return out;
}

std::string serialize_formula(const Formula& f) {
  std::vector<const Clause*> order;
  for (const Clause& c : f) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Clause* a, const Clause* b) { return canonical_less(*a, *b); });
  std::string out;
  for (const Clause* c : order) {
    out += serialize_clause(*c);
    out += '\n';
  }
  return out;
}

}  // namespace forget
