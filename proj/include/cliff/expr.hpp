#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

// Syntax error with the byte offset of the offending token.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Expression tree for the multivector language. Monomials keep their
// index lists so range checking happens at evaluation, against the
// ambient signature; canonical ordering is enforced at parse time.
struct Expr {
  enum class Kind { literal, monomial, negate, add, subtract, multiply, divide, apply };

  Kind kind;
  Rational value;            // literal payload, or the divisor of divide
  std::vector<int> indices;  // monomial payload
  std::string func;          // apply payload: tp | rev | gi | conj | teps
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

inline ExprPtr make_node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

inline ExprPtr make_binary(Expr::Kind kind, ExprPtr l, ExprPtr r) {
  Expr e;
  e.kind = kind;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return e;
  }

 private:
  // expr := term (('+'|'-') term)*
  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    for (;;) {
      skip_space();
      if (consume('+')) {
        e = make_binary(Expr::Kind::add, e, parse_term());
      } else if (consume('-')) {
        e = make_binary(Expr::Kind::subtract, e, parse_term());
      } else {
        return e;
      }
    }
  }

  // term := factor (('*')? factor)*; juxtaposition multiplies, but only an
  // explicit '*' lets a '-'-prefixed factor follow.
  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    for (;;) {
      skip_space();
      if (consume('*')) {
        e = make_binary(Expr::Kind::multiply, e, parse_factor());
        continue;
      }
      if (starts_factor()) {
        e = make_binary(Expr::Kind::multiply, e, parse_factor());
        continue;
      }
      return e;
    }
  }

  // factor := primary ('/' integer)*;  primary := rational | monomial |
  // func '(' expr ')' | '(' expr ')' | '-' factor
  ExprPtr parse_factor() {
    skip_space();
    ExprPtr e = parse_primary();
    for (;;) {
      skip_space();
      if (!consume('/')) return e;
      skip_space();
      const std::size_t at = pos_;
      const Rational den = parse_integer();
      if (den == 0) throw parse_error("division by zero", at);
      Expr div;
      div.kind = Expr::Kind::divide;
      div.value = den;
      div.lhs = e;
      e = make_node(std::move(div));
    }
  }

  ExprPtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      Expr neg;
      neg.kind = Expr::Kind::negate;
      neg.lhs = parse_factor();
      return make_node(std::move(neg));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr lit;
      lit.kind = Expr::Kind::literal;
      lit.value = parse_integer();
      return make_node(std::move(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprPtr parse_word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);

    if (word.size() > 1 && word[0] == 'e' && all_digits(word.substr(1))) {
      return make_monomial_digits(word.substr(1), start);
    }
    if (word == "e") {
      skip_space();
      if (consume('[')) return make_monomial_list(start);
      throw parse_error("generator needs indices, e.g. e1 or e[1,10]", start);
    }
    if (word == "tp" || word == "rev" || word == "gi" || word == "conj" ||
        word == "teps") {
      expect('(');
      Expr app;
      app.kind = Expr::Kind::apply;
      app.func = std::string(word);
      app.lhs = parse_expr();
      expect(')');
      return make_node(std::move(app));
    }
    throw parse_error("unknown name '" + std::string(word) + "'", start);
  }

  // Compact inline monomial: one digit per index, strictly increasing.
  ExprPtr make_monomial_digits(std::string_view digits, std::size_t at) {
    Expr mono;
    mono.kind = Expr::Kind::monomial;
    int prev = 0;
    for (char d : digits) {
      const int idx = d - '0';
      if (idx == 0) throw parse_error("generator index 0 is invalid", at);
      if (idx <= prev) {
        throw parse_error("monomial indices must be strictly increasing", at);
      }
      mono.indices.push_back(idx);
      prev = idx;
    }
    return make_node(std::move(mono));
  }

  // Bracket monomial e[i1,i2,...] for indices past 9.
  ExprPtr make_monomial_list(std::size_t at) {
    Expr mono;
    mono.kind = Expr::Kind::monomial;
    int prev = 0;
    for (;;) {
      skip_space();
      const std::size_t ip = pos_;
      const Rational n = parse_integer();
      const long idx = n.get_num().get_si();
      if (idx < 1) throw parse_error("generator index must be positive", ip);
      if (idx <= prev) {
        throw parse_error("monomial indices must be strictly increasing", ip);
      }
      mono.indices.push_back(static_cast<int>(idx));
      prev = static_cast<int>(idx);
      skip_space();
      if (consume(']')) break;
      expect(',');
    }
    if (mono.indices.empty()) throw parse_error("empty monomial index list", at);
    return make_node(std::move(mono));
  }

  Rational parse_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw parse_error("expected a number", start);
    return Rational(std::string(text_.substr(start, pos_ - start)));
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  static bool all_digits(std::string_view s) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return !s.empty();
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!consume(c)) {
      throw parse_error(std::string("expected '") + c + "'", pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse(); }

inline Multivector eval(const ExprPtr& ast, const Signature& sig) {
  switch (ast->kind) {
    case Expr::Kind::literal:
      return Multivector::scalar(sig, ast->value);
    case Expr::Kind::monomial: {
      IndexSet I;
      for (int i : ast->indices) {
        if (i > sig.n()) {
          throw range_error("generator index " + std::to_string(i) +
                            " out of range for " + sig.str());
        }
        I = IndexSet(I.mask() | IndexSet::single(i).mask());
      }
      return Multivector::basis(sig, I);
    }
    case Expr::Kind::negate:
      return -eval(ast->lhs, sig);
    case Expr::Kind::add:
      return eval(ast->lhs, sig) + eval(ast->rhs, sig);
    case Expr::Kind::subtract:
      return eval(ast->lhs, sig) - eval(ast->rhs, sig);
    case Expr::Kind::multiply:
      return cmul(eval(ast->lhs, sig), eval(ast->rhs, sig));
    case Expr::Kind::divide:
      return Rational(1 / ast->value) * eval(ast->lhs, sig);
    case Expr::Kind::apply: {
      const Multivector u = eval(ast->lhs, sig);
      if (ast->func == "tp") return tp(u);
      if (ast->func == "rev") return reversion(u);
      if (ast->func == "gi") return grade_involution(u);
      if (ast->func == "conj") return conjugation(u);
      return T_eps(u);  // "teps"
    }
  }
  throw error("corrupt expression tree");
}

inline Multivector eval_text(std::string_view text, const Signature& sig) {
  return eval(parse(text), sig);
}

// Canonical renderer; eval(parse(render(u))) == u.
inline std::string render(const Multivector& u) { return to_string(u); }

}  // namespace cliff
