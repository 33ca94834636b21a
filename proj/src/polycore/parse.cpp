#include "clfree/parse.hpp"

#include <cctype>

namespace clfree {

namespace {

class Parser {
public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_letter() {
    skip();
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Polynomial d = power();
        if (!d.is_constant()) throw ParseError(at, "division by a non-constant");
        if (d.is_zero()) throw ParseError(at, "zero denominator");
        acc *= Rational(1) / d.terms().front().coef;
      } else {
        break;
      }
    }
    return acc;
  }

  unsigned exponent() {
    skip();
    std::size_t at = pos_;
    if (!at_digit()) throw ParseError(at, "expected a nonnegative integer exponent");
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (v > 10000) throw ParseError(at, "exponent too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of expression");
    if (peek('(')) {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      check_no_juxtaposition();
      return inner;
    }
    if (at_digit()) {
      Integer n(0);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      Polynomial c = Polynomial::constant(ring_, Rational(n));
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) return c * monomial();
      check_no_juxtaposition();
      return c;
    }
    if (at_letter()) return monomial();
    throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
  }

  void check_no_juxtaposition() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalnum(static_cast<unsigned char>(s_[pos_]))))
      throw ParseError(pos_, "implicit multiplication is only allowed between a number and a monomial");
  }

  // One variable token at pos_. Multi-letter ring names are matched greedily;
  // otherwise a single letter is taken.
  std::size_t variable() {
    std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    std::string_view word = s_.substr(at, end - at);
    if (auto idx = ring_.index_of(word)) {
      pos_ = end;
      return *idx;
    }
    // Longest ring variable that prefixes the word.
    std::size_t best_len = 0, best = 0;
    for (std::size_t i = 0; i < ring_.arity(); ++i) {
      const auto& v = ring_.var(i);
      if (v.size() > best_len && word.substr(0, v.size()) == v) {
        best_len = v.size();
        best = i;
      }
    }
    if (best_len == 0) {
      throw ParseError(at, "unknown variable '" + std::string(s_.substr(at, 1)) + "'");
    }
    pos_ = at + best_len;
    return best;
  }

  Polynomial monomial() {
    Monomial m;
    bool any = false;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t v = variable();
      unsigned e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = exponent();
      }
      m.e[v] += e;
      any = true;
    }
    if (!any) throw ParseError(pos_, "expected a variable");
    check_no_juxtaposition();
    return Polynomial::monomial(ring_, m);
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

}  // namespace clfree
