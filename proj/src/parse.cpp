#include "starq/parse.hpp"

#include <cctype>

namespace starq {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const VarSet& vars) : s_(s), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& s_;
  const VarSet& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  Polynomial factor() {
    if (eat('-')) return -factor();
    Polynomial base = atom();
    if (eat('^')) {
      long k = integer("exponent");
      if (k <= 0) fail("exponent must be a positive integer");
      Polynomial p = base;
      for (long i = 1; i < k; ++i) p *= base;
      return p;
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer("number");
      if (eat('/')) {
        long den = integer("denominator");
        if (den <= 0) fail("denominator must be a positive integer");
        return Polynomial::constant(rat(num, den));
      }
      return Polynomial::constant(rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string id = ident();
      auto idx = vars_.index(id);
      if (!idx) throw ParseError("undeclared variable '" + id + "'", start);
      return Polynomial::variable(*idx);
    }
    fail("expected number, variable or '('");
  }

  long integer(const std::string& what) {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected " + what);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }
};

}  // namespace

Polynomial parse_poly(const std::string& expr, const VarSet& vars) {
  return ExprParser(expr, vars).run();
}

}  // namespace starq
