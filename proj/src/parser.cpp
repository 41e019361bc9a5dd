#include "eisgen/parser.hpp"

#include <cctype>

namespace eisgen {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::string& var) : s_(text), var_(var) {}

  RatFun run() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
    return r;
  }

 private:
  const std::string& s_;
  std::string var_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { ++pos_; return true; }
    return false;
  }

  RatFun expr() {
    RatFun r = term();
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  RatFun term() {
    RatFun r = factor();
    for (;;) {
      if (eat('*')) r = r * factor();
      else if (eat('/')) {
        RatFun d = factor();
        if (d.is_zero()) throw DivisionByZeroExpression();
        r = r / d;
      } else return r;
    }
  }

  RatFun factor() {
    RatFun b = base();
    if (eat('^')) {
      long e = signed_int();
      if (e < 0 && b.is_zero()) throw DivisionByZeroExpression();
      b = b.pow(e);
    }
    return b;
  }

  long signed_int() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = (s_[pos_++] == '-');
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
      throw SyntaxError("expected integer exponent", start);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) throw SyntaxError("exponent too large", start);
    }
    return neg ? -v : v;
  }

  RatFun base() {
    skip_ws();
    size_t start = pos_;
    if (eat('-')) return -factor();  // unary minus, so printed forms re-parse
    if (eat('(')) {
      RatFun r = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return r;
    }
    char c = peek();
    if (std::isdigit((unsigned char)c)) {
      Int v = 0;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) v = v * 10 + (s_[pos_++] - '0');
      return RatFun::constant(var_, ScalarQ(Rat(v)));
    }
    if (std::isalpha((unsigned char)c)) {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) name += s_[pos_++];
      if (name == "q") return RatFun::constant(var_, ScalarQ::q());
      if (name == var_) return RatFun::variable(var_);
      throw SyntaxError("unknown symbol '" + name + "' (variable is '" + var_ + "')", start);
    }
    throw SyntaxError("unexpected character", pos_);
  }
};

}  // namespace

RatFun parse_expr(const std::string& text, const std::string& variable) {
  return Parser(text, variable).run();
}

}  // namespace eisgen
