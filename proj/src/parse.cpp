#include <cctype>
#include <string>

#include "fdp/mpoly.hpp"

namespace fdp {

namespace {

// Recursive-descent parser for the expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ['^' integer]
//   atom   := integer | name | '(' expr ')'
// No implicit multiplication: "2s" and "s t" are rejected.
class Parser {
 public:
  Parser(std::string_view text, FieldRef f, AlphabetRef a)
      : text_(text), field_(f), alpha_(std::move(a)) {}

  MultiPoly run() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error(pos_, "empty expression");
    MultiPoly p = expr();
    skip_ws();
    if (pos_ < text_.size())
      throw parse_error(pos_, std::string("unexpected '") + text_[pos_] + "' after expression");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  MultiPoly expr() {
    MultiPoly acc = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    if (accept('-')) return -factor();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw parse_error(at, "expected a nonnegative integer exponent after '^'");
      uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<uint64_t>(text_[pos_] - '0');
        if (e > 10000) throw parse_error(at, "exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<uint32_t>(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw parse_error(at, "unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // integer literal, reduced mod p digit by digit so any length is fine
      FieldElem v = field_->zero();
      const FieldElem ten = field_->from_int(10);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * ten + field_->from_int(text_[pos_] - '0');
        ++pos_;
      }
      return MultiPoly::constant(v, alpha_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      const std::string name(text_.substr(pos_, end - pos_));
      pos_ = end;
      const int idx = alpha_->index_of(name);
      if (idx >= 0) return MultiPoly::variable(field_, alpha_, idx);
      if (name == "u" && !field_->is_prime_field())
        return MultiPoly::constant(field_->generator(), alpha_);
      throw parse_error(at, "unknown variable '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw parse_error(pos_, "expected ')'");
      return inner;
    }
    throw parse_error(at, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  FieldRef field_;
  AlphabetRef alpha_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, FieldRef f, AlphabetRef a) {
  if (!f->is_prime_field() && a->index_of("u") >= 0)
    throw math_error(errc::wrong_shape,
                     "variable name 'u' is reserved for the extension generator");
  return Parser(text, f, std::move(a)).run();
}

}  // namespace fdp
