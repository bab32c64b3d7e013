#include "regpair/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace regpair {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return done() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    skip_ws();
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", {what});
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_).starts_with(w)) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(msg, pos_, std::move(expected));
  }

  double number() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected number", {"float"});
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  long integer() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected integer", {"integer"});
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

RationalFunction rational_pow(RationalFunction base, long e) {
  if (e < 0) return rational_pow(base.inverse(), -e);
  RationalFunction acc = RationalFunction::constant(1.0);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

class RationalParser {
 public:
  explicit RationalParser(std::string_view text) : cur_(text) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    cur_.skip_ws();
    if (!cur_.done()) cur_.fail("trailing input", {"end of input", "+", "-", "*", "/", "^"});
    return v;
  }

 private:
  RationalFunction expr() {
    bool negate = false;
    if (cur_.accept('-')) negate = true;  // leading sign, for convenience
    RationalFunction v = term();
    if (negate) v = RationalFunction::constant(-1.0) * v;
    while (true) {
      if (cur_.accept('+'))
        v = add(v, term());
      else if (cur_.accept('-'))
        v = add(v, RationalFunction::constant(-1.0) * term());
      else
        return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = factor();
    while (true) {
      if (cur_.accept('*'))
        v = v * factor();
      else if (cur_.accept('/'))
        v = v * factor().inverse();
      else
        return v;
    }
  }

  RationalFunction factor() {
    RationalFunction v = base();
    if (cur_.accept('^')) {
      bool neg = cur_.accept('-');
      const long e = cur_.integer();
      return rational_pow(std::move(v), neg ? -e : e);
    }
    return v;
  }

  RationalFunction base() {
    cur_.skip_ws();
    if (cur_.accept('(')) {
      RationalFunction v = expr();
      cur_.expect(')', ")");
      return v;
    }
    if (cur_.accept('z')) return RationalFunction::z();
    if (cur_.accept('i')) return RationalFunction::constant(iu);
    const char c = cur_.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double re = cur_.number();
      if (cur_.accept('i')) return RationalFunction::constant(re * iu);
      return RationalFunction::constant(re);
    }
    cur_.fail("expected operand", {"z", "complex-literal", "("});
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
    // a/b + c/d = (ad + cb) / bd
    Poly num = poly::add(poly::mul(a.numerator(), b.denominator()),
                         poly::mul(b.numerator(), a.denominator()));
    Poly den = poly::mul(a.denominator(), b.denominator());
    return RationalFunction(std::move(num), std::move(den));
  }

  Cursor cur_;
};

cplx read_complex_pair(Cursor& cur) {
  const double re = cur.number();
  cur.expect(',', ",");
  const double im = cur.number();
  return {re, im};
}

std::vector<std::pair<int, cplx>> read_fourier_body(Cursor& cur) {
  std::vector<std::pair<int, cplx>> coeffs;
  cur.expect('(', "(");
  while (true) {
    const long k = cur.integer();
    cur.expect(':', ":");
    coeffs.emplace_back(static_cast<int>(k), read_complex_pair(cur));
    if (cur.accept(';')) continue;
    cur.expect(')', ")");
    break;
  }
  return coeffs;
}

}  // namespace

RationalFunction parse_rational(std::string_view text) {
  return RationalParser(text).parse();
}

Loop parse_loop(std::string_view text) {
  Cursor cur(text);
  if (cur.accept_word("circle")) {
    cur.expect('(', "(");
    const cplx center = read_complex_pair(cur);
    cur.expect(',', ",");
    const double r = cur.number();
    cur.expect(')', ")");
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing input", {"end of input"});
    return Loop::circle(center, r);
  }
  if (cur.accept_word("fourier")) {
    auto coeffs = read_fourier_body(cur);
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing input", {"end of input"});
    return Loop::fourier(std::move(coeffs));
  }
  cur.fail("expected loop literal", {"circle", "fourier"});
}

CircleFunction parse_fourier_function(std::string_view text, std::size_t grid) {
  Cursor cur(text);
  if (!cur.accept_word("fourier")) cur.fail("expected Fourier literal", {"fourier"});
  auto coeffs = read_fourier_body(cur);
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing input", {"end of input"});
  return CircleFunction::from_coefficients(grid, coeffs);
}

Point parse_point(std::string_view text) {
  Cursor cur(text);
  if (cur.accept_word("inf")) return Point::infinity();
  const double re = cur.number();
  if (cur.accept(',')) {
    const double im = cur.number();
    return Point::at({re, im});
  }
  return Point::at({re, 0.0});
}

}  // namespace regpair
