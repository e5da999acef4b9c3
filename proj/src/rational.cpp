#include "eqcolor/rational.hpp"

#include <cctype>

#include "eqcolor/error.hpp"

namespace eqcolor {

namespace {

class RationalParser {
 public:
  explicit RationalParser(std::string_view text) : text_(text) {}

  Rational parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Rational total = signed_term();
    for (skip_space(); !at_end(); skip_space()) {
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Rational term = unsigned_term();
      if (op == '+')
        total += term;
      else
        total -= term;
    }
    return total;
  }

 private:
  Rational signed_term() {
    bool negative = false;
    if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    Rational v = unsigned_term();
    return negative ? Rational(-v) : v;
  }

  Rational unsigned_term() {
    Rational value = number();
    skip_space();
    if (!at_end() && text_[pos_] == '/') {
      ++pos_;
      Rational den = number();
      if (den == 0) fail("division by zero");
      value /= den;
    }
    return value;
  }

  Rational number() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    BigInt scale = 1;
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      digits.append(text_.substr(frac_start, pos_ - frac_start));
      for (std::size_t i = frac_start; i < pos_; ++i) scale *= 10;
    }
    if (digits.empty()) fail("expected a number");
    return Rational(BigInt(digits), scale);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse rational \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) { return RationalParser(text).parse(); }

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace eqcolor
