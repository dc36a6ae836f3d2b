#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sculpt {

// Library error hierarchy. The CLI maps these onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input violates a documented precondition of an operation.
struct PreconditionError : Error {
  using Error::Error;
};

// Malformed text (rational literal, formula, JSON document).
struct ParseError : Error {
  using Error::Error;
};

// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  // Accepts "a", "a/b" and decimal "a.b" (converted exactly). Surrounding
  // whitespace is ignored.
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }

  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

inline Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw ParseError("empty rational literal");

  auto is_int = [](std::string_view t) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto to_mpz = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
      throw ParseError("malformed rational literal '" + s + "'");
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(to_mpz(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string digits = whole;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    if (digits.empty()) digits = "0";
    if (!is_int(digits) || digits[0] == '-' || (!frac.empty() && !is_int(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw ParseError("malformed decimal literal '" + s + "'");
    if (frac.empty() && whole.empty()) throw ParseError("malformed decimal literal '" + s + "'");
    mpz_class num(digits + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (neg) num = -num;
    return Rational(num, den);
  }
  if (!is_int(s)) throw ParseError("malformed rational literal '" + s + "'");
  return Rational(to_mpz(s), mpz_class(1));
}

}  // namespace sculpt

template <>
struct std::hash<sculpt::Rational> {
  std::size_t operator()(const sculpt::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
