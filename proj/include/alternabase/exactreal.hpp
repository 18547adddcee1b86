#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt(d)).
//
// A QuadNum is a + b*sqrt(d) with a, b rational and d a square-free integer.
// The canonical form keeps d = 1 (and b = 0) for plain rationals, so within one
// field structural equality coincides with numerical equality.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "json.hpp"

namespace alternabase {

using Integer = mpz_class;
using Rational = mpq_class;

class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadNum(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  /// a + b*sqrt(d); d >= 1 need not be square-free, squares are pulled out.
  QuadNum(Rational a, Rational b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// Square-free radicand; 1 for rationals.
  long d() const { return d_; }
  bool is_rational() const { return d_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  QuadNum& operator/=(const QuadNum& rhs);

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Exact numerical order. Throws MixedFields across distinct fields.
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

  /// a - b*sqrt(d).
  QuadNum conjugate() const;
  /// (a + b sqrt d)(a - b sqrt d), a rational.
  Rational norm() const;

  /// Text form `a_n/a_d + b_n/b_d * sqrt(d)`; rationals print as `n/d` or `n`.
  std::string to_string() const;
  /// Decimal rendering truncated toward zero after `digits` places. Display only.
  std::string to_decimal(int digits) const;
  double to_double() const;

 private:
  void canonicalize();

  Rational a_{0};
  Rational b_{0};
  long d_ = 1;
};

/// -1, 0 or +1, decided by rational sign analysis only.
int sign(const QuadNum& x);
Integer floor(const QuadNum& x);
Integer ceil(const QuadNum& x);

/// The common field of two numbers (1 if both rational); throws MixedFields.
long common_field(const QuadNum& x, const QuadNum& y);

/// Parses an arithmetic expression over integers, `sqrt(n)`, + - * / and
/// parentheses, e.g. `(1+sqrt(13))/2` or `1/2 + 1/2 * sqrt(13)`.
QuadNum parse_quad(std::string_view text);

/// JSON form {"a":[num,den],"b":[num,den],"d":int}.
nlohmann::json to_json(const QuadNum& x);
/// Accepts the object form, a string expression or a JSON integer.
QuadNum quad_from_json(const nlohmann::json& j);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Largest integer s with s*s <= n, n >= 0.
Integer isqrt(const Integer& n);

}  // namespace alternabase
