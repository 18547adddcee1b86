#include "alternabase/exactreal.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "alternabase/errors.hpp"

namespace alternabase {

namespace {

Integer floor_rational(const Rational& q) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

}  // namespace

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw MalformedInput("square root of a negative integer");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

QuadNum::QuadNum(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 1) throw MalformedInput("radicand must be a positive integer, got " + std::to_string(d));
  a_.canonicalize();
  b_.canonicalize();
  long factor = 1;
  for (long f = 2; f <= d_ / f; ++f) {
    while (d_ % (f * f) == 0) {
      d_ /= f * f;
      factor *= f;
    }
  }
  b_ *= factor;
  canonicalize();
}

void QuadNum::canonicalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

long common_field(const QuadNum& x, const QuadNum& y) {
  if (x.d() == 1) return y.d();
  if (y.d() == 1 || x.d() == y.d()) return x.d();
  throw MixedFields("Q(sqrt(" + std::to_string(x.d()) + ")) vs Q(sqrt(" + std::to_string(y.d()) + "))");
}

QuadNum QuadNum::operator-() const {
  QuadNum r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  d_ = common_field(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  canonicalize();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
  d_ = common_field(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  canonicalize();
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  const long d = common_field(*this, rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  canonicalize();
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
  if (rhs.is_zero()) throw DivisionByZero(to_string() + " / 0");
  common_field(*this, rhs);
  const Rational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  canonicalize();
  return *this;
}

QuadNum QuadNum::conjugate() const {
  QuadNum r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadNum::norm() const { return a_ * a_ - b_ * b_ * d_; }

int sign(const QuadNum& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const int c = cmp(x.a() * x.a(), x.b() * x.b() * x.d());
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  common_field(x, y);
  const int s = sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer floor(const QuadNum& x) {
  if (x.b() == 0) return floor_rational(x.a());
  // Bisect a rational enclosure lo < sqrt(d) < hi until the floor is pinned.
  Rational lo(isqrt(x.d()));
  Rational hi = lo + 1;
  for (;;) {
    Rational lo_x = x.a() + x.b() * lo;
    Rational hi_x = x.a() + x.b() * hi;
    if (x.b() < 0) std::swap(lo_x, hi_x);
    Integer f = floor_rational(lo_x);
    if (f == floor_rational(hi_x)) return f;
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    if (mid * mid < x.d()) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

Integer ceil(const QuadNum& x) { return -floor(-x); }

std::string QuadNum::to_string() const {
  if (b_ == 0) return alternabase::to_string(a_);
  const std::string radical = " * sqrt(" + std::to_string(d_) + ")";
  if (a_ == 0) return alternabase::to_string(b_) + radical;
  if (b_ < 0) return alternabase::to_string(a_) + " - " + alternabase::to_string(Rational(-b_)) + radical;
  return alternabase::to_string(a_) + " + " + alternabase::to_string(b_) + radical;
}

std::string QuadNum::to_decimal(int digits) const {
  const int s = sign(*this);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const QuadNum magnitude = s < 0 ? -*this : *this;
  const std::string body = floor(magnitude * QuadNum(Rational(scale))).get_str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    std::string padded = std::string(body.size() <= static_cast<std::size_t>(digits)
                                         ? digits + 1 - body.size()
                                         : 0,
                                     '0') +
                         body;
    out = padded.substr(0, padded.size() - digits) + "." + padded.substr(padded.size() - digits);
  }
  bool nonzero = out.find_first_not_of("0.") != std::string::npos;
  return (s < 0 && nonzero ? "-" : "") + out;
}

double QuadNum::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  QuadNum parse() {
    QuadNum value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MalformedInput(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadNum expression() {
    QuadNum value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  QuadNum term() {
    QuadNum value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        value /= unary();
      } else {
        return value;
      }
    }
  }

  QuadNum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  QuadNum primary() {
    skip_space();
    if (accept('(')) {
      QuadNum inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      QuadNum radicand = expression();
      if (!accept(')')) fail("expected ')'");
      if (!radicand.is_rational() || radicand.a() < 0) fail("sqrt needs a non-negative rational");
      // sqrt(n/m) = sqrt(n*m)/m
      const Integer nm = radicand.a().get_num() * radicand.a().get_den();
      if (!nm.fits_slong_p()) fail("radicand too large");
      if (nm == 0) return QuadNum{};
      return QuadNum(Rational(0), Rational(Integer(1), radicand.a().get_den()), nm.get_si());
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return QuadNum(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw MalformedInput("not an integer: " + j.dump());
    }
  }
  throw MalformedInput("expected an integer, got " + j.dump());
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_array() && j.size() == 2) {
    Integer den = integer_from_json(j[1]);
    if (den == 0) throw MalformedInput("zero denominator in " + j.dump());
    Rational q(integer_from_json(j[0]), den);
    q.canonicalize();
    return q;
  }
  return Rational(integer_from_json(j));
}

}  // namespace

QuadNum parse_quad(std::string_view text) { return ExpressionParser(text).parse(); }

nlohmann::json to_json(const QuadNum& x) {
  return {{"a", {integer_json(x.a().get_num()), integer_json(x.a().get_den())}},
          {"b", {integer_json(x.b().get_num()), integer_json(x.b().get_den())}},
          {"d", x.d()}};
}

QuadNum quad_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_quad(j.get<std::string>());
  if (j.is_number_integer()) return QuadNum(j.get<long>());
  if (!j.is_object()) throw MalformedInput("cannot read a number from " + j.dump());
  Rational a = j.contains("a") ? rational_from_json(j.at("a")) : Rational(0);
  Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
  long d = 1;
  if (j.contains("d")) {
    if (!j.at("d").is_number_integer()) throw MalformedInput("d must be an integer");
    d = j.at("d").get<long>();
  }
  return QuadNum(std::move(a), std::move(b), d);
}

}  // namespace alternabase
