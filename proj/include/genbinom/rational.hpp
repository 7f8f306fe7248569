#ifndef GENBINOM_RATIONAL_HPP
#define GENBINOM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

namespace genbinom {

using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational number, always stored in canonical form: positive
/// denominator, numerator and denominator coprime, zero as 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(int v) : q_(v) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "n" or "n/d" in base 10.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(unsigned e) const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  const mpq_class& raw() const { return q_; }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// z (z-1) ... (z-k+1) / k!, which is 1 when k = 0.
Rational binom_rational(const Rational& z, int k);

/// Integer binomial coefficient for 0 <= k <= n, zero otherwise.
Integer binom_integer(long n, long k);

Integer factorial(unsigned n);

// JSON form: ["numerator","denominator"] with the sign on the numerator.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

}  // namespace genbinom

#endif  // GENBINOM_RATIONAL_HPP
