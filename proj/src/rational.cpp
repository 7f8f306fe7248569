#include "genbinom/rational.hpp"

#include <ostream>

namespace genbinom {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text), 10));
    return Rational(Integer(std::string(text.substr(0, slash)), 10),
                    Integer(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Rational result(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binom_rational(const Rational& z, int k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (int i = 0; i < k; ++i) num *= z - Rational(i);
  return num / Rational(factorial(static_cast<unsigned>(k)));
}

Integer binom_integer(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void to_json(nlohmann::json& j, const Rational& r) {
  j = nlohmann::json::array({r.numerator().get_str(), r.denominator().get_str()});
}

void from_json(const nlohmann::json& j, Rational& r) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument("rational must be [\"num\",\"den\"]");
  const Integer den(j[1].get<std::string>(), 10);
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  r = Rational(Integer(j[0].get<std::string>(), 10), den);
}

}  // namespace genbinom
