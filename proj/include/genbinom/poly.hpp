#ifndef GENBINOM_POLY_HPP
#define GENBINOM_POLY_HPP

#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "genbinom/rational.hpp"

namespace genbinom {

/// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

class InexactDivision : public std::domain_error {
public:
  explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

/// Dense polynomial in t over the rationals. Coefficients are indexed by
/// power, with no trailing zeros.
class PolyT {
public:
  PolyT() = default;
  PolyT(const Rational& c);
  PolyT(int c) : PolyT(Rational(c)) {}
  explicit PolyT(std::vector<Rational> ascending);

  static PolyT t() { return monomial(Rational(1), 1); }
  static PolyT monomial(const Rational& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return is_zero() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int power) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& t) const;
  PolyT pow(unsigned e) const;

  PolyT operator-() const;
  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  PolyT& operator*=(const PolyT& o);
  PolyT& operator*=(const Rational& c);

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  friend PolyT operator*(PolyT a, const Rational& c) { return a *= c; }
  friend PolyT operator*(const Rational& c, PolyT a) { return a *= c; }
  friend bool operator==(const PolyT& a, const PolyT& b) = default;

  /// Quotient and remainder of Euclidean division; throws DivisionByZero if d = 0.
  static std::pair<PolyT, PolyT> divmod(const PolyT& p, const PolyT& d);

  /// Human readable form, ascending powers, e.g. "1 - t + 3/2*t^2".
  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient q with p = q*d; throws InexactDivision if d does not divide p.
PolyT exact_divide(const PolyT& p, const PolyT& d);

/// Dense polynomial in two indeterminates. The first one is named "x" by
/// default (the k variable of f_{n,k} reuses the same container), the
/// second is always t. Stored as rows: row i is the PolyT coefficient of
/// x^i.
class PolyXT {
public:
  using Vars = std::array<std::string, 2>;

  PolyXT() = default;
  PolyXT(const PolyT& constant_in_x, Vars vars = default_vars());
  PolyXT(const Rational& c) : PolyXT(PolyT(c)) {}
  PolyXT(int c) : PolyXT(PolyT(c)) {}
  PolyXT(std::vector<PolyT> rows, Vars vars = default_vars());

  static Vars default_vars() { return {"x", "t"}; }
  static PolyXT x(Vars vars = default_vars());
  static PolyXT t(Vars vars = default_vars());

  const Vars& vars() const { return vars_; }
  PolyXT with_vars(Vars vars) const;

  bool is_zero() const { return rows_.empty(); }
  int deg_x() const { return is_zero() ? kMinusInfinity : static_cast<int>(rows_.size()) - 1; }
  int deg_t() const;
  const PolyT& row(int x_power) const;
  const std::vector<PolyT>& rows() const { return rows_; }
  const Rational& coeff(int x_power, int t_power) const { return row(x_power).coeff(t_power); }

  /// Substitutes x := v.
  PolyT eval_x(const Rational& v) const;
  /// Substitutes t := v; the result is constant in t.
  PolyXT eval_t(const Rational& v) const;
  Rational eval(const Rational& x, const Rational& t) const;

  /// p(x + c, t), re-expanded.
  PolyXT shift_x(const Rational& c) const;

  PolyXT operator-() const;
  PolyXT& operator+=(const PolyXT& o);
  PolyXT& operator-=(const PolyXT& o);
  PolyXT& operator*=(const PolyT& c);
  PolyXT& operator*=(const Rational& c);

  friend PolyXT operator+(PolyXT a, const PolyXT& b) { return a += b; }
  friend PolyXT operator-(PolyXT a, const PolyXT& b) { return a -= b; }
  friend PolyXT operator*(const PolyXT& a, const PolyXT& b);
  friend PolyXT operator*(PolyXT a, const PolyT& c) { return a *= c; }
  friend PolyXT operator*(const PolyT& c, PolyXT a) { return a *= c; }
  friend PolyXT operator*(PolyXT a, const Rational& c) { return a *= c; }
  friend PolyXT operator*(const Rational& c, PolyXT a) { return a *= c; }
  friend bool operator==(const PolyXT& a, const PolyXT& b);

  std::string str() const;

private:
  void trim();
  void check_vars(const PolyXT& o) const;
  std::vector<PolyT> rows_;
  Vars vars_ = default_vars();
};

PolyXT exact_divide(const PolyXT& p, const PolyT& d);
/// Long division in x with exact division of leading t-coefficients.
PolyXT exact_divide(const PolyXT& p, const PolyXT& d);

// {"var":"t","coeffs":[Rational,...]} with ascending powers.
void to_json(nlohmann::json& j, const PolyT& p);
void from_json(const nlohmann::json& j, PolyT& p);
// {"vars":["x","t"],"coeffs":[[Rational,...],...]} with row = power of x.
void to_json(nlohmann::json& j, const PolyXT& p);
void from_json(const nlohmann::json& j, PolyXT& p);

}  // namespace genbinom

#endif  // GENBINOM_POLY_HPP
