#ifndef GENBINOM_SERIES_HPP
#define GENBINOM_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "genbinom/poly.hpp"

namespace genbinom {

class NonUnitConstantTerm : public std::domain_error {
public:
  NonUnitConstantTerm() : std::domain_error("series constant term is not a nonzero rational") {}
};

class ConstantTermNotOne : public std::domain_error {
public:
  ConstantTermNotOne() : std::domain_error("series constant term is not 1") {}
};

/// Power series in u with PolyT coefficients, truncated after u^order.
/// Always holds exactly order + 1 coefficients; zeros are kept. Binary
/// operations truncate to the smaller order.
class TruncSeries {
public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<PolyT> coeffs);

  /// The constant series c at the given order.
  static TruncSeries constant(const PolyT& c, int order);

  int order() const { return order_; }
  const PolyT& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  PolyT& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<PolyT>& coeffs() const { return coeffs_; }

  TruncSeries truncate(int order) const;
  /// True when every coefficient equals that of the constant series 1.
  bool is_one() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const PolyT& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const PolyT& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
  int order_;
  std::vector<PolyT> coeffs_;
};

/// u * a, keeping the order of a (the top coefficient falls off).
TruncSeries mul_u(const TruncSeries& a);

/// Product of the factors (k - i + 1 + (t - 1) i) over i = first..k.
PolyT weight_product(int first, int k);

TruncSeries series_G(int order);
TruncSeries series_H(int order);

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_inverse(const TruncSeries& a);
TruncSeries series_derivative(const TruncSeries& a);

/// G from G(0) = 1 and G G' = t G + (1 - t) u, coefficient by coefficient.
TruncSeries solve_ode_G(int order);

TruncSeries series_pow_int(const TruncSeries& a, unsigned n);
TruncSeries series_log(const TruncSeries& a);
/// Coefficients 0..order of a^x as polynomials in (x, t).
std::vector<PolyXT> series_pow_symbolic(const TruncSeries& a);

// {"var":"u","order":N,"coeffs":[PolyT,...]}
void to_json(nlohmann::json& j, const TruncSeries& s);
void from_json(const nlohmann::json& j, TruncSeries& s);

}  // namespace genbinom

#endif  // GENBINOM_SERIES_HPP
