#ifndef GENBINOM_BINOMIAL_BASIS_HPP
#define GENBINOM_BINOMIAL_BASIS_HPP

#include <vector>

#include "genbinom/poly.hpp"

namespace genbinom {

/// A polynomial in x written as sum_i coeff(i) * binom(x, i), i = 0..k.
/// For the generalized coefficients only i >= 1 is ever nonzero.
struct BinomialExpansion {
  int k = 0;
  std::vector<PolyT> coeffs;  // size k + 1, index = i

  const PolyT& coeff(int i) const;
  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

/// binom(x, i) as a polynomial in x.
PolyXT binomial_poly(int i);

/// Coefficients in the basis binom(x, i) obtained from the values
/// p(0), ..., p(deg_x p) by forward substitution in the unit lower
/// triangular system binom(j, i).
BinomialExpansion to_binomial_basis(const PolyXT& p);

PolyXT from_binomial_basis(const BinomialExpansion& e);

void to_json(nlohmann::json& j, const BinomialExpansion& e);

}  // namespace genbinom

#endif  // GENBINOM_BINOMIAL_BASIS_HPP
