#include "genbinom/binomial_basis.hpp"

namespace genbinom {

const PolyT& BinomialExpansion::coeff(int i) const {
  static const PolyT zero;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return zero;
  return coeffs[static_cast<std::size_t>(i)];
}

PolyXT binomial_poly(int i) {
  PolyXT p(1);
  for (int j = 0; j < i; ++j) p = p * (PolyXT::x() - PolyXT(j));
  return p * Rational(Integer(1), factorial(static_cast<unsigned>(i)));
}

BinomialExpansion to_binomial_basis(const PolyXT& p) {
  const int k = p.is_zero() ? 0 : p.deg_x();
  BinomialExpansion e{k, std::vector<PolyT>(static_cast<std::size_t>(k) + 1)};
  for (int j = 0; j <= k; ++j) {
    PolyT c = p.eval_x(Rational(j));
    for (int i = 0; i < j; ++i) c -= e.coeffs[static_cast<std::size_t>(i)] * Rational(binom_integer(j, i));
    e.coeffs[static_cast<std::size_t>(j)] = std::move(c);
  }
  return e;
}

PolyXT from_binomial_basis(const BinomialExpansion& e) {
  PolyXT p;
  for (int i = 0; i < static_cast<int>(e.coeffs.size()); ++i)
    if (!e.coeffs[static_cast<std::size_t>(i)].is_zero()) p += binomial_poly(i) * e.coeffs[static_cast<std::size_t>(i)];
  return p;
}

void to_json(nlohmann::json& j, const BinomialExpansion& e) {
  auto terms = nlohmann::json::array();
  for (int i = 1; i < static_cast<int>(e.coeffs.size()); ++i)
    terms.push_back({{"i", i}, {"coeff", e.coeffs[static_cast<std::size_t>(i)]}});
  j = nlohmann::json{{"k", e.k}, {"terms", terms}};
}

}  // namespace genbinom
