#ifndef GENBINOM_LATEX_HPP
#define GENBINOM_LATEX_HPP

#include <string>

#include "genbinom/binomial_basis.hpp"

namespace genbinom::latex {

std::string rational(const Rational& r);
/// Powers of t in descending order, e.g. "t^{2} - t + 1".
std::string poly(const PolyT& p);
/// Coefficient as a factor: bare when it is a single term, otherwise
/// wrapped in \left( \right). Empty string stands for the factor 1.
std::string factor(const PolyT& p);
/// sum_i c_i binom(x, i) with i descending; binom(x, 1) is written x.
std::string binomial_form(const BinomialExpansion& e, const std::string& var = "x");

}  // namespace genbinom::latex

#endif  // GENBINOM_LATEX_HPP
