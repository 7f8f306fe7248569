#include "genbinom/latex.hpp"

#include <vector>

namespace genbinom::latex {

namespace {

std::string magnitude(const Rational& r) {
  const Rational m = r.sign() < 0 ? -r : r;
  if (m.is_integer()) return m.str();
  return "\\frac{" + m.numerator().get_str() + "}{" + m.denominator().get_str() + "}";
}

std::string t_power(int e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  return "t^{" + std::to_string(e) + "}";
}

// Joins signed terms: the first keeps a leading "-", later ones become " + " / " - ".
std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string rational(const Rational& r) { return (r.sign() < 0 ? "-" : "") + magnitude(r); }

std::string poly(const PolyT& p) {
  std::vector<std::pair<bool, std::string>> terms;
  for (int e = p.degree(); e >= 0; --e) {
    const Rational& c = p.coeff(e);
    if (c.is_zero()) continue;
    std::string body;
    const bool unit = c == Rational(1) || c == Rational(-1);
    if (e == 0)
      body = magnitude(c);
    else if (unit)
      body = t_power(e);
    else
      body = magnitude(c) + " " + t_power(e);
    terms.emplace_back(c.sign() < 0, body);
  }
  return join_signed(terms);
}

std::string factor(const PolyT& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += c.is_zero() ? 0 : 1;
  if (p == PolyT(1)) return "";
  if (nonzero == 1 && p.leading().sign() > 0) return poly(p);
  return "\\left(" + poly(p) + "\\right)";
}

std::string binomial_form(const BinomialExpansion& e, const std::string& var) {
  std::vector<std::pair<bool, std::string>> terms;
  for (int i = e.k; i >= 0; --i) {
    const PolyT& c = e.coeff(i);
    if (c.is_zero()) continue;
    std::string basis = i == 0 ? "" : (i == 1 ? var : "\\binom{" + var + "}{" + std::to_string(i) + "}");
    int nonzero = 0;
    for (const auto& r : c.coeffs()) nonzero += r.is_zero() ? 0 : 1;
    bool negative = false;
    std::string coeff;
    if (nonzero == 1) {
      // Single monomial: pull its sign out front.
      negative = c.leading().sign() < 0;
      coeff = poly(negative ? -c : c);
      if (coeff == "1" && !basis.empty()) coeff.clear();
    } else {
      coeff = "\\left(" + poly(c) + "\\right)";
    }
    std::string body = coeff;
    if (!basis.empty()) body += (body.empty() ? "" : " ") + basis;
    terms.emplace_back(negative, body);
  }
  return join_signed(terms);
}

}  // namespace genbinom::latex
