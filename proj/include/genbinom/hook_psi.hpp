#ifndef GENBINOM_HOOK_PSI_HPP
#define GENBINOM_HOOK_PSI_HPP

#include <map>
#include <string>

#include "genbinom/poly.hpp"
#include "genbinom/report.hpp"

namespace genbinom {

/// Finite sum  sum_i c_i e^{i u}  with PolyT coefficients; zero
/// coefficients are never stored.
class ExpPoly {
public:
  ExpPoly() = default;
  static ExpPoly term(int exponent, const PolyT& c);

  const std::map<int, PolyT>& terms() const { return terms_; }
  const PolyT& coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  void add(int exponent, const PolyT& c);

  /// Value at u = 0, the sum of all coefficients.
  PolyT at_zero() const;
  ExpPoly eval_t(const Rational& t) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const PolyT& c);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const PolyT& c) { return a *= c; }
  friend ExpPoly operator*(const PolyT& c, ExpPoly a) { return a *= c; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

private:
  std::map<int, PolyT> terms_;
};

ExpPoly exp_poly_derivative(const ExpPoly& p);

/// A hook solution psi_{r,1^s} = body / scale, where scale is the signed
/// factorial prefactor the closed forms are written with.
struct HookSolution {
  int r = 0;
  int s = 0;
  Rational scale;
  ExpPoly body;

  ExpPoly psi() const { return body * PolyT(scale.inverse()); }
};

/// (-1)^r r! psi_r.  r = 0 yields the zero solution.
HookSolution psi_r(int r);
/// (-1)^{r+1} (r+1)! psi_{r,1}.  r = 0 yields the zero solution.
HookSolution psi_r1(int r);
/// (-1)^r (r+2)! psi_{r,1^2}.
HookSolution psi_r11(int r);
/// psi_{r,1^2} with the sign of the interior (1-t) term flipped. Kept for
/// regression: it fails the s = 2 relation for every r >= 2.
HookSolution psi_r11_as_printed(int r);
HookSolution psi_hook(int r, int s);

/// (e^u - 1)^{r-1} (e^{-u} - 1)^s / (r+s)!, the solution at t = 1.
ExpPoly psi_at_t_equal_one(int r, int s);

/// (1-t) psi_0 for the empty partition, which enters the s = 0 and s = 1
/// relations at r = 1. It is the constant -1: the value forced by the r = 1
/// instance of either relation, and the two agree.
ExpPoly empty_hook_damped();
/// (1-t) psi_r, using empty_hook_damped() at r = 0.
ExpPoly damped_psi_r(int r);

/// Residuals (left minus right) of the three differential relations, r >= 1.
ExpPoly residual_s0(int r);
ExpPoly residual_s1(int r);
ExpPoly residual_s2(int r);
/// The s = 2 residual with a caller-supplied psi_{r,1^2}.
ExpPoly residual_s2(const HookSolution& r11);

IdentityReport verify_system_s0(int r);
IdentityReport verify_system_s1(int r);
IdentityReport verify_system_s2(int r);
IdentityReport verify_initial_condition(int r, int s);
IdentityReport verify_t_equal_one(int r, int s);
/// Coefficient recurrences obtained by identifying exponentials, for
/// s = 0, 1, 2 respectively.
IdentityReport verify_coefficient_recurrence(int r, int s);

// {"r":..,"s":..,"scale":Rational,"terms":{"i":PolyT,..}}
void to_json(nlohmann::json& j, const ExpPoly& p);
void from_json(const nlohmann::json& j, ExpPoly& p);
void to_json(nlohmann::json& j, const HookSolution& h);
void from_json(const nlohmann::json& j, HookSolution& h);

namespace latex {
/// sum of c_i e^{iu}, descending i.
std::string exp_poly(const ExpPoly& p);
/// "<scale> \psi_{...} = <body>".
std::string hook_solution(const HookSolution& h);
}  // namespace latex

}  // namespace genbinom

#endif  // GENBINOM_HOOK_PSI_HPP
