#include "genbinom/hook_psi.hpp"

#include "genbinom/coefficients.hpp"
#include "genbinom/latex.hpp"

namespace genbinom {

// ---------------------------------------------------------------- ExpPoly

ExpPoly ExpPoly::term(int exponent, const PolyT& c) {
  ExpPoly p;
  p.add(exponent, c);
  return p;
}

const PolyT& ExpPoly::coeff(int exponent) const {
  static const PolyT zero;
  auto it = terms_.find(exponent);
  return it == terms_.end() ? zero : it->second;
}

void ExpPoly::add(int exponent, const PolyT& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyT ExpPoly::at_zero() const {
  PolyT sum;
  for (const auto& [i, c] : terms_) sum += c;
  return sum;
}

ExpPoly ExpPoly::eval_t(const Rational& t) const {
  ExpPoly out;
  for (const auto& [i, c] : terms_) out.add(i, PolyT(c.eval(t)));
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const PolyT& c) {
  ExpPoly out;
  for (const auto& [i, v] : terms_) out.add(i, v * c);
  return *this = std::move(out);
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [i, c] : a.terms_)
    for (const auto& [j, d] : b.terms_) out.add(i + j, c * d);
  return out;
}

ExpPoly exp_poly_derivative(const ExpPoly& p) {
  ExpPoly out;
  for (const auto& [i, c] : p.terms()) out.add(i, c * Rational(i));
  return out;
}

// ---------------------------------------------------------------- solutions

namespace {

Rational signed_factorial(int sign_power, int n) {
  const Integer f = factorial(static_cast<unsigned>(n));
  return Rational(sign_power % 2 == 0 ? f : Integer(-f));
}

PolyT gb(int n, int k) { return genbinom_at(Rational(n), k); }

PolyT over_one_minus_t(const PolyT& p) { return exact_divide(p, one_minus_t()); }

}  // namespace

HookSolution psi_r(int r) {
  if (r < 0) throw std::invalid_argument("psi_r: r must be non-negative");
  HookSolution h{r, 0, signed_factorial(r, r), {}};
  if (r <= 1) return h;
  for (int i = 1; i <= r - 1; ++i) h.body.add(i, gb(r - 1, r - i - 1) * genbinom_minus_one(i - 1));
  h.body.add(0, -diagonal(r - 2));
  return h;
}

HookSolution psi_r1(int r) {
  if (r < 0) throw std::invalid_argument("psi_r1: r must be non-negative");
  HookSolution h{r, 1, signed_factorial(r + 1, r + 1), {}};
  if (r == 0) return h;
  for (int i = 1; i <= r - 1; ++i)
    h.body.add(i, gb(r, r - i) * genbinom_minus_one(i - 1) * Rational(r - i, i + 1));
  h.body.add(0, diagonal(r - 1) * Rational(-r));
  h.body.add(-1, over_one_minus_t(gb(r, r + 1)) * Rational(r + 1));
  return h;
}

namespace {

// sign = +1 gives the solution of the s = 2 relation; sign = -1 flips the
// interior (1-t) term, which puts each interior coefficient off by twice it.
HookSolution build_r11(int r, int sign) {
  if (r < 1) throw std::invalid_argument("psi_r11: r must be >= 1");
  HookSolution h{r, 2, signed_factorial(r, r + 2), {}};
  for (int i = 1; i <= r - 1; ++i) {
    const PolyT first = gb(r + 1, r - i + 1) * Rational((r - i) * (r - i + 1), (i + 1) * (i + 2));
    const PolyT second = one_minus_t() * gb(r - 1, r - i - 1) * Rational(i * (r + 1) * (r + 2), 2 * (i + 1) * (i + 2));
    h.body.add(i, (sign > 0 ? first + second : first - second) * genbinom_minus_one(i - 1));
  }
  const Rational b_r1_2(binom_integer(r + 1, 2));
  const Rational b_r2_2(binom_integer(r + 2, 2));
  h.body.add(0, -(diagonal(r) * b_r1_2));
  h.body.add(-1, (over_one_minus_t(gb(r + 1, r + 2)) * Rational(2) - gb(r - 1, r)) * b_r2_2);
  h.body.add(-2, over_one_minus_t(gb(r, r + 2)) * b_r2_2);
  return h;
}

}  // namespace

HookSolution psi_r11(int r) { return build_r11(r, 1); }

HookSolution psi_r11_as_printed(int r) { return build_r11(r, -1); }

HookSolution psi_hook(int r, int s) {
  switch (s) {
    case 0: return psi_r(r);
    case 1: return psi_r1(r);
    case 2: return psi_r11(r);
    default: throw std::invalid_argument("hook solutions are available for s = 0, 1, 2 only");
  }
}

ExpPoly psi_at_t_equal_one(int r, int s) {
  if (r < 1 || s < 0) throw std::invalid_argument("psi_at_t_equal_one needs r >= 1, s >= 0");
  const ExpPoly up = ExpPoly::term(1, PolyT(1)) - ExpPoly::term(0, PolyT(1));
  const ExpPoly down = ExpPoly::term(-1, PolyT(1)) - ExpPoly::term(0, PolyT(1));
  ExpPoly out = ExpPoly::term(0, PolyT(Rational(Integer(1), factorial(static_cast<unsigned>(r + s)))));
  for (int i = 0; i < r - 1; ++i) out = out * up;
  for (int i = 0; i < s; ++i) out = out * down;
  return out;
}

// ---------------------------------------------------------------- residuals

ExpPoly empty_hook_damped() { return ExpPoly::term(0, PolyT(-1)); }

ExpPoly damped_psi_r(int r) {
  if (r == 0) return empty_hook_damped();
  return psi_r(r).psi() * one_minus_t();
}

namespace {

ExpPoly d(const ExpPoly& p) { return exp_poly_derivative(p); }
PolyT c(long v) { return PolyT(Rational(v)); }

ExpPoly damped_previous(int r) { return damped_psi_r(r - 1); }

}  // namespace

// (r+1) psi'_{r+1} = r(r+1) psi_{r+1} + t r psi_r - (1-t) psi_{r-1}
ExpPoly residual_s0(int r) {
  if (r < 1) throw std::invalid_argument("residual_s0 needs r >= 1");
  const ExpPoly next = psi_r(r + 1).psi(), cur = psi_r(r).psi();
  const ExpPoly lhs = d(next) * c(r + 1);
  const ExpPoly rhs = next * c(r * (r + 1)) + cur * (PolyT::t() * Rational(r)) - damped_previous(r);
  return lhs - rhs;
}

// (r+1) psi'_{r,1} = -(r+1) psi_{r,1} - t r psi_r + (1-t) psi_{r-1}
ExpPoly residual_s1(int r) {
  if (r < 1) throw std::invalid_argument("residual_s1 needs r >= 1");
  const ExpPoly hook = psi_r1(r).psi(), cur = psi_r(r).psi();
  const ExpPoly lhs = d(hook) * c(r + 1);
  const ExpPoly rhs = hook * c(-(r + 1)) - cur * (PolyT::t() * Rational(r)) + damped_previous(r);
  return lhs - rhs;
}

// r psi'_{r+1,1} - 2 psi'_{r,1^2}
//   = r^2 psi_{r+1,1} + 4 psi_{r,1^2} + t(r+1) psi_{r,1} - (1-t)(psi_{r-1,1} + psi_r)
ExpPoly residual_s2(int r) {
  if (r < 1) throw std::invalid_argument("residual_s2 needs r >= 1");
  return residual_s2(psi_r11(r));
}

ExpPoly residual_s2(const HookSolution& r11) {
  const int r = r11.r;
  const ExpPoly next1 = psi_r1(r + 1).psi(), two = r11.psi();
  const ExpPoly cur1 = psi_r1(r).psi(), prev1 = psi_r1(r - 1).psi(), cur = psi_r(r).psi();
  const ExpPoly lhs = d(next1) * c(r) - d(two) * c(2);
  const ExpPoly rhs = next1 * c(r * r) + two * c(4) + cur1 * (PolyT::t() * Rational(r + 1)) -
                      (prev1 + cur) * one_minus_t();
  return lhs - rhs;
}

namespace {

IdentityReport residual_report(const std::string& id, int r, const ExpPoly& residual) {
  IdentityReport rep{id, {}, residual.is_zero(), {}, {}, {}};
  rep.param("r", r);
  if (!rep.holds) {
    rep.lhs = residual;
    rep.rhs = ExpPoly{};
  }
  return rep;
}

}  // namespace

IdentityReport verify_system_s0(int r) { return residual_report("ode_s0", r, residual_s0(r)); }
IdentityReport verify_system_s1(int r) { return residual_report("ode_s1", r, residual_s1(r)); }
IdentityReport verify_system_s2(int r) { return residual_report("ode_s2", r, residual_s2(r)); }

IdentityReport verify_initial_condition(int r, int s) {
  IdentityReport rep{"psi_initial", {}, false, {}, {}, {}};
  rep.param("r", r).param("s", s);
  return rep.compare(psi_hook(r, s).body.at_zero(), PolyT{});
}

IdentityReport verify_t_equal_one(int r, int s) {
  IdentityReport rep{"psi_t1", {}, false, {}, {}, {}};
  rep.param("r", r).param("s", s);
  return rep.compare(psi_hook(r, s).psi().eval_t(Rational(1)), psi_at_t_equal_one(r, s));
}

IdentityReport verify_coefficient_recurrence(int r, int s) {
  IdentityReport rep{"psi_recurrence", {}, true, {}, {}, {}};
  rep.param("r", r).param("s", s);
  const PolyT t = PolyT::t();
  auto record = [&rep](int i, const PolyT& lhs, const PolyT& rhs) {
    if (rep.holds && lhs != rhs) {
      rep.holds = false;
      rep.param("i", i);
      rep.lhs = lhs;
      rep.rhs = rhs;
    }
  };
  if (s == 0) {
    // (r-i-1) a_i^(r) = (r-1) (t a_i^(r-1) + (1-t) a_i^(r-2)),  0 <= i <= r-2
    if (r < 3) throw std::invalid_argument("s = 0 recurrence needs r >= 3");
    const ExpPoly a = psi_r(r).body, a1 = psi_r(r - 1).body, a2 = psi_r(r - 2).body;
    for (int i = 0; i <= r - 2; ++i)
      record(i, a.coeff(i) * Rational(r - i - 1),
             (t * a1.coeff(i) + one_minus_t() * a2.coeff(i)) * Rational(r - 1));
  } else if (s == 1) {
    // (i+1) b_i^(r) = r (t a_i^(r) + (1-t) a_i^(r-1)),  0 <= i <= r-1
    if (r < 1) throw std::invalid_argument("s = 1 recurrence needs r >= 1");
    const ExpPoly b = psi_r1(r).body, a = psi_r(r).body, a1 = psi_r(r - 1).body;
    // psi_0 carries scale 0! = 1, so its damped coefficients enter unchanged.
    const ExpPoly damped = r == 1 ? empty_hook_damped() : a1 * one_minus_t();
    for (int i = 0; i <= r - 1; ++i)
      record(i, b.coeff(i) * Rational(i + 1), (t * a.coeff(i) + damped.coeff(i)) * Rational(r));
  } else if (s == 2) {
    // -2(i+2) c_i^(r) = r(r-i) b_i^(r+1) - (r+1)(r+2)(t b_i^(r) + (1-t)(b_i^(r-1) + a_i^(r))),
    // -1 <= i <= r-1
    if (r < 1) throw std::invalid_argument("s = 2 recurrence needs r >= 1");
    const ExpPoly cc = psi_r11(r).body, b_next = psi_r1(r + 1).body, b = psi_r1(r).body,
                  b_prev = psi_r1(r - 1).body, a = psi_r(r).body;
    for (int i = -1; i <= r - 1; ++i)
      record(i, cc.coeff(i) * Rational(-2 * (i + 2)),
             b_next.coeff(i) * Rational(r * (r - i)) -
                 (t * b.coeff(i) + one_minus_t() * (b_prev.coeff(i) + a.coeff(i))) * Rational((r + 1) * (r + 2)));
  } else {
    throw std::invalid_argument("s must be 0, 1 or 2");
  }
  return rep;
}

// ---------------------------------------------------------------- output

void to_json(nlohmann::json& j, const ExpPoly& p) {
  j = nlohmann::json::object();
  for (const auto& [i, c] : p.terms()) j[std::to_string(i)] = c;
}

void from_json(const nlohmann::json& j, ExpPoly& p) {
  if (!j.is_object()) throw std::invalid_argument("exponential polynomial must be an object");
  p = ExpPoly{};
  for (const auto& [key, value] : j.items()) p.add(std::stoi(key), value.get<PolyT>());
}

void to_json(nlohmann::json& j, const HookSolution& h) {
  j = nlohmann::json{{"r", h.r}, {"s", h.s}, {"scale", h.scale}, {"terms", h.body}};
}

void from_json(const nlohmann::json& j, HookSolution& h) {
  h.r = j.at("r").get<int>();
  h.s = j.at("s").get<int>();
  h.scale = j.at("scale").get<Rational>();
  h.body = j.at("terms").get<ExpPoly>();
}

namespace latex {

std::string exp_poly(const ExpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [i, c] = *it;
    std::string e = i == 0 ? "" : (i == 1 ? "e^{u}" : (i == -1 ? "e^{-u}" : "e^{" + std::to_string(i) + "u}"));
    int nonzero = 0;
    for (const auto& v : c.coeffs()) nonzero += v.is_zero() ? 0 : 1;
    bool negative = false;
    std::string coeff;
    if (nonzero == 1) {
      negative = c.leading().sign() < 0;
      coeff = poly(negative ? -c : c);
      if (coeff == "1" && !e.empty()) coeff.clear();
    } else {
      coeff = "\\left(" + poly(c) + "\\right)";
    }
    std::string body = coeff;
    if (!e.empty()) body += (body.empty() ? "" : " ") + e;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string hook_solution(const HookSolution& h) {
  std::string name = "\\psi_{" + std::to_string(h.r);
  if (h.s == 1) name += ",1";
  if (h.s == 2) name += ",1^{2}";
  name += "}";
  std::string scale = h.scale == Rational(1) ? "" : (h.scale == Rational(-1) ? "-" : rational(h.scale));
  return scale + name + " = " + exp_poly(h.body);
}

}  // namespace latex

}  // namespace genbinom
