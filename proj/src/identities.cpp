#include "genbinom/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "genbinom/binomial_basis.hpp"
#include "genbinom/coefficients.hpp"
#include "genbinom/grid.hpp"
#include "genbinom/hook_psi.hpp"
#include "genbinom/series.hpp"

namespace genbinom {

void to_json(nlohmann::json& j, const IdentityReport& r) {
  auto params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j = nlohmann::json{{"identity", r.identity_id}, {"parameters", params}, {"holds", r.holds}};
  if (r.degree_bounds) j["degree_bounds"] = *r.degree_bounds;
  if (!r.holds) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
}

namespace {

const PolyT kT = PolyT::t();

bool mutated(Variant v) { return v == Variant::negative_control; }

IdentityReport start(std::string id, Variant v) {
  IdentityReport rep;
  rep.identity_id = std::move(id);
  if (mutated(v)) rep.param("negative_control", true);
  return rep;
}

PolyT t_minus_1() { return -one_minus_t(); }

PolyT gb(int n, int k) { return genbinom_at(Rational(n), k); }
PolyT m1(int k) { return genbinom_minus_one(k); }

/// Exact values <x,i> at integer points (x, t), memoized per check.
class ValueCache {
public:
  Rational operator()(int i, const Rational& x, const Rational& t) {
    if (i < 0) return Rational(0);
    const auto key = std::make_tuple(i, x.str(), t.str());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Rational v = genbinom_symbolic(i).eval(x, t);
    cache_.emplace(key, v);
    return v;
  }

private:
  std::map<std::tuple<int, std::string, std::string>, Rational> cache_;
};

IdentityReport grid_report(IdentityReport rep, const GridFunction& lhs, const GridFunction& rhs,
                           std::vector<int> bounds, std::vector<int> actual_degrees) {
  for (std::size_t v = 0; v < bounds.size(); ++v)
    if (actual_degrees[v] > bounds[v])
      throw std::logic_error(rep.identity_id + ": degree bound below the operands' degree");
  rep.degree_bounds = bounds;
  const auto miss = find_grid_mismatch(lhs, rhs, bounds);
  rep.holds = !miss.has_value();
  if (miss) {
    rep.param("witness", *miss);
    rep.lhs = lhs(*miss);
    rep.rhs = rhs(*miss);
  }
  return rep;
}

// x^e with zero allowed to swallow a negative exponent (the displayed
// rows carry t^{k-10} next to coefficients that vanish for small k).
PolyT laurent_term(const Rational& coeff, int t_power) {
  if (coeff.is_zero()) return {};
  if (t_power < 0) throw std::logic_error("negative power of t with a nonzero coefficient");
  return PolyT::monomial(coeff, t_power);
}

Rational binom_r(long n, long k) { return Rational(binom_integer(n, k)); }

// c_{k-j}(k) as displayed, j = 1..5, valid for k >= 6:
// (-1)^j (k-j)/(j+1) t^{k-2j} (t-1) sum_m a_m t^{2(j-m-1)} (t-1)^m.
PolyT displayed_row(int k, int j) {
  std::vector<Rational> a;
  const long kk = k;
  switch (j) {
    case 1: a = {Rational(1)}; break;
    case 2: a = {Rational(1), Rational(3 * (kk - 3), 8)}; break;
    case 3: a = {Rational(1), Rational(4 * kk - 13, 6), binom_r(kk - 4, 2) * Rational(1, 6)}; break;
    case 4:
      a = {Rational(1), Rational(65 * kk - 229, 72), Rational(5 * (2 * kk - 9) * (kk - 5), 48),
           binom_r(kk - 5, 3) * Rational(5, 64)};
      break;
    case 5:
      a = {Rational(1), Rational(66 * kk - 251, 60), Rational(85 * kk * kk - 853 * kk + 2148, 240),
           binom_r(kk - 6, 2) * Rational(4 * kk - 23, 48), binom_r(kk - 6, 4) * Rational(3, 80)};
      break;
    default: throw std::invalid_argument("displayed_row: j must be in 1..5");
  }
  PolyT inner;
  for (int m = 0; m < static_cast<int>(a.size()); ++m)
    inner += laurent_term(a[static_cast<std::size_t>(m)], k - 2 - 2 * m) * t_minus_1().pow(static_cast<unsigned>(m));
  const Rational lead = Rational(j % 2 == 0 ? 1 : -1) * Rational(k - j, j + 1);
  return inner * t_minus_1() * lead;
}

// Right-hand sides of the displayed relations for binom(k,i) c_i(k) / (1-t).
PolyT explicit_display_rhs(int k, int i) {
  const Rational kr(k);
  const PolyT t2_k1 = kT * kT + one_minus_t() * Rational(k - 1, 2);
  switch (i) {
    case 1: return m1(k - 2);
    case 2: return kT * m1(k - 3) - m1(k - 2) * Rational(k - 1);
    case 3: return t2_k1 * m1(k - 4) - kT * m1(k - 3) * Rational(k - 2) + m1(k - 2) * binom_r(k - 1, 2);
    case 4:
      return kT * (kT * kT + one_minus_t() * Rational(5 * k - 8, 6)) * m1(k - 5) -
             t2_k1 * m1(k - 4) * Rational(k - 3) + kT * m1(k - 3) * binom_r(k - 2, 2) -
             m1(k - 2) * binom_r(k - 1, 3);
    default: throw std::invalid_argument("explicit_display_rhs: i must be in 1..4");
  }
}

}  // namespace

// ---------------------------------------------------------------- first values

IdentityReport check_golden_values(int k, Variant v) {
  auto rep = start("golden", v);
  rep.param("k", k);
  const PolyT t = kT;
  std::vector<PolyT> c(static_cast<std::size_t>(k) + 1);
  switch (k) {
    case 1: c[1] = t; break;
    case 2:
      c[2] = t * t;
      c[1] = one_minus_t() * Rational(1, 2);
      break;
    case 3:
      c[3] = t.pow(3);
      c[2] = t * one_minus_t();
      c[1] = t * one_minus_t() * Rational(-1, 3);
      break;
    case 4:
      c[4] = t.pow(4);
      c[3] = t * t * one_minus_t() * Rational(3, 2);
      c[2] = one_minus_t() * PolyT(std::vector<Rational>{Rational(-3), Rational(3), Rational(8)}) * Rational(-1, 12);
      c[1] = (PolyT(1) - t * t) * PolyT(std::vector<Rational>{Rational(-1), Rational(2)}) * Rational(1, 8);
      break;
    default: throw std::invalid_argument("golden values are displayed for k = 1..4");
  }
  if (mutated(v)) c[1] = -c[1];
  return rep.compare(to_binomial_basis(genbinom_symbolic(k)), BinomialExpansion{k, c});
}

// ---------------------------------------------------------------- series

IdentityReport check_theorem1(int order, Variant v) {
  auto rep = start("thm1", v);
  rep.param("order", order);
  TruncSeries h = series_H(order);
  if (mutated(v)) {
    if (order < 3) throw std::invalid_argument("thm1 negative control needs order >= 3");
    h[3] = -h[3];
  }
  return rep.compare(series_mul(series_G(order), h), TruncSeries::constant(PolyT(1), order));
}

IdentityReport check_g_derivative(int order, Variant v) {
  auto rep = start("thm1_derivative", v);
  rep.param("order", order - 1);
  TruncSeries rhs = mul_u(series_H(order - 1)) * (mutated(v) ? t_minus_1() : one_minus_t());
  rhs[0] += kT;
  return rep.compare(series_derivative(series_G(order)), rhs);
}

IdentityReport check_corollary1(int order, Variant v) {
  auto rep = start("cor1", v);
  rep.param("order", order);
  TruncSeries expected = series_G(order);
  if (mutated(v)) expected[2] = -expected[2];
  return rep.compare(solve_ode_G(order), expected);
}

// ---------------------------------------------------------------- Rothe

IdentityReport check_rothe(const Rational& a, const Rational& b, const Rational& c, int n, Variant v) {
  auto rep = start("rothe", v);
  rep.param("A", a).param("B", b).param("C", c).param("n", n);
  Rational lhs;
  for (int k = 0; k <= n; ++k) {
    const Rational base = a + b * Rational(k);
    if (base.is_zero())
      throw PoleInSummand("A + B k vanishes at k = " + std::to_string(k));
    lhs += a / base * binom_rational(base, k) * binom_rational(c - b * Rational(k), n - k);
  }
  const Rational rhs = binom_rational(a + c + (mutated(v) ? Rational(1) : Rational(0)), n);
  return rep.compare(lhs, rhs);
}

IdentityReport check_rothe_at_t(const Rational& t, int n, Variant v) {
  auto rep = start("rothe", v);
  rep.param("t", t).param("n", n);
  const Rational inv = (t - Rational(2)).inverse();
  const Rational a = Rational(1) + inv, b = -inv, c = Rational(-1) - Rational(n + 1) * inv;
  Rational lhs;
  for (int k = 0; k <= n; ++k) {
    // A/(A+Bk) binom(A+Bk, k) = (A/k) binom(A+Bk-1, k-1) for k >= 1.
    const Rational head = k == 0 ? Rational(1) : a / Rational(k) * binom_rational(a + b * Rational(k) - Rational(1), k - 1);
    lhs += head * binom_rational(c - b * Rational(k), n - k);
  }
  const Rational rhs = binom_rational(a + c + (mutated(v) ? Rational(1) : Rational(0)), n);
  return rep.compare(lhs, rhs);
}

IdentityReport check_rothe_xy(const Rational& t, int n, Variant v) {
  auto rep = start("rothe_xy", v);
  rep.param("t", t).param("n", n);
  const Rational two_minus_t = Rational(2) - t;
  auto x_k = [&](int k) { return Rational(k + 1) / two_minus_t; };  // -(k+1)/(t-2)
  auto y_k = [&](int k) { return x_k(k - 2); };
  Rational sum;
  for (int k = 0; k <= n; ++k) {
    const Rational z = y_k(k) + Rational(1);
    Rational head;
    if (k == 0) {
      if (z.is_zero()) throw PoleInSummand("Y_0 + 1 vanishes");
      head = z.inverse();
    } else {
      head = binom_rational(z - Rational(1), k - 1) / Rational(k);  // binom(z,k)/z
    }
    sum += head * binom_rational(x_k(n - k) - Rational(1), n - k);
  }
  const Rational lhs = (Rational(1) - t) / two_minus_t * sum;
  return rep.compare(lhs, binom_rational(x_k(mutated(v) ? n : n - 1), n));
}

// ---------------------------------------------------------------- generating function

IdentityReport check_theorem2(int n, int order, Variant v) {
  auto rep = start("thm2", v);
  rep.param("n", n).param("order", order);
  const TruncSeries power = series_pow_int(series_G(order), static_cast<unsigned>(n));
  std::vector<PolyT> expected;
  for (int k = 0; k <= order; ++k) expected.push_back(gb(mutated(v) ? n + 1 : n, k));
  return rep.compare(power.coeffs(), expected);
}

IdentityReport check_theorem2_symbolic(int max_k, Variant v) {
  auto rep = start("thm2_symbolic", v);
  rep.param("max_k", max_k);
  const auto sym = series_pow_symbolic(mutated(v) ? series_H(max_k) : series_G(max_k));
  std::vector<PolyXT> expected;
  for (int k = 0; k <= max_k; ++k) expected.push_back(genbinom_symbolic(k));
  return rep.compare(sym, expected);
}

// ---------------------------------------------------------------- corollaries

IdentityReport check_corollary2(int k, Variant v) {
  auto rep = start("cor2", v);
  rep.param("k", k);
  return rep.compare(genbinom_minus_one(k), gb(mutated(v) ? 1 : -1, k));
}

IdentityReport check_chu_vandermonde(int k, Variant v) {
  auto rep = start("cor3", v);
  rep.param("k", k);
  auto cache = std::make_shared<ValueCache>();
  const int first = mutated(v) ? 1 : 0;
  GridFunction lhs = [cache, k, first](std::span<const Rational> p) {
    Rational s;
    for (int i = first; i <= k; ++i) s += (*cache)(i, p[0], p[2]) * (*cache)(k - i, p[1], p[2]);
    return s;
  };
  GridFunction rhs = [cache, k](std::span<const Rational> p) { return (*cache)(k, p[0] + p[1], p[2]); };
  int dx = 0, dt = 0;
  for (int i = 0; i <= k; ++i) {
    dx = std::max(dx, genbinom_symbolic(i).deg_x());
    dt = std::max(dt, genbinom_symbolic(i).deg_t() + genbinom_symbolic(k - i).deg_t());
  }
  dt = std::max(dt, genbinom_symbolic(k).deg_t());
  return grid_report(std::move(rep), lhs, rhs, {k, k, k}, {dx, dx, dt});
}

IdentityReport check_chu_vandermonde_weighted(int k, Variant v) {
  auto rep = start("cor4", v);
  rep.param("k", k);
  auto cache = std::make_shared<ValueCache>();
  GridFunction lhs = [cache, k](std::span<const Rational> p) {
    Rational s;
    for (int i = 1; i <= k; ++i) s += Rational(i) * (*cache)(i, p[0], p[2]) * (*cache)(k - i, p[1], p[2]);
    return (p[0] + p[1]) * s;
  };
  const bool flip = mutated(v);
  GridFunction rhs = [cache, k, flip](std::span<const Rational> p) {
    return Rational(k) * (flip ? p[1] : p[0]) * (*cache)(k, p[0] + p[1], p[2]);
  };
  return grid_report(std::move(rep), lhs, rhs, {k + 1, k + 1, k}, {k + 1, k + 1, k});
}

IdentityReport check_corollary5(int n, Variant v) {
  auto rep = start("cor5", v);
  rep.param("n", n);
  if (n < 2) throw std::invalid_argument("cor5 needs n >= 2");
  PolyT sum;
  for (int i = 1; i <= n; ++i) sum += gb(n, n - i) * m1(mutated(v) ? i : i - 1) * Rational(i);
  return rep.compare(sum, PolyT{});
}

IdentityReport check_pascal_down(int m, Variant v) {
  auto rep = start("pascal_down", v);
  rep.param("m", m);
  auto shifted = [](int k) { return genbinom_symbolic(k).shift_x(Rational(-1)); };
  const PolyXT lhs = genbinom_symbolic(m) - shifted(m);
  PolyXT rhs = mutated(v) ? PolyXT{} : shifted(m - 1) * kT;
  PolyXT tail;
  for (int k = 0; k <= m - 2; ++k) {
    const Rational scale(Integer(k % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(k + 2)));
    tail += shifted(m - k - 2) * (weight_product(0, k) * scale);
  }
  rhs += tail * one_minus_t();
  return rep.compare(lhs, rhs);
}

IdentityReport check_pascal_up(int m, Variant v) {
  auto rep = start("pascal_up", v);
  rep.param("m", m);
  auto shifted = [](int k) { return genbinom_symbolic(k).shift_x(Rational(1)); };
  const PolyXT lhs = genbinom_symbolic(m) - shifted(m);
  PolyXT rhs;
  const int last = mutated(v) ? m - 1 : m;
  for (int k = 1; k <= last; ++k) {
    const Rational scale(Integer(k % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(k)));
    rhs += shifted(m - k) * (weight_product(1, k) * scale);
  }
  return rep.compare(lhs, rhs);
}

// ---------------------------------------------------------------- positive integers

IdentityReport check_diagonal(int n, Variant v) {
  auto rep = start("diagonal", v);
  rep.param("n", n);
  const PolyT closed = diagonal(n);
  std::vector<PolyT> lhs{closed}, rhs{gb(n, n)};
  if (n >= 1) {
    lhs.push_back(closed);
    rhs.push_back(PolyT(1) + (mutated(v) ? one_minus_t() : t_minus_1()) * diagonal(n - 1));
  }
  return rep.compare(lhs, rhs);
}

IdentityReport check_divisibility(int n, int k, Variant v) {
  auto rep = start("divisibility", v);
  const int kk = mutated(v) ? n : k;
  rep.param("n", n).param("k", kk);
  const PolyT value = gb(n, kk);
  try {
    const PolyT q = exact_divide(value, one_minus_t());
    return rep.compare(q * one_minus_t(), value);
  } catch (const InexactDivision&) {
    rep.holds = false;
    rep.lhs = value;
    rep.rhs = "not divisible by 1 - t";
    return rep;
  }
}

IdentityReport check_relation_41(int n, int k, Variant v) {
  auto rep = start("rel41", v);
  rep.param("n", n).param("k", k);
  const FTable f = f_table(n);
  const PolyT lhs = gb(n, k) * binom_r(k, n);
  const PolyT rhs = one_minus_t() * f.at(n, k) * m1(mutated(v) ? k - n : k - n - 1);
  return rep.compare(lhs, rhs);
}

IdentityReport check_small_n_display(int n, int k, Variant v) {
  auto rep = start("small_n_display", v);
  rep.param("n", n).param("k", k);
  if (k < n + 1) throw std::invalid_argument("small_n_display needs k >= n + 1");
  const PolyT damp = mutated(v) ? t_minus_1() : one_minus_t();
  PolyT rhs;
  switch (n) {
    case 1: rhs = damp * m1(k - 2); break;
    case 2: rhs = kT * damp * m1(k - 3); break;
    case 3: rhs = damp * (kT * kT + one_minus_t() * Rational(k - 1, 2)) * m1(k - 4); break;
    case 4: rhs = kT * damp * (kT * kT + one_minus_t() * Rational(5 * k - 8, 6)) * m1(k - 5); break;
    default: throw std::invalid_argument("small_n_display covers n = 1..4");
  }
  return rep.compare(gb(n, k) * binom_r(k, n), rhs);
}

IdentityReport check_prop_n_nplus1(int n, Variant v) {
  auto rep = start("prop_n_nplus1", v);
  rep.param("n", n);
  const PolyT lhs = exact_divide(gb(n, n + 1), one_minus_t());
  PolyT rhs;
  for (int i = 1; i <= n; ++i)
    rhs += gb(n, n - i) * m1(i - 1) * (mutated(v) ? Rational(i) : Rational(i, i + 1));
  return rep.compare(lhs, rhs);
}

// ---------------------------------------------------------------- binomial expansion

IdentityReport check_expansion_methods(int k, Variant v) {
  auto rep = start("expansion", v);
  rep.param("k", k);
  const BinomialExpansion direct = to_binomial_basis(genbinom_symbolic(k));
  BinomialExpansion m2 = expansion_method2(k);
  if (mutated(v)) {
    // Explicit formula without the alternating sign.
    const FTable f = f_table(std::max(1, k - 1));
    for (int i = 1; i <= k - 1; ++i) {
      PolyT sum;
      for (int m = 1; m <= i; ++m) sum += f.at(m, k) * m1(k - m - 1) * binom_r(k - m, i - m);
      m2.coeffs[static_cast<std::size_t>(i)] = one_minus_t() * sum * binom_r(k, i).inverse();
    }
  }
  const BinomialExpansion m1_exp = expansion_method1(k);
  rep.compare(std::vector<BinomialExpansion>{m1_exp, m2}, std::vector<BinomialExpansion>{direct, direct});
  return rep;
}

IdentityReport check_expansion_display(int k, Variant v) {
  auto rep = start("expansion_display", v);
  rep.param("k", k);
  if (k < 6) throw std::invalid_argument("the displayed rows hold for k >= 6");
  const BinomialExpansion direct = to_binomial_basis(genbinom_symbolic(k));
  std::vector<PolyT> lhs, rhs;
  for (int j = 1; j <= 5; ++j) {
    lhs.push_back(direct.coeff(k - j));
    rhs.push_back(displayed_row(mutated(v) ? k + 1 : k, j));
  }
  return rep.compare(lhs, rhs);
}

IdentityReport check_explicit_display(int k, Variant v) {
  auto rep = start("explicit_display", v);
  rep.param("k", k);
  if (k < 2) throw std::invalid_argument("explicit_display needs k >= 2");
  const BinomialExpansion direct = to_binomial_basis(genbinom_symbolic(k));
  std::vector<PolyT> lhs, rhs;
  for (int i = 1; i <= std::min(4, k - 1); ++i) {
    lhs.push_back(exact_divide(direct.coeff(i) * binom_r(k, i), one_minus_t()));
    rhs.push_back(mutated(v) ? -explicit_display_rhs(k, i) : explicit_display_rhs(k, i));
  }
  return rep.compare(lhs, rhs);
}

// ---------------------------------------------------------------- hooks

IdentityReport check_psi_golden(int r, Variant v) {
  auto rep = start("psi_golden", v);
  rep.param("r", r);
  const HookSolution h = psi_r(r);
  ExpPoly expected;
  Rational scale;
  switch (r) {
    case 1: scale = Rational(-1); break;
    case 2:
      scale = Rational(2);
      expected = ExpPoly::term(1, PolyT(1)) - ExpPoly::term(0, PolyT(1));
      break;
    case 3:
      scale = Rational(-6);
      expected = (ExpPoly::term(2, PolyT(-1)) + ExpPoly::term(1, PolyT(2)) - ExpPoly::term(0, PolyT(1))) * kT;
      break;
    default: throw std::invalid_argument("psi golden values are displayed for r = 1..3");
  }
  if (mutated(v)) expected = expected * PolyT(-1) + ExpPoly::term(0, PolyT(r == 1 ? 1 : 0));
  nlohmann::json got{{"scale", h.scale}, {"body", h.body}};
  nlohmann::json want{{"scale", scale}, {"body", expected}};
  return rep.compare(got, want);
}

IdentityReport check_psi_c0(int r, Variant v) {
  auto rep = start("psi_c0", v);
  rep.param("r", r);
  const PolyT lhs = psi_r11(r).body.coeff(0) * Rational(-4);
  const PolyT rhs = (mutated(v) ? diagonal(r - 1) : diagonal(r)) * Rational(2 * r * (r + 1));
  return rep.compare(lhs, rhs);
}

IdentityReport check_printed_psi_r11(int r) {
  auto rep = start("ode_s2_printed", Variant::negative_control);
  rep.param("r", r);
  return rep.compare(residual_s2(psi_r11_as_printed(r)), ExpPoly{});
}

IdentityReport check_ode(int s, int r, Variant v) {
  if (!mutated(v)) {
    switch (s) {
      case 0: return verify_system_s0(r);
      case 1: return verify_system_s1(r);
      case 2: return verify_system_s2(r);
      default: throw std::invalid_argument("check_ode: s must be 0, 1 or 2");
    }
  }
  // Sign of the (1-t) psi_{r-1} term flipped.
  auto rep = start("ode_s" + std::to_string(s), v);
  rep.param("r", r);
  switch (s) {
    case 0: return rep.compare(residual_s0(r) - damped_psi_r(r - 1) * PolyT(2), ExpPoly{});
    case 1: return rep.compare(residual_s1(r) + damped_psi_r(r - 1) * PolyT(2), ExpPoly{});
    case 2: return check_printed_psi_r11(r);
    default: throw std::invalid_argument("check_ode: s must be 0, 1 or 2");
  }
}

// ---------------------------------------------------------------- sweep

namespace {

using Case = std::function<IdentityReport()>;

const std::vector<Rational>& rothe_t_values() {
  static const std::vector<Rational> values{Rational(0), Rational(1, 2), Rational(3), Rational(-1), Rational(7, 3)};
  return values;
}

std::vector<Case> cases_for(const std::string& id, const SweepLimits& lim, bool neg) {
  const Variant v = neg ? Variant::negative_control : Variant::faithful;
  std::vector<Case> out;
  auto add = [&out](Case c) { out.push_back(std::move(c)); };
  const int s2_max_r = std::max(1, lim.max_r - 2);

  if (id == "golden") {
    for (int k = 1; k <= 4; ++k) add([=] { return check_golden_values(k, v); });
  } else if (id == "thm1") {
    add([=] { return check_theorem1(lim.order, v); });
  } else if (id == "thm1_derivative") {
    add([=] { return check_g_derivative(lim.order, v); });
  } else if (id == "cor1") {
    add([=] { return check_corollary1(lim.order, v); });
  } else if (id == "rothe") {
    // Classical Vandermonde (B = 0) sanity cases, then the proof's parameters.
    for (auto [a, c, n] : std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {5, -2, 4}, {7, 4, 6}})
      add([=] { return check_rothe(Rational(a), Rational(0), Rational(c), n, v); });
    for (const Rational& t : rothe_t_values())
      for (int n = neg ? 1 : 0; n <= (neg ? 2 : 15); ++n) add([=] { return check_rothe_at_t(t, n, v); });
  } else if (id == "rothe_xy") {
    for (const Rational& t : rothe_t_values())
      for (int n = neg ? 1 : 0; n <= (neg ? 2 : 15); ++n) add([=] { return check_rothe_xy(t, n, v); });
  } else if (id == "thm2") {
    for (int n = neg ? 1 : 0; n <= (neg ? 2 : 10); ++n) add([=] { return check_theorem2(n, 20, v); });
  } else if (id == "thm2_symbolic") {
    add([=] { return check_theorem2_symbolic(15, v); });
  } else if (id == "cor2") {
    for (int k = neg ? 1 : 0; k <= (neg ? 3 : 30); ++k) add([=] { return check_corollary2(k, v); });
  } else if (id == "cor3") {
    for (int k = neg ? 1 : 0; k <= (neg ? 3 : lim.max_k); ++k) add([=] { return check_chu_vandermonde(k, v); });
  } else if (id == "cor4") {
    for (int k = 1; k <= (neg ? 3 : lim.max_k); ++k) add([=] { return check_chu_vandermonde_weighted(k, v); });
  } else if (id == "cor5") {
    for (int n = 2; n <= (neg ? 4 : lim.max_n); ++n) add([=] { return check_corollary5(n, v); });
  } else if (id == "pascal_down") {
    for (int m = 1; m <= (neg ? 3 : lim.max_k); ++m) add([=] { return check_pascal_down(m, v); });
  } else if (id == "pascal_up") {
    for (int m = 1; m <= (neg ? 3 : lim.max_k); ++m) add([=] { return check_pascal_up(m, v); });
  } else if (id == "diagonal") {
    for (int n = neg ? 1 : 0; n <= (neg ? 3 : 30); ++n) add([=] { return check_diagonal(n, v); });
  } else if (id == "divisibility") {
    for (int n = 1; n <= (neg ? 2 : 8); ++n)
      for (int k = n + 1; k <= (neg ? n + 1 : 16); ++k) add([=] { return check_divisibility(n, k, v); });
  } else if (id == "rel41") {
    for (int n = 1; n <= (neg ? 2 : 8); ++n)
      for (int k = n + 1; k <= (neg ? n + 2 : 16); ++k) add([=] { return check_relation_41(n, k, v); });
  } else if (id == "small_n_display") {
    for (int n = 1; n <= 4; ++n)
      for (int k = n + 1; k <= (neg ? n + 1 : 16); ++k) add([=] { return check_small_n_display(n, k, v); });
  } else if (id == "prop_n_nplus1") {
    for (int n = 1; n <= (neg ? 3 : lim.max_n); ++n) add([=] { return check_prop_n_nplus1(n, v); });
  } else if (id == "expansion") {
    for (int k = neg ? 3 : 1; k <= (neg ? 5 : 12); ++k) add([=] { return check_expansion_methods(k, v); });
  } else if (id == "expansion_display") {
    for (int k = 6; k <= (neg ? 7 : 12); ++k) add([=] { return check_expansion_display(k, v); });
  } else if (id == "explicit_display") {
    for (int k = 2; k <= (neg ? 4 : 16); ++k) add([=] { return check_explicit_display(k, v); });
  } else if (id == "psi_golden") {
    for (int r = 1; r <= 3; ++r) add([=] { return check_psi_golden(r, v); });
  } else if (id == "ode_s0" || id == "ode_s1") {
    const int s = id == "ode_s0" ? 0 : 1;
    for (int r = neg ? 3 : 1; r <= (neg ? 5 : lim.max_r); ++r) add([=] { return check_ode(s, r, v); });
  } else if (id == "ode_s2") {
    for (int r = neg ? 2 : 1; r <= (neg ? 4 : s2_max_r); ++r) add([=] { return check_ode(2, r, v); });
  } else if (id == "psi_initial") {
    if (neg) {
      for (int r = 2; r <= 4; ++r)
        add([=] {
          auto rep = start("psi_initial", v);
          rep.param("r", r).param("s", 2).param("printed", true);
          return rep.compare(psi_r11_as_printed(r).body.at_zero(), PolyT{});
        });
    } else {
      for (int s = 0; s <= 2; ++s)
        for (int r = 1; r <= (s == 2 ? s2_max_r : lim.max_r); ++r)
          add([=] { return verify_initial_condition(r, s); });
    }
  } else if (id == "psi_t1") {
    if (neg) {
      for (int r = 2; r <= 4; ++r)
        add([=] {
          auto rep = start("psi_t1", v);
          rep.param("r", r).param("s", 1).param("compared_with_s", 0);
          return rep.compare(psi_r1(r).psi().eval_t(Rational(1)), psi_at_t_equal_one(r, 0));
        });
    } else {
      // At r = 1, s = 0 the t = 1 formula is the constant 1, which breaks
      // psi(0) = 0; psi_1 = 0 is used instead and that case is skipped.
      for (int s = 0; s <= 2; ++s)
        for (int r = s == 0 ? 2 : 1; r <= 8; ++r) add([=] { return verify_t_equal_one(r, s); });
    }
  } else if (id == "psi_recurrence") {
    if (neg) {
      for (int r = 2; r <= 4; ++r)
        add([=] {
          auto rep = start("psi_recurrence", v);
          rep.param("r", r).param("s", 2).param("printed", true);
          const ExpPoly printed = psi_r11_as_printed(r).body, fixed = psi_r11(r).body;
          return rep.compare(printed, fixed);
        });
    } else {
      for (int r = 3; r <= lim.max_r; ++r) add([=] { return verify_coefficient_recurrence(r, 0); });
      for (int r = 1; r <= lim.max_r; ++r) add([=] { return verify_coefficient_recurrence(r, 1); });
      for (int r = 1; r <= s2_max_r; ++r) add([=] { return verify_coefficient_recurrence(r, 2); });
    }
  } else if (id == "psi_c0") {
    for (int r = 1; r <= (neg ? 3 : s2_max_r); ++r) add([=] { return check_psi_c0(r, v); });
  } else {
    throw UnknownIdentity(id);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{
      "golden",        "thm1",         "thm1_derivative", "cor1",          "rothe",
      "rothe_xy",      "thm2",         "thm2_symbolic",   "cor2",          "cor3",
      "cor4",          "cor5",         "pascal_down",     "pascal_up",     "diagonal",
      "divisibility",  "rel41",        "small_n_display", "prop_n_nplus1", "expansion",
      "expansion_display", "explicit_display", "psi_golden", "ode_s0",     "ode_s1",
      "ode_s2",        "psi_initial",  "psi_t1",          "psi_recurrence", "psi_c0"};
  return ids;
}

std::vector<IdentityReport> run_sweep(std::string_view id, const SweepLimits& limits, bool negative_controls,
                                      unsigned threads) {
  std::vector<Case> cases;
  if (id == "all") {
    for (const auto& one : identity_ids()) {
      auto more = cases_for(one, limits, negative_controls);
      std::move(more.begin(), more.end(), std::back_inserter(cases));
    }
  } else {
    cases = cases_for(std::string(id), limits, negative_controls);
  }

  std::vector<IdentityReport> reports(cases.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        reports[i] = cases[i]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace genbinom
