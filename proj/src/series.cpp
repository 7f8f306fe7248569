#include "genbinom/series.hpp"

#include <algorithm>

namespace genbinom {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, std::vector<PolyT> coeffs) : TruncSeries(order) {
  if (coeffs.size() > coeffs_.size()) throw std::invalid_argument("more coefficients than order + 1");
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncSeries TruncSeries::constant(const PolyT& c, int order) {
  TruncSeries s(order);
  s[0] = c;
  return s;
}

TruncSeries TruncSeries::truncate(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise the truncation order");
  return TruncSeries(order, std::vector<PolyT>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncSeries::is_one() const {
  if (coeffs_[0] != PolyT(1)) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const PolyT& p) { return p.is_zero(); });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (int n = 0; n <= order_; ++n) (*this)[n] += o[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (int n = 0; n <= order_; ++n) (*this)[n] -= o[n];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const PolyT& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncSeries mul_u(const TruncSeries& a) {
  TruncSeries out(a.order());
  for (int n = 1; n <= a.order(); ++n) out[n] = a[n - 1];
  return out;
}

PolyT weight_product(int first, int k) {
  // k - i + 1 + (t - 1) i = (k + 1 - 2i) + i t
  PolyT p(1);
  for (int i = first; i <= k; ++i) p *= PolyT({Rational(k + 1 - 2 * i), Rational(i)});
  return p;
}

TruncSeries series_G(int order) {
  TruncSeries g(order);
  g[0] = PolyT(1);
  if (order >= 1) g[1] = PolyT::t();
  const PolyT one_minus_t({Rational(1), Rational(-1)});
  for (int k = 0; k + 2 <= order; ++k) {
    Rational scale(Integer(k % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(k + 2)));
    g[k + 2] = one_minus_t * weight_product(0, k) * scale;
  }
  return g;
}

TruncSeries series_H(int order) {
  TruncSeries h(order);
  h[0] = PolyT(1);
  for (int k = 1; k <= order; ++k) {
    Rational scale(Integer(k % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(k)));
    h[k] = weight_product(1, k) * scale;
  }
  return h;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_inverse(const TruncSeries& a) {
  if (a[0].is_zero() || !a[0].is_constant()) throw NonUnitConstantTerm();
  const Rational inv = a[0].coeff(0).inverse();
  TruncSeries b(a.order());
  b[0] = PolyT(inv);
  for (int n = 1; n <= a.order(); ++n) {
    PolyT acc;
    for (int j = 1; j <= n; ++j) acc += a[j] * b[n - j];
    b[n] = -(acc * inv);
  }
  return b;
}

TruncSeries series_derivative(const TruncSeries& a) {
  if (a.order() < 1) throw std::invalid_argument("derivative needs order >= 1");
  TruncSeries d(a.order() - 1);
  for (int n = 1; n <= a.order(); ++n) d[n - 1] = a[n] * Rational(n);
  return d;
}

TruncSeries solve_ode_G(int order) {
  TruncSeries g(order);
  g[0] = PolyT(1);
  const PolyT t = PolyT::t();
  const PolyT one_minus_t({Rational(1), Rational(-1)});
  // Coefficient of u^n in G G' = t G + (1 - t) u, solved for g_{n+1}.
  for (int n = 0; n + 1 <= order; ++n) {
    PolyT rhs = t * g[n];
    if (n == 1) rhs += one_minus_t;
    for (int j = 0; j <= n - 1; ++j) rhs -= g[j + 1] * g[n - j] * Rational(j + 1);
    g[n + 1] = rhs * Rational(1, n + 1);
  }
  return g;
}

TruncSeries series_pow_int(const TruncSeries& a, unsigned n) {
  TruncSeries result = TruncSeries::constant(PolyT(1), a.order());
  TruncSeries base = a;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

TruncSeries series_log(const TruncSeries& a) {
  if (a[0] != PolyT(1)) throw ConstantTermNotOne();
  // n L_n = n a_n - sum_{j=1}^{n-1} j L_j a_{n-j}, from L' a = a'.
  TruncSeries l(a.order());
  for (int n = 1; n <= a.order(); ++n) {
    PolyT acc = a[n] * Rational(n);
    for (int j = 1; j < n; ++j) acc -= l[j] * a[n - j] * Rational(j);
    l[n] = acc * Rational(1, n);
  }
  return l;
}

std::vector<PolyXT> series_pow_symbolic(const TruncSeries& a) {
  const TruncSeries l = series_log(a);
  // E' = x L' E:  n E_n = x sum_{j=1}^{n} j L_j E_{n-j}.
  std::vector<PolyXT> e(static_cast<std::size_t>(a.order()) + 1);
  e[0] = PolyXT(1);
  const PolyXT x = PolyXT::x();
  for (int n = 1; n <= a.order(); ++n) {
    PolyXT acc;
    for (int j = 1; j <= n; ++j) acc += e[static_cast<std::size_t>(n - j)] * (l[j] * Rational(j));
    e[static_cast<std::size_t>(n)] = x * acc * Rational(1, n);
  }
  return e;
}

void to_json(nlohmann::json& j, const TruncSeries& s) {
  j = nlohmann::json{{"var", "u"}, {"order", s.order()}, {"coeffs", s.coeffs()}};
}

void from_json(const nlohmann::json& j, TruncSeries& s) {
  if (j.at("var").get<std::string>() != "u") throw std::invalid_argument("series var must be \"u\"");
  const int order = j.at("order").get<int>();
  auto coeffs = j.at("coeffs").get<std::vector<PolyT>>();
  if (static_cast<int>(coeffs.size()) != order + 1)
    throw std::invalid_argument("series must carry order + 1 coefficients");
  s = TruncSeries(order, std::move(coeffs));
}

}  // namespace genbinom
