#include "genbinom/poly.hpp"

#include <algorithm>
#include <sstream>

namespace genbinom {

namespace {
const Rational kZero{};
const PolyT kZeroPoly{};
}  // namespace

// ---------------------------------------------------------------- PolyT

PolyT::PolyT(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

PolyT::PolyT(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

PolyT PolyT::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("negative power in PolyT::monomial");
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return PolyT(std::move(v));
}

void PolyT::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& PolyT::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational PolyT::eval(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PolyT PolyT::pow(unsigned e) const {
  PolyT result(1);
  PolyT base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

PolyT PolyT::operator-() const {
  PolyT r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyT& PolyT::operator+=(const PolyT& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyT(std::move(out));
}

PolyT& PolyT::operator*=(const PolyT& o) { return *this = *this * o; }

PolyT& PolyT::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<PolyT, PolyT> PolyT::divmod(const PolyT& p, const PolyT& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (p.degree() < d.degree()) return {PolyT{}, p};
  std::vector<Rational> rem = p.coeffs_;
  const int dd = d.degree();
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd));
  const Rational lead_inv = d.leading().inverse();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * d.coeffs_[static_cast<std::size_t>(j)];
  }
  return {PolyT(std::move(quot)), PolyT(std::move(rem))};
}

PolyT exact_divide(const PolyT& p, const PolyT& d) {
  auto [q, r] = PolyT::divmod(p, d);
  if (!r.is_zero())
    throw InexactDivision("(" + p.str() + ") is not divisible by (" + d.str() + ")");
  return q;
}

std::string PolyT::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- PolyXT

PolyXT::PolyXT(const PolyT& constant_in_x, Vars vars) : vars_(std::move(vars)) {
  if (!constant_in_x.is_zero()) rows_.push_back(constant_in_x);
}

PolyXT::PolyXT(std::vector<PolyT> rows, Vars vars) : rows_(std::move(rows)), vars_(std::move(vars)) {
  trim();
}

PolyXT PolyXT::x(Vars vars) { return PolyXT(std::vector<PolyT>{PolyT{}, PolyT(1)}, std::move(vars)); }

PolyXT PolyXT::t(Vars vars) { return PolyXT(PolyT::t(), std::move(vars)); }

PolyXT PolyXT::with_vars(Vars vars) const {
  PolyXT r = *this;
  r.vars_ = std::move(vars);
  return r;
}

void PolyXT::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

void PolyXT::check_vars(const PolyXT& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("mixing polynomials in (" + vars_[0] + "," + vars_[1] + ") and (" +
                                o.vars_[0] + "," + o.vars_[1] + ")");
}

int PolyXT::deg_t() const {
  int d = kMinusInfinity;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

const PolyT& PolyXT::row(int x_power) const {
  if (x_power < 0 || x_power >= static_cast<int>(rows_.size())) return kZeroPoly;
  return rows_[static_cast<std::size_t>(x_power)];
}

PolyT PolyXT::eval_x(const Rational& v) const {
  PolyT acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

PolyXT PolyXT::eval_t(const Rational& v) const {
  std::vector<PolyT> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.emplace_back(r.eval(v));
  return PolyXT(std::move(rows), vars_);
}

Rational PolyXT::eval(const Rational& x, const Rational& t) const {
  Rational acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + it->eval(t);
  return acc;
}

PolyXT PolyXT::shift_x(const Rational& c) const {
  // Horner in (x + c).
  std::vector<PolyT> acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    std::vector<PolyT> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * c;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return PolyXT(std::move(acc), vars_);
}

PolyXT PolyXT::operator-() const {
  PolyXT r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

PolyXT& PolyXT::operator+=(const PolyXT& o) {
  if (is_zero() && o.is_zero()) return *this;
  if (!is_zero() && !o.is_zero()) check_vars(o);
  if (is_zero()) vars_ = o.vars_;
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

PolyXT& PolyXT::operator-=(const PolyXT& o) { return *this += -o; }

PolyXT& PolyXT::operator*=(const PolyT& c) {
  for (auto& r : rows_) r *= c;
  trim();
  return *this;
}

PolyXT& PolyXT::operator*=(const Rational& c) {
  for (auto& r : rows_) r *= c;
  trim();
  return *this;
}

PolyXT operator*(const PolyXT& a, const PolyXT& b) {
  if (a.is_zero() || b.is_zero()) return PolyXT(PolyT{}, a.is_zero() ? b.vars_ : a.vars_);
  a.check_vars(b);
  std::vector<PolyT> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
  }
  return PolyXT(std::move(out), a.vars_);
}

bool operator==(const PolyXT& a, const PolyXT& b) {
  // The zero polynomial is the same in every pair of indeterminates.
  if (a.is_zero() && b.is_zero()) return true;
  return a.vars_ == b.vars_ && a.rows_ == b.rows_;
}

std::string PolyXT::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rows_[i].str() << ")";
    if (i > 0) os << "*" << vars_[0];
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PolyXT exact_divide(const PolyXT& p, const PolyT& d) {
  std::vector<PolyT> rows;
  rows.reserve(p.rows().size());
  for (const auto& r : p.rows()) rows.push_back(exact_divide(r, d));
  return PolyXT(std::move(rows), p.vars());
}

PolyXT exact_divide(const PolyXT& p, const PolyXT& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return PolyXT(PolyT{}, d.vars());
  if (p.vars() != d.vars()) throw std::invalid_argument("exact_divide: indeterminate mismatch");
  std::vector<PolyT> rem = p.rows();
  const int dd = d.deg_x();
  if (static_cast<int>(rem.size()) - 1 < dd)
    throw InexactDivision("(" + p.str() + ") is not divisible by (" + d.str() + ")");
  std::vector<PolyT> quot(rem.size() - static_cast<std::size_t>(dd));
  const PolyT& lead = d.row(dd);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
    PolyT q;
    try {
      q = exact_divide(rem[static_cast<std::size_t>(i)], lead);
    } catch (const InexactDivision&) {
      throw InexactDivision("(" + p.str() + ") is not divisible by (" + d.str() + ")");
    }
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * d.row(j);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw InexactDivision("(" + p.str() + ") is not divisible by (" + d.str() + ")");
  return PolyXT(std::move(quot), p.vars());
}

// ---------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const PolyT& p) {
  j = nlohmann::json{{"var", "t"}, {"coeffs", p.coeffs()}};
}

void from_json(const nlohmann::json& j, PolyT& p) {
  if (j.at("var").get<std::string>() != "t") throw std::invalid_argument("PolyT var must be \"t\"");
  p = PolyT(j.at("coeffs").get<std::vector<Rational>>());
}

void to_json(nlohmann::json& j, const PolyXT& p) {
  auto rows = nlohmann::json::array();
  for (const auto& r : p.rows()) rows.push_back(r.coeffs());
  j = nlohmann::json{{"vars", p.vars()}, {"coeffs", rows}};
}

void from_json(const nlohmann::json& j, PolyXT& p) {
  const auto vars = j.at("vars").get<PolyXT::Vars>();
  std::vector<PolyT> rows;
  for (const auto& r : j.at("coeffs")) rows.emplace_back(r.get<std::vector<Rational>>());
  p = PolyXT(std::move(rows), vars);
}

}  // namespace genbinom
