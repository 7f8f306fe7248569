#include "genbinom/coefficients.hpp"

#include <stdexcept>

#include "genbinom/series.hpp"

namespace genbinom {

PolyT one_minus_t() { return PolyT(std::vector<Rational>{Rational(1), Rational(-1)}); }

const PolyXT& GenBinomTable::symbolic(int k) {
  if (k < 0) throw std::invalid_argument("GenBinomTable::symbolic: negative k");
  std::lock_guard lock(mutex_);
  if (entries_.empty()) entries_.emplace_back(1);
  const PolyXT x = PolyXT::x();
  const PolyT t = PolyT::t();
  while (static_cast<int>(entries_.size()) <= k) {
    const int n = static_cast<int>(entries_.size());
    PolyXT next = entries_[static_cast<std::size_t>(n - 1)].shift_x(Rational(-1)) * t;
    if (n >= 2) next += entries_[static_cast<std::size_t>(n - 2)].shift_x(Rational(-2)) * one_minus_t();
    entries_.push_back(x * next * Rational(1, n));
  }
  return entries_[static_cast<std::size_t>(k)];
}

int GenBinomTable::max_k() const {
  std::lock_guard lock(mutex_);
  return static_cast<int>(entries_.size()) - 1;
}

GenBinomTable& GenBinomTable::shared() {
  static GenBinomTable table;
  return table;
}

PolyXT genbinom_symbolic(int k) {
  if (k < 0) return {};
  return GenBinomTable::shared().symbolic(k);
}

PolyT genbinom_at(const Rational& n, int k) {
  if (k < 0) return {};
  return GenBinomTable::shared().symbolic(k).eval_x(n);
}

PolyT genbinom_minus_one(int k) {
  if (k < 0) return {};
  return weight_product(1, k) * Rational(Integer(k % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(k)));
}

PolyT diagonal(int n) {
  if (n < 0) throw std::invalid_argument("diagonal: negative n");
  const PolyT t_minus_1({Rational(-1), Rational(1)});
  const PolyT two_minus_t({Rational(2), Rational(-1)});
  return exact_divide(PolyT(1) - t_minus_1.pow(static_cast<unsigned>(n + 1)), two_minus_t);
}

PolyT FTable::at(int n, int k) const { return (*this)[n].eval_x(Rational(k)); }

FTable f_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("f_table: n_max must be >= 1");
  FTable f;
  f.entries.resize(static_cast<std::size_t>(n_max) + 1, PolyXT(PolyT{}, k_t_vars()));
  f.entries[1] = PolyXT(PolyT(1), k_t_vars());
  if (n_max >= 2) f.entries[2] = PolyXT(PolyT::t(), k_t_vars());
  const PolyXT k_minus_1 = PolyXT::x(k_t_vars()) - PolyXT(PolyT(1), k_t_vars());
  for (int n = 3; n <= n_max; ++n) {
    PolyXT prev1 = f.entries[static_cast<std::size_t>(n - 1)].shift_x(Rational(-1)) * PolyT::t();
    PolyXT prev2 = k_minus_1 * f.entries[static_cast<std::size_t>(n - 2)].shift_x(Rational(-2)) *
                   (one_minus_t() * Rational(1, n - 1));
    f.entries[static_cast<std::size_t>(n)] = prev1 + prev2;
  }
  return f;
}

bool verify_relation_41(int n, int k) {
  if (n < 1 || k < n + 1) throw std::invalid_argument("verify_relation_41 needs n >= 1 and k >= n + 1");
  const FTable f = f_table(n);
  const PolyT lhs = genbinom_at(Rational(n), k) * Rational(binom_integer(k, n));
  const PolyT rhs = one_minus_t() * f.at(n, k) * genbinom_minus_one(k - n - 1);
  return lhs == rhs;
}

BinomialExpansion expansion_method1(int k) {
  if (k < 1) throw std::invalid_argument("expansion_method1 needs k >= 1");
  const PolyT t = PolyT::t();
  // c[j][i] = c_i(j), 0 <= i <= j <= k.
  std::vector<std::vector<PolyT>> c(static_cast<std::size_t>(k) + 1);
  c[0] = {PolyT(1)};
  auto at = [&c](int j, int i) -> PolyT {
    if (j < 0 || i < 0 || i > j) return {};
    return c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  };
  for (int j = 1; j <= k; ++j) {
    auto& row = c[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(j) + 1, PolyT{});
    for (int i = 1; i <= j; ++i) {
      PolyT tail;
      for (int m = 0; m <= j - i - 1; ++m) {
        const PolyT term = at(j - 2, i + m - 1);
        if (m % 2 == 0) tail += term;
        else tail -= term;
      }
      row[static_cast<std::size_t>(i)] = (t * at(j - 1, i - 1) + one_minus_t() * tail) * Rational(i, j);
    }
  }
  return BinomialExpansion{k, c[static_cast<std::size_t>(k)]};
}

BinomialExpansion expansion_method2(int k) {
  if (k < 1) throw std::invalid_argument("expansion_method2 needs k >= 1");
  BinomialExpansion e{k, std::vector<PolyT>(static_cast<std::size_t>(k) + 1)};
  e.coeffs[static_cast<std::size_t>(k)] = PolyT::t().pow(static_cast<unsigned>(k));
  if (k == 1) return e;
  const FTable f = f_table(k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    PolyT sum;
    for (int m = 1; m <= i; ++m) {
      PolyT term = f.at(m, k) * genbinom_minus_one(k - m - 1) * Rational(binom_integer(k - m, i - m));
      if ((i - m) % 2 == 0) sum += term;
      else sum -= term;
    }
    e.coeffs[static_cast<std::size_t>(i)] = one_minus_t() * sum * Rational(Integer(1), binom_integer(k, i));
  }
  return e;
}

bool verify_prop_n_nplus1(int n) {
  if (n < 1) throw std::invalid_argument("verify_prop_n_nplus1 needs n >= 1");
  const PolyT lhs = exact_divide(genbinom_at(Rational(n), n + 1), one_minus_t());
  PolyT rhs;
  for (int i = 1; i <= n; ++i)
    rhs += genbinom_at(Rational(n), n - i) * genbinom_minus_one(i - 1) * Rational(i, i + 1);
  return lhs == rhs;
}

}  // namespace genbinom
