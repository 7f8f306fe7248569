#ifndef GENBINOM_COEFFICIENTS_HPP
#define GENBINOM_COEFFICIENTS_HPP

#include <deque>
#include <mutex>
#include <vector>

#include "genbinom/binomial_basis.hpp"
#include "genbinom/poly.hpp"

namespace genbinom {

/// Memoized symbolic values <x,k> built from the two-step recurrence
///   <x,k> = (x/k) (t <x-1,k-1> + (1-t) <x-2,k-2>).
/// Entries are computed once, in order of k, and never recomputed;
/// references returned by symbolic() stay valid for the table's lifetime.
class GenBinomTable {
public:
  GenBinomTable() = default;
  explicit GenBinomTable(int max_k) { symbolic(max_k); }
  GenBinomTable(const GenBinomTable&) = delete;
  GenBinomTable& operator=(const GenBinomTable&) = delete;

  const PolyXT& symbolic(int k);
  int max_k() const;

  /// Process-wide table.
  static GenBinomTable& shared();

private:
  mutable std::mutex mutex_;
  std::deque<PolyXT> entries_;
};

/// <x,k> as a polynomial in (x,t); zero for k < 0.
PolyXT genbinom_symbolic(int k);
/// <n,k> for a rational n; zero for k < 0.
PolyT genbinom_at(const Rational& n, int k);
/// <-1,k> from the closed product (-1)^k/k! prod_{i=1}^k (k-i+1+(t-1)i).
PolyT genbinom_minus_one(int k);
/// <n,n> = (1 - (t-1)^{n+1}) / (2 - t), by certified exact division.
PolyT diagonal(int n);

/// f_{n,k} as polynomials in (k,t), index n = 1..n_max (index 0 unused).
struct FTable {
  std::vector<PolyXT> entries;

  const PolyXT& operator[](int n) const { return entries.at(static_cast<std::size_t>(n)); }
  int n_max() const { return static_cast<int>(entries.size()) - 1; }
  /// f_{n,k} at an integer k.
  PolyT at(int n, int k) const;
};

inline PolyXT::Vars k_t_vars() { return {"k", "t"}; }

FTable f_table(int n_max);

/// binom(k,n) <n,k> == (1-t) f_{n,k} <-1,k-n-1> for k >= n+1.
bool verify_relation_41(int n, int k);

/// c_i(k) through the recurrence
///   (k/i) c_i(k) = t c_{i-1}(k-1) + (1-t) sum_{m=0}^{k-i-1} (-1)^m c_{i+m-1}(k-2)
/// with c_0(0) = 1 and c_0(j) = 0 for j >= 1.
BinomialExpansion expansion_method1(int k);

/// c_i(k) from the explicit formula in f_{m,k} and <-1, k-m-1>.
BinomialExpansion expansion_method2(int k);

/// <n,n+1>/(1-t) == sum_{i=0}^n i/(i+1) <n,n-i> <-1,i-1>.
bool verify_prop_n_nplus1(int n);

PolyT one_minus_t();

}  // namespace genbinom

#endif  // GENBINOM_COEFFICIENTS_HPP
