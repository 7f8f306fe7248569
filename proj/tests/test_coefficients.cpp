#include <doctest.h>

#include "genbinom/coefficients.hpp"

using namespace genbinom;

namespace {

PolyT poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PolyT(v);
}

const PolyT t = PolyT::t();

}  // namespace

TEST_CASE("first symbolic values") {
  CHECK(genbinom_symbolic(0) == PolyXT(1));
  CHECK(genbinom_symbolic(1) == PolyXT::x() * t);
  CHECK(genbinom_symbolic(2) ==
        binomial_poly(2) * (t * t) + PolyXT::x() * (one_minus_t() * Rational(1, 2)));
  CHECK(genbinom_symbolic(-3).is_zero());
}

TEST_CASE("degrees and divisibility") {
  const PolyXT x = PolyXT::x();
  for (int k = 1; k <= 13; ++k) {
    const PolyXT p = genbinom_symbolic(k);
    CHECK(p.deg_x() == k);
    CHECK(p.deg_t() == k);
    if (k % 2 == 1) CHECK_NOTHROW(exact_divide(p, t));
    const PolyXT rest = p - binomial_poly(k) * t.pow(static_cast<unsigned>(k));
    CHECK_NOTHROW(exact_divide(exact_divide(rest, one_minus_t()), x));
  }
  CHECK_THROWS_AS(exact_divide(genbinom_symbolic(2), t), InexactDivision);
}

TEST_CASE("specializations") {
  CHECK(genbinom_at(Rational(7, 3), 0) == PolyT(1));
  CHECK(genbinom_at(Rational(2), 3) == t * one_minus_t() * Rational(1, 3));
  CHECK(genbinom_at(Rational(5), 2).eval(Rational(1)) == Rational(10));
  CHECK(genbinom_at(Rational(2), 2) == poly({1, -1, 1}));
  for (int n = 0; n <= 15; ++n)
    for (int k = 0; k <= 15; ++k)
      CHECK(genbinom_at(Rational(n), k).eval(Rational(1)) == Rational(binom_integer(n, k)));
}

TEST_CASE("minus one closed form") {
  CHECK(genbinom_minus_one(0) == PolyT(1));
  CHECK(genbinom_minus_one(1) == -t);
  CHECK(genbinom_minus_one(2) == poly({1, 1}) * poly({-1, 2}) * Rational(1, 2));
  for (int k = 0; k <= 30; ++k) CHECK(genbinom_minus_one(k) == genbinom_at(Rational(-1), k));
}

TEST_CASE("diagonal") {
  CHECK(diagonal(0) == PolyT(1));
  CHECK(diagonal(1) == t);
  CHECK(diagonal(2) == poly({1, -1, 1}));
  for (int n = 1; n <= 30; ++n) {
    CHECK(diagonal(n) == PolyT(1) + poly({-1, 1}) * diagonal(n - 1));
    if (n <= 20) CHECK(diagonal(n) == genbinom_at(Rational(n), n));
  }
}

TEST_CASE("f table") {
  const FTable f = f_table(6);
  const PolyXT k = PolyXT::x(k_t_vars());
  const PolyXT one(PolyT(1), k_t_vars());
  CHECK(f[1] == one);
  CHECK(f[2] == PolyXT(t, k_t_vars()));
  CHECK(f[3] == PolyXT(t * t, k_t_vars()) + (k - one) * (one_minus_t() * Rational(1, 2)));
  CHECK(f[4] == (PolyXT(t * t, k_t_vars()) + (k * Rational(5) - one * Rational(8)) * (one_minus_t() * Rational(1, 6))) * t);
  CHECK(f.at(4, 5) == t * (t * t + one_minus_t() * Rational(17, 6)));
  for (int n = 1; n <= 6; ++n) {
    CHECK(f[n].deg_t() == n - 1);
    // Monic in t: the top t-power has coefficient 1, independent of k.
    for (int kk = 0; kk <= 4; ++kk) CHECK(f.at(n, kk).leading() == Rational(1));
  }
  CHECK_THROWS(f_table(0));
}

TEST_CASE("relation between f and the k > n coefficients") {
  for (int k = 2; k <= 10; ++k) CHECK(verify_relation_41(1, k));
  CHECK(verify_relation_41(2, 3));
  CHECK(verify_relation_41(4, 5));
  for (int n = 1; n <= 6; ++n)
    for (int k = n + 1; k <= 12; ++k) {
      CHECK(verify_relation_41(n, k));
      CHECK_NOTHROW(exact_divide(genbinom_at(Rational(n), k), one_minus_t()));
    }
  CHECK_THROWS(verify_relation_41(3, 3));
}

TEST_CASE("binomial expansion methods agree") {
  const BinomialExpansion m3 = expansion_method1(3);
  CHECK(m3.coeff(3) == t.pow(3));
  CHECK(m3.coeff(1) == t * one_minus_t() * Rational(-1, 3));
  for (int k = 1; k <= 12; ++k) {
    const BinomialExpansion direct = to_binomial_basis(genbinom_symbolic(k));
    const BinomialExpansion m1 = expansion_method1(k);
    const BinomialExpansion m2 = expansion_method2(k);
    CHECK(m1 == direct);
    CHECK(m2 == direct);
    CHECK(m1.coeff(k) == t.pow(static_cast<unsigned>(k)));
    if (k >= 2)
      CHECK(m1.coeff(k - 1) ==
            t.pow(static_cast<unsigned>(k - 2)) * poly({-1, 1}) * Rational(-(k - 1), 2));
  }
  const BinomialExpansion four = expansion_method2(4);
  CHECK(four.coeff(1) == (PolyT(1) - t * t) * poly({-1, 2}) * Rational(1, 8));
  CHECK_THROWS(expansion_method1(0));
}

TEST_CASE("first two explicit coefficients") {
  for (int k = 3; k <= 12; ++k) {
    const BinomialExpansion e = expansion_method2(k);
    CHECK(exact_divide(e.coeff(1) * Rational(k), one_minus_t()) == genbinom_minus_one(k - 2));
    CHECK(exact_divide(e.coeff(2) * Rational(binom_integer(k, 2)), one_minus_t()) ==
          t * genbinom_minus_one(k - 3) - genbinom_minus_one(k - 2) * Rational(k - 1));
  }
}

TEST_CASE("proposition for <n,n+1>") {
  CHECK(genbinom_at(Rational(1), 2) == one_minus_t() * Rational(1, 2));
  for (int n = 1; n <= 12; ++n) CHECK(verify_prop_n_nplus1(n));
}

TEST_CASE("shared table is stable") {
  GenBinomTable& table = GenBinomTable::shared();
  const PolyXT& five = table.symbolic(5);
  const PolyXT* addr = &five;
  table.symbolic(25);
  CHECK(&table.symbolic(5) == addr);
  CHECK(table.max_k() >= 25);
}
