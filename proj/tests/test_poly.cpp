#include <doctest.h>

#include <random>

#include "genbinom/binomial_basis.hpp"
#include "genbinom/grid.hpp"
#include "genbinom/latex.hpp"
#include "genbinom/poly.hpp"

using namespace genbinom;

namespace {

PolyT poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PolyT(v);
}

const PolyXT X = PolyXT::x();

PolyXT random_xt(std::mt19937& rng, int dx, int dt) {
  std::uniform_int_distribution<long> d(-6, 6);
  std::vector<PolyT> rows;
  for (int i = 0; i <= dx; ++i) {
    std::vector<Rational> r;
    for (int j = 0; j <= dt; ++j) r.emplace_back(d(rng), 1 + (d(rng) + 6) % 4);
    rows.emplace_back(r);
  }
  return PolyXT(rows);
}

}  // namespace

TEST_CASE("PolyT arithmetic") {
  const PolyT t = PolyT::t();
  CHECK(t * t == PolyT::monomial(Rational(1), 2));
  CHECK(poly({3, 1}) + PolyT{} == poly({3, 1}));
  // (2 - t)(t^2 - t + 1) = 1 - (t - 1)^3
  CHECK(poly({2, -1}) * poly({1, -1, 1}) == poly({2, -3, 3, -1}));
  CHECK(PolyT{}.degree() == kMinusInfinity);
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({1, 2, 0}).degree() == 1);
}

TEST_CASE("PolyT exact division") {
  CHECK(exact_divide(poly({0, 1, -1}), poly({1, -1})) == PolyT::t());
  CHECK(exact_divide(poly({2, -3, 3, -1}), poly({2, -1})) == poly({1, -1, 1}));
  CHECK_THROWS_AS(exact_divide(poly({0, 0, 1}), poly({1, -1})), InexactDivision);
  CHECK_THROWS_AS(exact_divide(poly({1}), PolyT{}), DivisionByZero);
}

TEST_CASE("shift and evaluation") {
  CHECK(X.shift_x(Rational(-1)) == X - PolyXT(1));
  CHECK((X * X).shift_x(Rational(-1)) == X * X - X * Rational(2) + PolyXT(1));
  const PolyXT tx = X * PolyT::t();
  CHECK(tx.shift_x(Rational(-1)) == tx - PolyXT::t());
  CHECK(tx.eval_x(Rational(-1)) == -PolyT::t());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const PolyXT p = random_xt(rng, 4, 3), q = random_xt(rng, 3, 2);
    CHECK(p.shift_x(Rational(-1)).shift_x(Rational(1)) == p);
    CHECK((p * q).shift_x(Rational(3)) == p.shift_x(Rational(3)) * q.shift_x(Rational(3)));
    CHECK(p.eval_x(Rational(0)) == p.row(0));
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("PolyXT exact division") {
  const PolyXT p = X * PolyT::t() - X * PolyT::t() * PolyT::t();
  CHECK(exact_divide(p, poly({1, -1})) == X * PolyT::t());
  CHECK(exact_divide(p, X) == PolyXT(poly({0, 1, -1})));
  CHECK_THROWS_AS(exact_divide(X * X + PolyXT(1), X), InexactDivision);
}

TEST_CASE("binomial basis") {
  const PolyT t = PolyT::t();
  auto e1 = to_binomial_basis(X * t);
  CHECK(e1.k == 1);
  CHECK(e1.coeff(1) == t);
  CHECK(e1.coeff(0).is_zero());

  // t^2 x(x-1)/2 + (1-t) x/2
  const PolyXT two = X * (X - PolyXT(1)) * (t * t * Rational(1, 2)) + X * (poly({1, -1}) * Rational(1, 2));
  auto e2 = to_binomial_basis(two);
  CHECK(e2.coeff(2) == t * t);
  CHECK(e2.coeff(1) == poly({1, -1}) * Rational(1, 2));

  auto e3 = to_binomial_basis(binomial_poly(3));
  CHECK(e3.coeff(3) == PolyT(1));
  CHECK(e3.coeff(2).is_zero());
  CHECK(e3.coeff(1).is_zero());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const PolyXT p = random_xt(rng, 5, 3);
    CHECK(from_binomial_basis(to_binomial_basis(p)) == p);
  }
}

TEST_CASE("grid equality") {
  std::vector<int> d11{1, 1};
  auto xy = [](std::span<const Rational> v) { return v[0] * v[1]; };
  CHECK(poly_equal_on_grid(xy, xy, d11));
  std::vector<int> d2{2};
  auto sq = [](std::span<const Rational> v) { return v[0] * v[0]; };
  auto id = [](std::span<const Rational> v) { return v[0]; };
  CHECK_FALSE(poly_equal_on_grid(sq, id, d2));
  auto mismatch = find_grid_mismatch(sq, id, d2);
  REQUIRE(mismatch);
  CHECK((*mismatch)[0] == Rational(2));

  // Fuzz: unequal polynomials with honest degree bounds are always caught.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyXT p = random_xt(rng, 3, 3);
    std::uniform_int_distribution<int> pos(0, 3);
    std::vector<PolyT> bump(static_cast<std::size_t>(pos(rng)) + 1);
    bump.back() = PolyT::monomial(Rational(1 + pos(rng), 2), pos(rng));
    const PolyXT q = p + PolyXT(bump);
    auto fp = [&p](std::span<const Rational> v) { return p.eval(v[0], v[1]); };
    auto fq = [&q](std::span<const Rational> v) { return q.eval(v[0], v[1]); };
    std::vector<int> bounds{std::max(p.deg_x(), q.deg_x()), std::max(p.deg_t(), q.deg_t())};
    CHECK_FALSE(poly_equal_on_grid(fp, fq, bounds));
  }
}

TEST_CASE("polynomial json") {
  const PolyT p = poly({1, 0, -3});
  nlohmann::json j = p;
  CHECK(j.dump() == R"({"coeffs":[["1","1"],["0","1"],["-3","1"]],"var":"t"})");
  CHECK(j.get<PolyT>() == p);
  const PolyXT q = X * PolyT::t() + PolyXT(Rational(1, 2));
  nlohmann::json jq = q;
  CHECK(jq["vars"] == nlohmann::json::array({"x", "t"}));
  CHECK(jq.get<PolyXT>() == q);
}

TEST_CASE("latex") {
  CHECK(latex::poly(poly({1, -1, 1})) == "t^{2} - t + 1");
  CHECK(latex::poly(PolyT(Rational(-1, 2))) == "-\\frac{1}{2}");
  CHECK(latex::binomial_form(to_binomial_basis(X * PolyT::t())) == "t x");
  const PolyXT two = X * (X - PolyXT(1)) * (PolyT::t() * PolyT::t() * Rational(1, 2)) +
                     X * (poly({1, -1}) * Rational(1, 2));
  CHECK(latex::binomial_form(to_binomial_basis(two)) ==
        "t^{2} \\binom{x}{2} + \\left(-\\frac{1}{2} t + \\frac{1}{2}\\right) x");
}
