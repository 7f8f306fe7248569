#include <doctest.h>

#include "genbinom/coefficients.hpp"
#include "genbinom/hook_psi.hpp"

using namespace genbinom;

namespace {
const PolyT t = PolyT::t();
}

TEST_CASE("exp poly derivative") {
  const ExpPoly p = ExpPoly::term(2, PolyT(3)) + ExpPoly::term(0, t) - ExpPoly::term(-1, PolyT(1));
  const ExpPoly d = exp_poly_derivative(p);
  CHECK(d == ExpPoly::term(2, PolyT(6)) + ExpPoly::term(-1, PolyT(1)));
  CHECK(exp_poly_derivative(ExpPoly::term(0, t)).is_zero());
}

TEST_CASE("exp poly product and value at zero") {
  const ExpPoly a = ExpPoly::term(1, PolyT(1)) - ExpPoly::term(0, PolyT(1));
  const ExpPoly sq = a * a;
  CHECK(sq == ExpPoly::term(2, PolyT(1)) + ExpPoly::term(1, PolyT(-2)) + ExpPoly::term(0, PolyT(1)));
  CHECK(sq.at_zero().is_zero());
  CHECK((a * t).at_zero().is_zero());
}

TEST_CASE("first hook solutions") {
  CHECK(psi_r(1).scale == Rational(-1));
  CHECK(psi_r(1).body.is_zero());
  CHECK(psi_r(2).scale == Rational(2));
  CHECK(psi_r(2).body == ExpPoly::term(1, PolyT(1)) - ExpPoly::term(0, PolyT(1)));
  CHECK(psi_r(3).scale == Rational(-6));
  CHECK(psi_r(3).body ==
        (ExpPoly::term(2, PolyT(-1)) + ExpPoly::term(1, PolyT(2)) - ExpPoly::term(0, PolyT(1))) * t);
  CHECK(latex::hook_solution(psi_r(2)) == "2\\psi_{2} = e^{u} - 1");
  CHECK(latex::hook_solution(psi_r(3)) == "-6\\psi_{3} = -t e^{2u} + 2 t e^{u} - t");
}

TEST_CASE("psi_{1,1} has b_{-1} = 1") {
  const HookSolution h = psi_r1(1);
  CHECK(h.body.coeff(-1) == PolyT(1));
  CHECK(h.body.at_zero().is_zero());
}

TEST_CASE("differential relations hold") {
  for (int r = 1; r <= 7; ++r) {
    CAPTURE(r);
    CHECK(residual_s0(r).is_zero());
    CHECK(residual_s1(r).is_zero());
    CHECK(residual_s2(r).is_zero());
    for (int s = 0; s <= 2; ++s) {
      CHECK(verify_initial_condition(r, s).holds);
      if (r > 1 || s > 0) CHECK(verify_t_equal_one(r, s).holds);
    }
  }
}

TEST_CASE("t = 1 formula at r = 1, s = 0 is the constant 1") {
  CHECK(psi_at_t_equal_one(1, 0) == ExpPoly::term(0, PolyT(1)));
  CHECK_FALSE(verify_t_equal_one(1, 0).holds);
}

TEST_CASE("coefficient recurrences") {
  for (int r = 3; r <= 7; ++r) CHECK(verify_coefficient_recurrence(r, 0).holds);
  for (int r = 1; r <= 7; ++r) {
    CHECK(verify_coefficient_recurrence(r, 1).holds);
    CHECK(verify_coefficient_recurrence(r, 2).holds);
  }
}

TEST_CASE("the interior sign of psi_{r,1^2} matters from r = 2 on") {
  CHECK(psi_r11_as_printed(1).body == psi_r11(1).body);
  CHECK(residual_s2(psi_r11_as_printed(1)).is_zero());
  for (int r = 2; r <= 5; ++r) {
    CAPTURE(r);
    CHECK_FALSE(residual_s2(psi_r11_as_printed(r)).is_zero());
    CHECK_FALSE(psi_r11_as_printed(r).body.at_zero().is_zero());
  }
}

TEST_CASE("empty hook convention at r = 1") {
  CHECK(damped_psi_r(0) == ExpPoly::term(0, PolyT(-1)));
  // With psi_0 = 0 the r = 1 relations would be off by a constant.
  CHECK(residual_s0(1) - empty_hook_damped() == ExpPoly::term(0, PolyT(1)));
  CHECK(residual_s1(1) + empty_hook_damped() == ExpPoly::term(0, PolyT(-1)));
}

TEST_CASE("hook json") {
  const nlohmann::json j = psi_r(2);
  CHECK(j["r"] == 2);
  CHECK(j["s"] == 0);
  CHECK(j["scale"] == nlohmann::json::array({"2", "1"}));
  CHECK(j["terms"]["1"]["coeffs"] == nlohmann::json::array({nlohmann::json::array({"1", "1"})}));
  CHECK(j["terms"]["0"]["coeffs"] == nlohmann::json::array({nlohmann::json::array({"-1", "1"})}));
}

TEST_CASE("hook json round trip") {
  for (int s = 0; s <= 2; ++s) {
    const HookSolution h = psi_hook(5, s);
    const auto back = nlohmann::json(h).get<HookSolution>();
    CHECK(back.r == h.r);
    CHECK(back.s == h.s);
    CHECK(back.scale == h.scale);
    CHECK(back.body == h.body);
  }
}
