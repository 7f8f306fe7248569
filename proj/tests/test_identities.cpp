#include <doctest.h>

#include "genbinom/identities.hpp"

using namespace genbinom;

namespace {
SweepLimits small() { return SweepLimits{12, 5, 8, 6}; }
}

TEST_CASE("every identity holds on reduced ranges") {
  for (const auto& id : identity_ids()) {
    CAPTURE(id);
    const auto reports = run_sweep(id, small());
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      CAPTURE(nlohmann::json(r).dump());
      CHECK(r.holds);
    }
  }
}

TEST_CASE("every negative control fails") {
  for (const auto& id : identity_ids()) {
    CAPTURE(id);
    const auto reports = run_sweep(id, small(), true);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      CAPTURE(nlohmann::json(r).dump());
      CHECK_FALSE(r.holds);
    }
  }
}

TEST_CASE("sweep order does not depend on thread count") {
  const auto one = run_sweep("cor3", small(), false, 1);
  const auto many = run_sweep("cor3", small(), false, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i)
    CHECK(nlohmann::json(one[i]).dump() == nlohmann::json(many[i]).dump());
}

TEST_CASE("unknown identity") { CHECK_THROWS_AS(run_sweep("nope"), UnknownIdentity); }

TEST_CASE("rothe with a vanishing A + Bk") {
  // t = 3 gives A = 2, B = -1, so A + 2B = 0.
  CHECK_THROWS_AS(check_rothe(Rational(2), Rational(-1), Rational(-5), 3), PoleInSummand);
  CHECK(check_rothe_at_t(Rational(3), 3).holds);
  CHECK(check_rothe(Rational(2), Rational(0), Rational(3), 2).holds);
}

TEST_CASE("failed report json carries both sides") {
  const nlohmann::json j = check_corollary2(3, Variant::negative_control);
  CHECK(j["identity"] == "cor2");
  CHECK(j["holds"] == false);
  CHECK(j.contains("lhs"));
  CHECK(j.contains("rhs"));
  CHECK(j["parameters"]["k"] == 3);
  CHECK(j["parameters"]["negative_control"] == true);

  const nlohmann::json ok = check_chu_vandermonde(3);
  CHECK(ok["holds"] == true);
  CHECK_FALSE(ok.contains("lhs"));
  CHECK(ok["degree_bounds"] == nlohmann::json::array({3, 3, 3}));
}

TEST_CASE("printed psi_{r,1^2}") {
  CHECK(check_printed_psi_r11(1).holds);
  for (int r = 2; r <= 4; ++r) CHECK_FALSE(check_printed_psi_r11(r).holds);
}
