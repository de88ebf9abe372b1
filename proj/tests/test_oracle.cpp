#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gft/errors.hpp"
#include "gft/oracle.hpp"

using namespace gft;

namespace {

constexpr double kE = std::numbers::e;

}  // namespace

TEST_CASE("numeric_radius examples") {
  CHECK(std::abs(numeric_radius(TargetClass::StarlikeOrder, validate_params(0.0, 1.0)) - 1.0 / 3.0) <= 1e-8);
  CHECK(std::abs(numeric_radius(TargetClass::Exp, validate_params(1.0, 1.0)) - (kE - 1) / (2 * kE - 1)) <= 1e-8);
  CHECK(std::abs(numeric_radius(TargetClass::Nephroid, validate_params(0.0, 1e-8)) - 0.25) <= 1e-6);
}

TEST_CASE("numeric_radius agrees with the frozen values off the closed forms") {
  struct Case {
    TargetClass c;
    double a, b, r;
  };
  const Case cases[] = {
      {TargetClass::Cardioid, 0.2, 0.05, 0.55334568186599873},
      {TargetClass::Exp, 0.5, 0.05, 0.62948778074597692},
      {TargetClass::Rational, 0.3, 0.4, 0.099912595058480597},
      {TargetClass::ModSigmoid, 0.9, 3, 0.12776963572187808},
      {TargetClass::Nephroid, 0.3, 0.4, 0.29162491545167163},
  };
  for (const Case& k : cases) {
    const NumericRadius n = numeric_radius_detailed(k.c, validate_params(k.a, k.b));
    CHECK(std::abs(n.value - k.r) <= 1e-6);
    CHECK_FALSE(n.non_monotone);
    CHECK_FALSE(n.reached_one);
  }
}

TEST_CASE("numeric_radius reports no failure as 1") {
  // alpha = 1 gives psi(r) = 1 - beta r / (1 - r), which stays positive up to
  // r = 1 - 1e-8, past the last coarse grid point.
  OracleConfig cfg;
  cfg.coarse_steps = 10;
  const NumericRadius n = numeric_radius_detailed(TargetClass::StarlikeOrder, validate_params(1.0, 1e-8), cfg);
  CHECK(n.reached_one);
  CHECK(n.value == 1.0);
  CHECK(n.first_failure_step == -1);
}

TEST_CASE("oracle config validation") {
  OracleConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.tol = 0.0;
  CHECK_THROWS_AS(validate(cfg), OutOfRangeError);
  cfg = {};
  cfg.boundary_samples = 7;
  CHECK_THROWS_AS(validate(cfg), OutOfRangeError);
  cfg = {};
  cfg.coarse_steps = 9;
  CHECK_THROWS_AS((void)numeric_radius(TargetClass::Exp, validate_params(0.5, 1.0), cfg), OutOfRangeError);
}

TEST_CASE("sharpness examples") {
  const SharpnessReport st = verify_sharpness(TargetClass::StarlikeOrder, validate_params(0.0, 1.0), 1.0 / 3.0,
                                              Branch::Sigma0, 1e-4);
  CHECK(std::abs(st.witness_w) < 1e-15);
  CHECK(st.boundary_residual < 1e-15);
  CHECK(st.interior_below);
  CHECK(st.exterior_above);
  CHECK(st.inside_margin_below > 0.0);

  const SharpnessReport ca = verify_sharpness(TargetClass::Cardioid, validate_params(1.0, 1.0), 0.4, 1e-4);
  CHECK(std::abs(ca.witness_w - 1.0 / 3.0) <= 1e-9);
  CHECK(ca.boundary_residual <= 1e-9);
  CHECK(ca.interior_below);
  CHECK(ca.exterior_above);

  const ClassParams p = validate_params(0.5, 0.05);
  const RadiusResult r = compute_radius(TargetClass::Exp, p);
  REQUIRE(r.branch == Branch::SigmaTilde0);
  const SharpnessReport ex = verify_sharpness(TargetClass::Exp, p, r.value, 1e-4);
  CHECK(ex.witness_z == Complex(r.value, 0.0));
  CHECK(std::abs(std::abs(std::log(ex.witness_w)) - 1.0) <= 1e-9);
  CHECK(std::abs(ex.witness_w - kE) <= 1e-8);
  CHECK(ex.interior_below);
  CHECK(ex.exterior_above);
}

TEST_CASE("sharpness fails for a perturbed radius") {
  const ClassParams p = validate_params(0.3, 0.4);
  const double R = compute_radius(TargetClass::Nephroid, p).value;
  const SharpnessReport bad = verify_sharpness(TargetClass::Nephroid, p, R + 1e-3, 1e-4);
  CHECK(bad.boundary_residual > 1e-6);
  CHECK_FALSE(bad.interior_below);
}

TEST_CASE("sharpness argument checks") {
  const ClassParams p = validate_params(0.5, 1.0);
  CHECK_THROWS_AS((void)verify_sharpness(TargetClass::Exp, p, 1.0, Branch::Sigma0, 1e-4), WitnessPoleError);
  CHECK_THROWS_AS((void)verify_sharpness(TargetClass::Exp, p, 0.3, Branch::Sigma0, 0.8), OutOfRangeError);
  CHECK_THROWS_AS((void)verify_sharpness(TargetClass::Exp, p, 0.3, Branch::Sigma0, 0.0), OutOfRangeError);
  CHECK_THROWS_AS((void)verify_sharpness(TargetClass::Exp, p, 0.0, Branch::Sigma0, 0.1), OutOfRangeError);
}

TEST_CASE("verify_disc_bound examples") {
  const std::vector<double> half{0.5};
  const ExtremalSpec one =
      make_extremal_spec(validate_params(0.0, 1.0), 1.0, validate_polynomial({Complex(-1.0, 0.0)}));
  const DiscBoundReport a = verify_disc_bound(std::span(&one, 1), half, 256);
  CHECK(a.checked == 256u);
  CHECK(a.disc_violations == 0u);
  CHECK(a.q_violations == 0u);

  const ExtremalSpec two =
      make_extremal_spec(validate_params(0.4, 2.0), std::polar(1.0, 1.0), validate_polynomial({Complex(2.0, 0.0)}));
  CHECK(verify_disc_bound(std::span(&two, 1), half, 256).q_violations == 0u);

  const DiscBoundReport none = verify_disc_bound({}, half, 256);
  CHECK(none.checked == 0u);
  CHECK(none.disc_violations == 0u);
}

TEST_CASE("random specs are deterministic in the seed") {
  const auto a = random_extremal_specs(20, 99);
  const auto b = random_extremal_specs(20, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].rotation == b[i].rotation);
    CHECK(a[i].polynomial.degree() == b[i].polynomial.degree());
  }
}

TEST_CASE("disc_in_domain") {
  CHECK(disc_in_domain(TargetDomain::exp(), Disc{1.0, 0.5}, 720));
  CHECK_FALSE(disc_in_domain(TargetDomain::exp(), Disc{1.0, 0.7}, 720));
}
