#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tpmkin/fk.hpp"
#include "tpmkin/model.hpp"
#include "support.hpp"

using namespace tpmkin;

namespace {

// Expected assemblies for inputs (350, -300, -25), frozen from an
// independent residual-scan root finder (see test_oracle for the live
// cross-check).
struct Expected {
  const char* code;
  double x, z;
};
constexpr Expected kExpected[8] = {
    {"+++", 39.9669358788861, 32.4723475351418},
    {"++-", -119.044043017907, 324.640067799956},
    {"+-+", -60.7716140333454, -30.0230372355101},
    {"+--", 34.4392394999619, 25.9586858853632},
    {"-++", 34.4392394999619, 34.0413141146368},
    {"-+-", -60.7716140333453, 90.02303723551},
    {"--+", -119.044043017907, -264.640067799956},
    {"---", 39.9669358788861, 27.5276524648582},
};

}  // namespace

TEST_CASE("solve_gamma finds both branches of the bench inputs") {
  const MechanismParams p = test::bench_params();
  const auto roots = solve_gamma({350, -300, -25}, p);
  REQUIRE(roots.size() == 2);
  CHECK(std::cos(roots[0].gamma) == doctest::Approx(-510.0 / 560.0).epsilon(1e-12));
  CHECK(std::cos(roots[1].gamma) == doctest::Approx(-510.0 / 560.0).epsilon(1e-12));
  CHECK(roots[0].gamma == doctest::Approx(2.7158064557366357).epsilon(1e-12));
  CHECK(roots[0].sigma_gamma == +1);
  CHECK(roots[1].sigma_gamma == -1);
  CHECK(std::sin(roots[0].gamma) > 0);
  CHECK(std::sin(roots[1].gamma) < 0);
}

TEST_CASE("solve_gamma degenerates to self-motion on the parallelogram locus") {
  const MechanismParams p = test::bench_params();
  // y_a1 - y_a2 = l3 exactly
  CHECK_THROWS_AS(solve_gamma({350, 210, -25}, p), SelfMotionError);
}

TEST_CASE("solve_gamma at the fold returns the single double root") {
  const MechanismParams p = test::bench_params();
  // u = 2*l2 = 560
  const auto roots = solve_gamma({700, 0, 0}, p);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].gamma == doctest::Approx(M_PI));
  CHECK(roots[0].sigma_gamma == +1);
  CHECK(std::abs(std::sin(roots[0].gamma)) < 1e-9);
}

TEST_CASE("solve_gamma has no roots beyond the fold") {
  const MechanismParams p = test::bench_params();
  CHECK(solve_gamma({900, -900, 0}, p).empty());
}

TEST_CASE("loop-2 coefficients match the bench arithmetic") {
  const MechanismParams p = test::bench_params();
  const ActuatorInput q{350, -300, -25};
  const auto roots = solve_gamma(q, p);
  const Loop2Coeffs lc = loop2_coeffs(roots[0], q, p);
  CHECK(lc.h2 == doctest::Approx(50400.0).epsilon(1e-12));  // 230^2 - 50^2
  CHECK(std::sqrt(lc.h2) == doctest::Approx(224.4994432064365).epsilon(1e-12));
  CHECK(lc.h1 == doctest::Approx(p.l2 * std::sin(roots[0].gamma)).epsilon(1e-12));
}

TEST_CASE("solve_loop2 enumerates the four (t, alpha) combinations") {
  const MechanismParams p = test::bench_params();
  const ActuatorInput q{350, -300, -25};
  const auto groots = solve_gamma(q, p);
  const auto l2roots = solve_loop2(groots[0], q, p);
  REQUIRE(l2roots.size() == 4);

  bool saw_t_plus = false;
  for (const Loop2Root& r : l2roots) {
    if (r.sigma_t == +1) {
      saw_t_plus = true;
      CHECK(r.t == doctest::Approx(108.8491081442327).epsilon(1e-12));
      if (r.sigma_alpha == +1)
        CHECK(r.alpha == doctest::Approx(-0.67996601439050641).epsilon(1e-10));
      else
        CHECK(r.alpha == doctest::Approx(1.6767949492291492).epsilon(1e-10));
    } else {
      CHECK(r.t == doctest::Approx(-340.14977826864026).epsilon(1e-12));
    }
    // beta consistent with its defining relations
    CHECK(std::sin(r.beta) == doctest::Approx((p.l4 * std::sin(r.alpha) - r.t) / p.l6)
                                  .epsilon(1e-9));
    CHECK(std::cos(r.beta) ==
          doctest::Approx((p.l4 * std::cos(r.alpha) - 2 * (p.b - p.d)) / p.l6).epsilon(1e-9));
  }
  CHECK(saw_t_plus);
}

TEST_CASE("direct_kinematics reproduces all eight assemblies") {
  const MechanismParams p = test::bench_params();
  const auto sols = direct_kinematics({350, -300, -25}, p);
  REQUIRE(sols.size() == 8);

  for (int i = 0; i < 8; ++i) {
    CHECK(sols[i].branch.code() == kExpected[i].code);  // sorted, principal first
    CHECK(sols[i].pose.x == doctest::Approx(kExpected[i].x).epsilon(1e-9));
    CHECK(sols[i].pose.y == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(sols[i].pose.z == doctest::Approx(kExpected[i].z).epsilon(1e-9));
  }
}

TEST_CASE("direct_kinematics returns nothing when loop 1 cannot close") {
  const MechanismParams p = test::bench_params();
  CHECK(direct_kinematics({900, -900, 0}, p).empty());
}

TEST_CASE("exact fold in t yields a single double root") {
  const MechanismParams p = test::bench_params();
  // cos(gamma) = -1 exactly makes y = y_a1 - l2 - l3/2 exact, so q3 can sit
  // exactly on |y - q3| = l6
  const GammaRoot g{M_PI, +1};
  const ActuatorInput q{350, 0, 350 - 280 - 70 - 230};
  const Loop2Coeffs lc = loop2_coeffs(g, q, p);
  REQUIRE(lc.h2 == 0.0);
  const auto roots = solve_loop2(g, q, p);
  REQUIRE(roots.size() == 2);  // one t, both alpha roots
  CHECK(roots[0].sigma_t == +1);
  CHECK(roots[1].sigma_t == +1);
  CHECK(roots[0].t == roots[1].t);
}

TEST_CASE("near the t fold the sigma_t pairs collapse") {
  const MechanismParams p = test::bench_params();
  // y = 25 up to roundoff, q3 = y - l6: h2 within 1e-10 of zero
  const auto sols = direct_kinematics({350, -300, -205}, p);
  REQUIRE(sols.size() >= 4);
  CHECK(sols.size() <= 8);
  for (const FkSolution& a : sols)
    for (const FkSolution& b : sols)
      if (a.branch.sigma_gamma == b.branch.sigma_gamma &&
          a.branch.sigma_alpha == b.branch.sigma_alpha && a.branch.sigma_t != b.branch.sigma_t)
        CHECK(distance(a.pose.vec(), b.pose.vec()) < 1e-4);
}

TEST_CASE("y decoupling holds on every solution of random inputs") {
  const MechanismParams p = test::bench_params();
  test::InputSampler sampler(p, 2024);
  for (int i = 0; i < 200; ++i) {
    const ActuatorInput q = sampler.next();
    const auto sols = direct_kinematics(q, p);
    CHECK(sols.size() <= 8);
    for (const FkSolution& s : sols) {
      const double expect = 0.5 * (q.y_a1 + q.y_a2);
      CHECK(std::abs(s.pose.y - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
      CHECK(closure_residuals(q, s.cfg, p).max_normalized(p) <= 1e-9);
    }
  }
}

TEST_CASE("paired branches converge as the gamma fold closes") {
  const MechanismParams p = test::bench_params();
  double prev_sep = 1e300;
  for (double margin : {1e-2, 1e-4, 1e-6, 1e-8}) {  // (2 l2)^2 - u^2, mm^2
    const double u = std::sqrt(4.0 * p.l2 * p.l2 - margin);
    const ActuatorInput q{-300 + p.l3 + u, -300, -25};
    const auto sols = direct_kinematics(q, p);
    double sep = -1;
    for (const FkSolution& a : sols)
      for (const FkSolution& b : sols)
        if (a.branch.sigma_gamma == +1 && b.branch.sigma_gamma == -1 &&
            a.branch.sigma_t == b.branch.sigma_t && a.branch.sigma_alpha == b.branch.sigma_alpha)
          sep = std::max(sep, distance(a.pose.vec(), b.pose.vec()));
    REQUIRE(sep >= 0);
    CHECK(sep < prev_sep);
    prev_sep = sep;
  }
  CHECK(prev_sep < 1e-3);
}
