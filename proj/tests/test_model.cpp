#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "tpmkin/fk.hpp"
#include "tpmkin/model.hpp"
#include "tpmkin/params_io.hpp"
#include "support.hpp"

using namespace tpmkin;

namespace {

std::map<std::string, double> bench_map() {
  return {{"a", 300}, {"b", 150}, {"d", 50},  {"l1", 30}, {"l2", 280}, {"l3", 140},
          {"l4", 180}, {"l5", 90}, {"l6", 230}, {"l7", 0},  {"l8", 0}};
}

}  // namespace

TEST_CASE("validate_params accepts the bench dimension set") {
  const MechanismParams p = validate_params(bench_map());
  CHECK(p.a == 300);
  CHECK(p.l2 == 280);
  CHECK(p.l8 == 0);
}

TEST_CASE("validate_params rejects zero-length mandatory links") {
  auto raw = bench_map();
  raw["l2"] = 0;
  CHECK_THROWS_AS(validate_params(raw), NonPositiveLengthError);
  try {
    validate_params(raw);
  } catch (const NonPositiveLengthError& e) {
    CHECK(e.key() == "l2");
  }
  // connectors may be zero but not negative
  raw = bench_map();
  raw["l7"] = -1;
  CHECK_THROWS_AS(validate_params(raw), NonPositiveLengthError);
}

TEST_CASE("validate_params reports the missing key") {
  auto raw = bench_map();
  raw.erase("l8");
  CHECK_THROWS_AS(validate_params(raw), MissingKeyError);
  try {
    validate_params(raw);
  } catch (const MissingKeyError& e) {
    CHECK(e.key() == "l8");
  }
}

TEST_CASE("chain_points reproduces the decoupled platform y") {
  const MechanismParams p = test::bench_params();
  const ActuatorInput q{350, -300, -25};
  const double gamma = std::acos(-510.0 / 560.0);
  const PointSet pts = chain_points(q, make_config(gamma, 0.3, -0.2, p), p);
  CHECK(pts.o_prime.y == doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("chain_points flat configuration") {
  const MechanismParams p = test::bench_params();
  const PointSet pts = chain_points({0, 0, 0}, make_config(M_PI, 0.0, 0.0, p), p);
  CHECK(pts.c1.z == doctest::Approx(p.l1).epsilon(1e-12));
  CHECK(std::isfinite(pts.c3.x));
  CHECK(std::isfinite(pts.o_prime.z));
}

TEST_CASE("parametrization identities hold for random configurations") {
  const MechanismParams p = test::bench_params();
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  std::uniform_real_distribution<double> pos(-600, 600);
  for (int i = 0; i < 200; ++i) {
    const ActuatorInput q{pos(rng), pos(rng), pos(rng)};
    const InternalConfig cfg = make_config(ang(rng), ang(rng), ang(rng), p);
    const PointSet pts = chain_points(q, cfg, p);

    CHECK(pts.c1.z == pts.c2.z);          // link 11 horizontal by construction
    CHECK(pts.d1.y == pts.o_prime.y);     // platform y rides on D1
    CHECK(distance(pts.c1, pts.c2) == doctest::Approx(p.l3).epsilon(1e-12));
    CHECK(distance(pts.b1, pts.c1) == doctest::Approx(p.l2).epsilon(1e-12));
    CHECK(distance(pts.d3, pts.e3) == doctest::Approx(p.l6).epsilon(1e-12));
    // t stays consistent with the angles
    CHECK(cfg.t == doctest::Approx(p.l4 * std::sin(cfg.alpha) - p.l6 * std::sin(cfg.beta))
                       .epsilon(1e-12));
  }
}

TEST_CASE("closure residuals vanish on solved configurations") {
  const MechanismParams p = test::bench_params();
  const ActuatorInput q{350, -300, -25};
  const double tol = 1e-9 * std::max({1.0, p.l2 * p.l2, p.l6 * p.l6});

  for (const FkSolution& s : direct_kinematics(q, p)) {
    const Residuals r = closure_residuals(q, s.cfg, p);
    CHECK(std::abs(r.loop1) <= tol);
    CHECK(std::abs(r.loop2) <= tol);
    CHECK(std::abs(r.xchain) <= tol);
  }
}

TEST_CASE("closure residuals detect a perturbed configuration") {
  const MechanismParams p = test::bench_params();
  const ActuatorInput q{350, -300, -25};
  const FkSolution s = direct_kinematics(q, p).front();

  InternalConfig off = s.cfg;
  off.gamma += 0.1;
  const Residuals r = closure_residuals(q, off, p);
  CHECK(std::abs(r.loop1) > 1.0);  // mm^2
}

TEST_CASE("residuals are invariant under rigid Y translation") {
  const MechanismParams p = test::bench_params();
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  std::uniform_real_distribution<double> pos(-400, 400);
  std::uniform_real_distribution<double> shift(-500, 500);
  for (int i = 0; i < 100; ++i) {
    const ActuatorInput q{pos(rng), pos(rng), pos(rng)};
    const InternalConfig cfg = make_config(ang(rng), ang(rng), ang(rng), p);
    const double s = shift(rng);
    const ActuatorInput qs{q.y_a1 + s, q.y_a2 + s, q.y_a3 + s};

    const Residuals r0 = closure_residuals(q, cfg, p);
    const Residuals r1 = closure_residuals(qs, cfg, p);
    CHECK(r0.loop1 == doctest::Approx(r1.loop1).epsilon(1e-9).scale(p.l2 * p.l2));
    CHECK(r0.loop2 == doctest::Approx(r1.loop2).epsilon(1e-9).scale(p.l6 * p.l6));
    CHECK(r0.xchain == r1.xchain);  // no Y content at all
  }
}

TEST_CASE("parameter file round trip and rejection") {
  const char* path = "tpmkin_params_test.json";
  {
    std::ofstream out(path);
    out << R"({"a":300,"b":150,"d":50,"l1":30,"l2":280,"l3":140,)"
        << R"("l4":180,"l5":90,"l6":230,"l7":0,"l8":0})";
  }
  const MechanismParams p = load_params(path);
  CHECK(p.l6 == 230);

  {
    std::ofstream out(path);
    out << R"({"a":300,"bogus":1})";
  }
  CHECK_THROWS_AS(load_params(path), IoError);

  {
    std::ofstream out(path);
    out << R"({"a":"wide"})";
  }
  CHECK_THROWS_AS(load_params(path), IoError);

  {
    std::ofstream out(path);
    out << R"({"a":300,"b":150,"d":50,"l1":30,"l2":280,"l3":140,"l4":180,"l5":90,"l6":230})";
  }
  CHECK_THROWS_AS(load_params(path), MissingKeyError);  // l7, l8 absent

  CHECK_THROWS_AS(load_params("no_such_file.json"), IoError);
  std::remove(path);
}
