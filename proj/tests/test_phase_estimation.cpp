#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qarrow/phase_estimation.hpp"

using namespace qarrow;
using qpe::Config;

TEST_SUITE("qpe") {

TEST_CASE("kickback preserves the uniform profile") {
  Trace t;
  StateVector s = qpe::prepare_kickback({.n = 3, .phi = 0.2}, &t);
  REQUIRE(t.snapshots.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(t.snapshots[k].label == "t" + std::to_string(k));
    CHECK((t.snapshots[k].probs.array() - 0.125).abs().maxCoeff() < 1e-15);
  }
  // x * phi integral => real positive amplitude.
  CHECK(std::abs(s.amps()[5] - std::complex<double>(std::pow(2.0, -1.5), 0.0)) <
        1e-14);
}

TEST_CASE("kickback with zero phase is a plain superposition") {
  StateVector s = qpe::prepare_kickback({.n = 2, .phi = 0.0});
  for (Eigen::Index x = 0; x < 4; ++x)
    CHECK(s.amps()[x] == std::complex<double>(0.5, 0.0));
}

TEST_CASE("checkpoint labels") {
  Trace t = qpe::run({.n = 3, .phi = 0.2});
  const std::vector<std::string> expect = {"t0",   "t1",   "t2",   "t3",   "t3|1",
                                           "t3|2", "t3|3", "t3|4", "t3|5", "t4"};
  REQUIRE(t.snapshots.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(t.snapshots[i].label == expect[i]);
  CHECK(t.algorithm == "qpe");
  CHECK(t.n_qubits == 3);

  Trace t1 = qpe::run({.n = 1, .phi = 0.5});
  REQUIRE(t1.snapshots.size() == 3);
  CHECK(t1.snapshots[2].label == "t2");
}

TEST_CASE("concentration never reverses across the transform") {
  Trace t = qpe::run({.n = 3, .phi = 0.2});
  TraceReport rep = verify_trace(t);
  CHECK(!rep.first_violation);
  CHECK(rep.monotone_prefix_len == t.snapshots.size() - 1);
}

TEST_CASE("final distribution matches the closed form") {
  Config cfg{.n = 3, .phi = 0.2};
  Trace t = qpe::run(cfg);
  ProbVector closed = qpe::final_distribution(cfg);
  const ProbVector& sim = t.snapshots.back().probs;
  REQUIRE(sim.size() == closed.size());
  CHECK((sim - closed).cwiseAbs().maxCoeff() < 1e-10);

  const double frozen[] = {0.040906781074217115, 0.25933561918842779,
                           0.577521018069861,    0.051768129535521609,
                           0.021593218925782889, 0.014947537290618523,
                           0.014487479117612896, 0.019440216797958355};
  for (int y = 0; y < 8; ++y) CHECK(std::abs(closed[y] - frozen[y]) < 1e-12);
}

TEST_CASE("dyadic phases are resolved exactly") {
  Config cfg{.n = 3, .phi = 0.25};
  ProbVector closed = qpe::final_distribution(cfg);
  CHECK(closed[2] == 1.0);
  CHECK(closed.sum() == doctest::Approx(1.0).epsilon(1e-12));

  Trace t = qpe::run(cfg);
  CHECK(compare(t.snapshots.back().probs, greatest_element(8)).relation ==
        Relation::Equal);
  CHECK(t.snapshots.back().probs[2] == doctest::Approx(1.0).epsilon(1e-12));

  Trace t0 = qpe::run({.n = 1, .phi = 0.0});
  CHECK(t0.snapshots.back().probs[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random phases agree with the closed form") {
  std::mt19937 gen(2026);
  std::uniform_real_distribution<double> uphi(0.0, 1.0);
  std::uniform_int_distribution<int> un(1, 6);
  for (int i = 0; i < 50; ++i) {
    Config cfg{.n = un(gen), .phi = uphi(gen)};
    CAPTURE(cfg.n);
    CAPTURE(cfg.phi);
    Trace t = qpe::run(cfg);
    ProbVector closed = qpe::final_distribution(cfg);
    CHECK((t.snapshots.back().probs - closed).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("phase grid keeps every checkpoint ordered") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 19; ++k) {
      Config cfg{.n = n, .phi = 0.05 * k};
      CAPTURE(cfg.n);
      CAPTURE(cfg.phi);
      CHECK(!verify_trace(qpe::run(cfg)).first_violation);
    }
  }
}

TEST_CASE("shifting the phase by 1/N rolls the distribution") {
  Config base{.n = 3, .phi = 0.13};
  Config shifted{.n = 3, .phi = 0.13 + 0.125};
  ProbVector p = qpe::final_distribution(base);
  ProbVector q = qpe::final_distribution(shifted);
  for (Eigen::Index y = 0; y < 8; ++y)
    CHECK(std::abs(q[(y + 1) % 8] - p[y]) < 1e-12);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(qpe::run({.n = 0, .phi = 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(qpe::run({.n = 2, .phi = 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(qpe::run({.n = 2, .phi = -0.1}), std::invalid_argument);
  CHECK_THROWS_AS(qpe::final_distribution({.n = 2, .phi = 2.0}),
                  std::invalid_argument);
}

TEST_CASE("two-path interference values") {
  CHECK(qpe::interference_value(0.0, '+') == doctest::Approx(2.0));
  CHECK(qpe::interference_value(0.5, '+') == doctest::Approx(0.0));
  CHECK(qpe::interference_value(0.5, '-') == doctest::Approx(2.0));
  CHECK(qpe::interference_value(0.25, '+') == doctest::Approx(1.0));
  CHECK_THROWS_AS(qpe::interference_value(0.1, 'x'), std::invalid_argument);
  CHECK_THROWS_AS(qpe::interference_value(1.5, '+'), std::invalid_argument);

  for (int k = 0; k <= 200; ++k) {
    const double alpha = k / 201.0;
    const bool plus_ok = alpha <= 0.25 + 1e-12 || alpha >= 0.75 - 1e-12;
    const bool minus_ok = alpha >= 0.25 - 1e-12 && alpha <= 0.75 + 1e-12;
    if (plus_ok) CHECK(qpe::interference_inequality(alpha, '+'));
    if (minus_ok) CHECK(qpe::interference_inequality(alpha, '-'));
    if (!plus_ok) CHECK(!qpe::interference_inequality(alpha, '+'));
    if (!minus_ok) CHECK(!qpe::interference_inequality(alpha, '-'));
  }
}

TEST_CASE("order finding by modular powers") {
  CHECK(qpe::order_finding_phase(2, 5, 1) == doctest::Approx(0.25));
  CHECK(qpe::order_finding_phase(3, 7, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(qpe::order_finding_phase(8, 15, 1) == doctest::Approx(0.25));
  CHECK(qpe::order_finding_phase(1, 5, 0) == 0.0);
  CHECK_THROWS_AS(qpe::order_finding_phase(6, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(qpe::order_finding_phase(2, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(qpe::order_finding_phase(2, 1, 0), std::invalid_argument);
}

}  // TEST_SUITE
