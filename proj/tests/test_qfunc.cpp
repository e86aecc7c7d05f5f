#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tsallis/qfunc.hpp"
#include "tsallis/rng.hpp"

using namespace tsallis;

namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e to double precision

double eta_at(double x, double q) { return eta(x, QParam(q)); }

}  // namespace

TEST_CASE("entropic index validation and regime selection") {
  CHECK_THROWS_AS(QParam(-0.1), std::domain_error);
  CHECK_THROWS_AS(QParam(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(QParam(std::numeric_limits<double>::infinity()), std::domain_error);

  CHECK(QParam(0.0).regime() == QRegime::Zero);
  CHECK(QParam(1.0).regime() == QRegime::NearOne);
  CHECK(QParam(1.0 + 1e-9).regime() == QRegime::NearOne);
  CHECK(QParam(1.0 - 1e-9).regime() == QRegime::NearOne);
  CHECK(QParam(1.0 + 1e-7).regime() == QRegime::Generic);
  CHECK(QParam(1e-300).regime() == QRegime::Generic);
  CHECK(QParam(2.0).regime() == QRegime::Generic);
}

TEST_CASE("q_log anchors") {
  for (double q : {0.0, 0.3, 1.0, 1.7, 2.0}) CHECK(q_log(1.0, QParam(q)) == 0.0);

  CHECK(q_log(2.0, QParam(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q_log(std::exp(1.0), QParam(1.0)) == doctest::Approx(1.0).epsilon(1e-15));

  // The q = 1 value must agree with the limit from either side.
  CHECK(std::abs(q_log(std::exp(1.0), QParam(1.0 + 1e-6)) - 1.0) < 1e-5);
  CHECK(std::abs(q_log(std::exp(1.0), QParam(1.0 - 1e-6)) - 1.0) < 1e-5);

  // q = 0: ln_0(x) = x - 1.
  CHECK(q_log(3.0, QParam(0.0)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("q_log rejects nonpositive arguments") {
  CHECK_THROWS_AS(q_log(0.0, QParam(1.0)), std::domain_error);
  CHECK_THROWS_AS(q_log(-1.0, QParam(0.5)), std::domain_error);
  CHECK_THROWS_AS(q_log(std::numeric_limits<double>::infinity(), QParam(1.0)),
                  std::domain_error);
}

TEST_CASE("eta anchors and endpoint behavior") {
  for (double q : {0.0, 0.5, 1.0, 2.0}) {
    CHECK(eta_at(0.0, q) == 0.0);
    CHECK(eta_at(1.0, q) == 0.0);
  }
  CHECK(eta_at(0.5, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eta_at(kInvE, 1.0) == doctest::Approx(kInvE).epsilon(1e-15));

  // q = 0 with the 0^0 := 0 convention: 0 at x = 0, then 1 - x.
  CHECK(eta_at(0.25, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(eta_at(0.7, 0.0) == doctest::Approx(0.3).epsilon(1e-15));

  CHECK_THROWS_AS(eta(-0.1, QParam(1.0)), std::domain_error);
  CHECK_THROWS_AS(eta(1.1, QParam(1.0)), std::domain_error);
  CHECK_THROWS_AS(eta(std::nan(""), QParam(1.0)), std::domain_error);
}

TEST_CASE("fannes_radius anchors") {
  CHECK(fannes_radius(QParam(1.0)) == doctest::Approx(kInvE).epsilon(1e-15));
  CHECK(fannes_radius(QParam(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fannes_radius(QParam(0.5)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(fannes_radius(QParam(0.0)) == 0.0);
  // Radius is continuous through the q = 1 window.
  CHECK(std::abs(fannes_radius(QParam(1.0 + 1e-7)) - kInvE) < 1e-6);
  CHECK(std::abs(fannes_radius(QParam(1.0 - 1e-7)) - kInvE) < 1e-6);
}

TEST_CASE("deformed product identity") {
  Xoshiro256 rng(1001);
  // Well-conditioned region: the identity holds to the absolute tolerance.
  for (int i = 0; i < 10000; ++i) {
    const double x = 0.05 + 0.95 * rng.uniform();
    const double y = 0.05 + 0.95 * rng.uniform();
    const QParam q(2.0 * rng.uniform());
    const double lhs = q_log(x * y, q);
    const double rhs = q_log(x, q) + std::pow(x, 1.0 - q.value()) * q_log(y, q);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
  // Full domain: the identity holds to rounding accuracy relative to the
  // magnitudes involved (absolute precision is unattainable as x, y -> 0
  // with q near 2, where ln_q blows up like x^{1-q}).
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform_pos();
    const double y = rng.uniform_pos();
    const QParam q(2.0 * rng.uniform());
    const double lhs = q_log(x * y, q);
    const double rhs = q_log(x, q) + std::pow(x, 1.0 - q.value()) * q_log(y, q);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }
}

TEST_CASE("q_log never exceeds x - 1") {
  Xoshiro256 rng(1002);
  for (int i = 0; i < 10000; ++i) {
    const double z = 1000.0 * rng.uniform_pos();
    const QParam q(4.0 * rng.uniform());
    CHECK(q_log(z, q) <= z - 1.0 + 1e-12);
  }
  // Equality at z = 1 for every q.
  for (double q : {0.0, 0.5, 1.0, 2.0}) CHECK(q_log(1.0, QParam(q)) == 0.0);
}

TEST_CASE("eta is concave on [0, 1]") {
  Xoshiro256 rng(1003);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    const double w = rng.uniform();
    const QParam q(2.0 * rng.uniform());
    const double mix = eta(w * x + (1.0 - w) * y, q);
    const double chord = w * eta(x, q) + (1.0 - w) * eta(y, q);
    CHECK(mix - chord >= -1e-12);
  }
  // Including the q = 0 step discontinuity at the origin.
  const QParam q0(0.0);
  CHECK(eta(0.5, q0) - 0.5 * (eta(0.0, q0) + eta(1.0, q0)) >= -1e-12);
}

TEST_CASE("eta increases up to the bound radius") {
  for (double qv : {0.25, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0}) {
    const QParam q(qv);
    const double radius = fannes_radius(q);
    double prev = eta(0.0, q);
    for (int i = 1; i < 1000; ++i) {
      const double x = radius * i / 999.0;
      const double cur = eta(x, q);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("eta gap dominated by eta of the gap") {
  Xoshiro256 rng(1004);
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    const double delta = (rng.uniform() - 0.5);  // |delta| <= 1/2
    const double v = std::min(1.0, std::max(0.0, u + delta));
    const QParam q(2.0 * rng.uniform());
    const double gap = std::abs(u - v);
    CHECK(std::abs(eta(u, q) - eta(v, q)) <= eta(gap, q) + 1e-12);
  }
}

TEST_CASE("eta reflection gap is nonnegative below one half") {
  for (int iq = 0; iq <= 40; ++iq) {
    const QParam q(2.0 * iq / 40.0);
    for (int is = 0; is <= 40; ++is) {
      const double s = 0.5 * is / 40.0;
      CHECK(eta_reflection_gap(s, q) >= -1e-12);
    }
  }
  CHECK_THROWS_AS(eta_reflection_gap(0.6, QParam(1.0)), std::domain_error);
}

TEST_CASE("eta is stable through the q = 1 window") {
  const QParam exact(1.0);
  const QParam above(1.0 + 1e-7);
  const QParam below(1.0 - 1e-7);
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    CHECK(std::abs(eta(x, above) - eta(x, exact)) <= 1e-6);
    CHECK(std::abs(eta(x, below) - eta(x, exact)) <= 1e-6);
  }
}
