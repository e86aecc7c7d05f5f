#pragma once

#include <stdexcept>

namespace tsallis {

// Evaluation regime for the entropic index, resolved once at construction.
enum class QRegime {
  Zero,     // q == 0 exactly
  NearOne,  // |q - 1| < QParam::kNearOneWindow: closed q = 1 forms are used
  Generic,
};

// Validated entropic index q >= 0.
class QParam {
 public:
  static constexpr double kNearOneWindow = 1e-8;

  explicit QParam(double q);

  double value() const { return q_; }
  QRegime regime() const { return regime_; }

 private:
  double q_;
  QRegime regime_;
};

// Deformed logarithm ln_q(x) = (x^{1-q} - 1)/(1 - q) for x > 0; ln(x) at q = 1.
double q_log(double x, const QParam& q);

// Entropy summand eta_q(x) = (x^q - x)/(1 - q) = -x^q ln_q(x) on [0, 1];
// -x ln(x) at q = 1. eta_q(0) = 0 for every q (0^0 taken as 0 at q = 0).
double eta(double x, const QParam& q);

// eta_q(s) - eta_q(1 - s); nonnegative on s in [0, 1/2] for q in [0, 2].
double eta_reflection_gap(double s, const QParam& q);

// Trace-distance threshold q^{1/(1-q)} under which the continuity bound is
// guaranteed. 1/e at q = 1. Degenerates to 0 at q = 0: the caller is expected
// to treat the q = 0 bound as out of hypothesis for any distinct pair.
double fannes_radius(const QParam& q);

namespace detail {
// eta's algebraic form without the [0, 1] domain gate, defined for all x >= 0.
// The continuity bound evaluates it at trace distances up to 2.
double eta_any(double x, const QParam& q);
}  // namespace detail

}  // namespace tsallis
