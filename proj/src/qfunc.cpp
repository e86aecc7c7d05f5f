#include "tsallis/qfunc.hpp"

#include <cmath>

namespace tsallis {
namespace {

// Inside this window around q = 1 the raw (x^{1-q} - 1)/(1 - q) form loses
// precision to cancellation, so an expm1 formulation is used instead. The two
// forms are algebraically identical; 0.5 keeps the switch far away from any
// tolerance boundary.
constexpr double kExpm1Window = 0.5;

}  // namespace

QParam::QParam(double q) : q_(q) {
  if (!std::isfinite(q) || q < 0.0)
    throw std::domain_error("QParam: entropic index must be finite and >= 0");
  if (q == 0.0)
    regime_ = QRegime::Zero;
  else if (std::abs(q - 1.0) < kNearOneWindow)
    regime_ = QRegime::NearOne;
  else
    regime_ = QRegime::Generic;
}

double q_log(double x, const QParam& q) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("q_log: argument must be positive and finite");
  if (q.regime() == QRegime::NearOne) return std::log(x);
  const double one_minus_q = 1.0 - q.value();
  if (std::abs(one_minus_q) < kExpm1Window)
    return std::expm1(one_minus_q * std::log(x)) / one_minus_q;
  return (std::pow(x, one_minus_q) - 1.0) / one_minus_q;
}

namespace detail {

double eta_any(double x, const QParam& q) {
  if (x == 0.0) return 0.0;
  if (q.regime() == QRegime::NearOne) return -x * std::log(x);
  const double qm1 = q.value() - 1.0;
  if (std::abs(qm1) < kExpm1Window) return -x * std::expm1(qm1 * std::log(x)) / qm1;
  return (std::pow(x, q.value()) - x) / (1.0 - q.value());
}

}  // namespace detail

double eta(double x, const QParam& q) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("eta: argument must lie in [0, 1]");
  return detail::eta_any(x, q);
}

double eta_reflection_gap(double s, const QParam& q) {
  if (!(s >= 0.0 && s <= 0.5))
    throw std::domain_error("eta_reflection_gap: argument must lie in [0, 1/2]");
  return eta(s, q) - eta(1.0 - s, q);
}

double fannes_radius(const QParam& q) {
  switch (q.regime()) {
    case QRegime::Zero:
      return 0.0;
    case QRegime::NearOne:
      return std::exp(-1.0);
    case QRegime::Generic:
      break;
  }
  // exp(log1p(q-1)/(1-q)) stays accurate arbitrarily close to q = 1.
  const double qv = q.value();
  return std::exp(std::log1p(qv - 1.0) / (1.0 - qv));
}

}  // namespace tsallis
