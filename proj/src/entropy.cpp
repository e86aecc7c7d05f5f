#include "tsallis/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsallis {
namespace {

// Same switch policy as the scalar layer: expm1 form close to q = 1,
// raw powers elsewhere.
constexpr double kExpm1Window = 0.5;

double entropy_sum(const std::vector<double>& probs, const QParam& q) {
  double s = 0.0;
  for (double x : probs) s += eta(x, q);
  return s;
}

}  // namespace

EntropyValue::EntropyValue(double value_, QParam q_, double dim_bound_)
    : value(value_), q(q_), dim_bound(dim_bound_) {
  if (!(value >= 0.0 && value <= dim_bound + kBoundTol))
    throw std::logic_error("EntropyValue: value " + std::to_string(value) +
                           " outside [0, dim_bound] at tolerance");
}

EntropyValue tsallis_entropy(const DensityOperator& rho, const QParam& q) {
  return EntropyValue(entropy_sum(rho.eigenvalues(), q), q,
                      max_entropy(rho.dim(), q));
}

EntropyValue tsallis_entropy_classical(const ProbVector& p, const QParam& q) {
  return EntropyValue(entropy_sum(p.values(), q), q, max_entropy(p.size(), q));
}

RelativeEntropy tsallis_relative_entropy(const ProbVector& p, const ProbVector& r,
                                         const QParam& q) {
  if (p.size() != r.size())
    throw std::invalid_argument("tsallis_relative_entropy: size mismatch");

  const bool near_one = q.regime() == QRegime::NearOne;
  const double one_minus_q = 1.0 - q.value();
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (pi == 0.0) continue;  // 0^q r^{1-q} contributes nothing
    const double ri = r[i];
    if (ri == 0.0)
      return {std::numeric_limits<double>::infinity(), true};
    if (near_one) {
      sum += pi * (std::log(pi) - std::log(ri));
    } else if (std::abs(one_minus_q) < kExpm1Window) {
      // (p - p^q r^{1-q})/(1-q) = -p expm1((1-q)(ln r - ln p))/(1-q)
      sum += -pi * std::expm1(one_minus_q * (std::log(ri) - std::log(pi))) / one_minus_q;
    } else {
      sum += (pi - std::pow(pi, q.value()) * std::pow(ri, one_minus_q)) / one_minus_q;
    }
  }
  return {sum, false};
}

double max_entropy(int dim, const QParam& q) {
  if (dim < 1) throw std::invalid_argument("max_entropy: dim must be >= 1");
  return q_log(static_cast<double>(dim), q);
}

}  // namespace tsallis
