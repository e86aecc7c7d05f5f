#pragma once

#include "tsallis/density.hpp"
#include "tsallis/qfunc.hpp"

namespace tsallis {

// Entropy together with its dimension bound ln_q(d). Construction enforces
// 0 <= value <= dim_bound + kBoundTol, which every entropy of a valid state
// satisfies.
struct EntropyValue {
  static constexpr double kBoundTol = 1e-10;

  EntropyValue(double value, QParam q, double dim_bound);

  double value;
  QParam q;
  double dim_bound;
};

// S_q(rho) = sum_j eta_q(lambda_j) over the state's spectrum.
EntropyValue tsallis_entropy(const DensityOperator& rho, const QParam& q);

// H_q(p) = sum_i eta_q(p_i).
EntropyValue tsallis_entropy_classical(const ProbVector& p, const QParam& q);

// D_q(p || r) = sum_i (p_i - p_i^q r_i^{1-q})/(1 - q); Kullback-Leibler at
// q = 1. Terms with p_i = 0 contribute nothing; p_i > 0 with r_i = 0 is a
// support violation and yields +infinity with the flag set.
struct RelativeEntropy {
  double value;
  bool support_violation;
};

RelativeEntropy tsallis_relative_entropy(const ProbVector& p, const ProbVector& r,
                                         const QParam& q);

// ln_q(dim): the entropy of the maximally mixed state, and the largest value
// any state of this dimension can attain.
double max_entropy(int dim, const QParam& q);

}  // namespace tsallis
