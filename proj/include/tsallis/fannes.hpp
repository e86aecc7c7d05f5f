#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tsallis/density.hpp"
#include "tsallis/entropy.hpp"
#include "tsallis/qfunc.hpp"

namespace tsallis {

// Everything a single continuity-bound evaluation produces. When
// hypothesis_met (epsilon <= radius) and q is in [0, 2], the chain
//   lhs <= eigenwise_rhs <= gap_rhs <= rhs
// holds within kChainTol at every link, and margin >= -kChainTol.
struct BoundReport {
  static constexpr double kChainTol = 1e-9;

  double q = 0.0;
  int d = 0;
  double epsilon = 0.0;        // trace norm of the difference
  double eigen_gap_sum = 0.0;  // sum_j |lambda_j(rho1) - lambda_j(rho2)|, both descending
  double radius = 0.0;         // q^{1/(1-q)}
  bool hypothesis_met = false;
  double lhs = 0.0;            // |S_q(rho1) - S_q(rho2)|
  double eigenwise_rhs = 0.0;  // sum_j eta_q(gap_j)
  double gap_rhs = 0.0;        // bound formula evaluated at eigen_gap_sum
  double rhs = 0.0;            // bound formula evaluated at epsilon
  double margin = 0.0;         // rhs - lhs
};

// epsilon^q ln_q(d) + eta_q(epsilon). The continuity guarantee only covers
// epsilon <= fannes_radius(q); larger epsilon (up to 2) is evaluated through
// eta's algebraic continuation and is advisory only.
double fannes_bound(double epsilon, int d, const QParam& q);

// Full report for a pair of states of equal dimension.
BoundReport check_fannes(const DensityOperator& rho1, const DensityOperator& rho2,
                         const QParam& q);

// Entrywise gaps of the descending spectra, plus their sum. The sum never
// exceeds the trace norm of the difference (Mirsky).
struct EigenGaps {
  std::vector<double> gaps;
  double sum = 0.0;
};

EigenGaps sorted_eigen_gaps(const DensityOperator& rho1, const DensityOperator& rho2);

// Gap bound for a concave f on [0, 1] with f(0) = f(1) = 0:
//   |f(t + s) - f(t)| <= max{f(s), f(1 - s)}   for s in [0, 1/2], s + t <= 1.
// The harness spot-checks concavity and the endpoint zeros on a fixed grid
// first and throws std::invalid_argument with a diagnostic if f fails.
struct GapCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

GapCheck concave_gap_check(const std::function<double(double)>& f, double s, double t);

// Shrinks rho2 toward rho1 along the affine segment until the pair's trace
// distance is inside the bound's hypothesis region. Pairs already inside are
// returned unchanged; at radius 0 the contraction collapses onto rho1.
DensityOperator contract_to_hypothesis(const DensityOperator& rho1,
                                       const DensityOperator& rho2, const QParam& q);

enum class SweepMode { WithinHypothesis, BeyondHypothesis };

struct SweepConfig {
  std::vector<double> q_grid;
  std::vector<int> d_grid;
  int samples = 1000;
  std::uint64_t seed = 42;
  SweepMode mode = SweepMode::WithinHypothesis;
  int workers = 0;  // <= 0: hardware concurrency
};

// One (q, d) cell of a sweep. extremal_seed reproduces the pair attaining
// max_ratio: rho1 = sample_density(d, derive_seed(extremal_seed, 0)),
// rho2 = sample_density(d, derive_seed(extremal_seed, 1)). Cells at radius 0
// (q = 0) stay empty: samples = 0 and zeroed statistics.
struct SweepCell {
  double q = 0.0;
  int d = 0;
  int samples = 0;
  double max_ratio = 0.0;
  double min_margin = 0.0;
  std::uint64_t extremal_seed = 0;
  long violations = 0;
};

struct TightnessTable {
  std::vector<SweepCell> cells;  // q-major, then d, matching config order
};

// Deterministic seeded sweep over the (q, d) grid. Every cell derives its own
// RNG stream from (seed, cell index) and results are merged by cell index, so
// the table is identical for any worker count. In WithinHypothesis mode pairs
// are contracted into the hypothesis region and a violation is any
// margin < -kChainTol; in BeyondHypothesis mode pairs are left where sampling
// puts them and violations (lhs > rhs) are recorded, never asserted.
TightnessTable run_sweep(const SweepConfig& cfg);

// CSV with header q,d,samples,max_ratio,min_margin,extremal_seed,violations.
std::string to_csv(const TightnessTable& table);

}  // namespace tsallis
