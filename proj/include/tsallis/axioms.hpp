#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsallis/density.hpp"
#include "tsallis/qfunc.hpp"

namespace tsallis {

// Weighted direct sum of states: weights lambda_k with blocks rho_k assemble
// into the block-diagonal state  diag(lambda_1 rho_1, ..., lambda_m rho_m).
class BlockState {
 public:
  BlockState(ProbVector weights, std::vector<DensityOperator> blocks);

  const ProbVector& weights() const { return weights_; }
  const std::vector<DensityOperator>& blocks() const { return blocks_; }
  int total_dim() const { return total_dim_; }

  DensityOperator assemble() const;

 private:
  ProbVector weights_;
  std::vector<DensityOperator> blocks_;
  int total_dim_;
};

// Each check returns the absolute residual of its defining identity; a
// conforming entropy keeps every residual at rounding scale.

// Invariance of H_q under a permutation of the outcome probabilities.
double check_symmetry(const ProbVector& p, const std::vector<int>& perm, const QParam& q);

// Splitting the last outcome p_n = y + z (z > 0) refines the distribution:
//   H_q(p_1,...,p_{n-1},y,z) = H_q(p) + p_n^q H_q(y/p_n, z/p_n).
// y = 0, z = p_n reduces this to appending a zero-probability outcome.
double check_generalized_additivity(const ProbVector& p, double y, double z,
                                    const QParam& q);

// Entropy of a weighted direct sum splits into block and weight terms:
//   S_q(assemble) = sum_k lambda_k^q S_q(rho_k) + H_q(lambda).
double check_mixing(const BlockState& state, const QParam& q);

// Two-point self-consistency equation satisfied by t_q(x) = H_q(x, 1-x):
//   t_q(x) + (1-x)^q t_q(y/(1-x)) = t_q(y) + (1-y)^q t_q(x/(1-y))
// for 0 <= x, y < 1 with x + y < 1.
double check_functional_equation(double x, double y, const QParam& q);

// Outcome of one randomized residual suite.
struct AxiomSuiteResult {
  std::string check_name;
  int instances = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Runs the five residual suites (symmetry, generalized additivity, mixing,
// reducing condition, functional equation) with `instances` random instances
// each, q drawn uniformly from (0, 2]. Each suite derives its own RNG stream
// from (seed, suite index), so results are reproducible and independent of
// suite order. Tolerances: 1e-12 everywhere except mixing (1e-9, it routes
// through matrix assembly and the eigensolver).
std::vector<AxiomSuiteResult> run_axiom_suites(int instances, std::uint64_t seed);

}  // namespace tsallis
