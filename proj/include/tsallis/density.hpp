#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsallis/eigen.hpp"
#include "tsallis/matrix.hpp"
#include "tsallis/rng.hpp"

namespace tsallis {

// Probability vector: nonnegative entries summing to 1 within kSumTol.
class ProbVector {
 public:
  static constexpr double kSumTol = 1e-12;

  explicit ProbVector(std::vector<double> p);

  int size() const { return static_cast<int>(p_.size()); }
  const std::vector<double>& values() const { return p_; }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> p_;
};

// Quantum state: Hermitian, unit trace (within kTraceTol), positive
// semidefinite (eigenvalues above kEigenFloor). The cached spectrum is
// clamped to [0, 1] and renormalized to sum exactly 1, so it is always a
// valid probability vector.
class DensityOperator {
 public:
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigenFloor = -1e-10;

  // trace_tol / eigen_floor widen the gates for explicitly vetted input
  // (validate_density); the defaults are the type invariant.
  explicit DensityOperator(const HermitianMatrix& m,
                           double trace_tol = kTraceTol,
                           double eigen_floor = kEigenFloor);

  int dim() const { return matrix_.dim(); }
  const HermitianMatrix& matrix() const { return matrix_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const std::vector<double>& eigenvalues() const { return spectrum_.eigenvalues; }

 private:
  HermitianMatrix matrix_;
  Spectrum spectrum_;
};

// Sum of absolute eigenvalues (trace norm / Schatten-1 norm).
double trace_norm(const HermitianMatrix& a);

// Affine segment (1-t) a + t b between two states, t in [0, 1].
DensityOperator interpolate(const DensityOperator& a, const DensityOperator& b,
                            double t);

// G G* / Tr(G G*) with G a matrix of independent standard complex normal
// entries (Hilbert-Schmidt measure). Pure function of (dim, seed).
DensityOperator sample_density(int dim, std::uint64_t seed);
DensityOperator sample_density(int dim, Xoshiro256& rng);

// Uniform point on the probability simplex via normalized exponentials.
ProbVector sample_simplex(int n, std::uint64_t seed);
ProbVector sample_simplex(int n, Xoshiro256& rng);

// Haar-ish random unitary: Gram-Schmidt orthonormalization of a complex
// normal matrix. Supports the unitary-invariance checks.
ComplexMatrix sample_unitary(int dim, std::uint64_t seed);
ComplexMatrix sample_unitary(int dim, Xoshiro256& rng);

// Gate for untrusted input. On success carries the state; on failure `error`
// names the first violated invariant. Inputs Hermitian up to `tol` are
// accepted and symmetrized to (A + A*)/2.
struct DensityCheck {
  std::optional<DensityOperator> state;
  std::string error;
  bool ok() const { return state.has_value(); }
};

DensityCheck validate_density(const ComplexMatrix& raw, double tol = 1e-10);

}  // namespace tsallis
