#include "tsallis/density.hpp"

#include <cmath>
#include <stdexcept>

namespace tsallis {

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("ProbVector: must be nonempty");
  double sum = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < 0.0)
      throw std::invalid_argument("ProbVector: entries must be finite and >= 0");
    sum += x;
  }
  if (!(std::abs(sum - 1.0) <= kSumTol))
    throw std::invalid_argument("ProbVector: entries must sum to 1 (got " +
                                std::to_string(sum) + ")");
}

DensityOperator::DensityOperator(const HermitianMatrix& m, double trace_tol,
                                 double eigen_floor)
    : matrix_(m), spectrum_(hermitian_eigen(m)) {
  if (!(std::abs(matrix_.trace() - 1.0) <= trace_tol))
    throw std::invalid_argument("DensityOperator: trace must be 1 (got " +
                                std::to_string(matrix_.trace()) + ")");
  double sum = 0.0;
  for (double& lambda : spectrum_.eigenvalues) {
    if (lambda < eigen_floor)
      throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                  std::to_string(lambda));
    if (lambda < 0.0) lambda = 0.0;
    sum += lambda;
  }
  // sum sits within the accepted tolerances of 1, so this renormalization is
  // a perturbation at the tolerance scale, never a rescue of bad input.
  for (double& lambda : spectrum_.eigenvalues) {
    lambda /= sum;
    if (lambda > 1.0) lambda = 1.0;
  }
}

double trace_norm(const HermitianMatrix& a) {
  double s = 0.0;
  for (double lambda : hermitian_eigen(a).eigenvalues) s += std::abs(lambda);
  return s;
}

DensityOperator interpolate(const DensityOperator& a, const DensityOperator& b,
                            double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("interpolate: t must lie in [0, 1]");
  if (a.dim() != b.dim())
    throw std::invalid_argument("interpolate: dimension mismatch");
  return DensityOperator(a.matrix() + t * (b.matrix() - a.matrix()));
}

DensityOperator sample_density(int dim, Xoshiro256& rng) {
  if (dim < 1) throw std::invalid_argument("sample_density: dim must be >= 1");
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double re, im;
      rng.normal_pair(re, im);
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix w = g * g.adjoint();
  const double tr = w.trace().real();
  return DensityOperator(HermitianMatrix((1.0 / tr) * w));
}

DensityOperator sample_density(int dim, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return sample_density(dim, rng);
}

ProbVector sample_simplex(int n, Xoshiro256& rng) {
  if (n < 1) throw std::invalid_argument("sample_simplex: n must be >= 1");
  std::vector<double> p(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& x : p) {
    x = rng.exponential();
    sum += x;
  }
  for (double& x : p) x /= sum;
  return ProbVector(std::move(p));
}

ProbVector sample_simplex(int n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return sample_simplex(n, rng);
}

ComplexMatrix sample_unitary(int dim, Xoshiro256& rng) {
  if (dim < 1) throw std::invalid_argument("sample_unitary: dim must be >= 1");
  ComplexMatrix v(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double re, im;
      rng.normal_pair(re, im);
      v(i, j) = Complex(re, im);
    }
  // Modified Gram-Schmidt with one reorthogonalization pass per column.
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Complex proj(0.0, 0.0);
        for (int k = 0; k < dim; ++k) proj += std::conj(v(k, i)) * v(k, j);
        for (int k = 0; k < dim; ++k) v(k, j) -= proj * v(k, i);
      }
    }
    double norm = 0.0;
    for (int k = 0; k < dim; ++k) norm += std::norm(v(k, j));
    norm = std::sqrt(norm);
    if (norm < 1e-12)
      throw std::runtime_error("sample_unitary: degenerate draw");
    for (int k = 0; k < dim; ++k) v(k, j) = v(k, j) * (1.0 / norm);
  }
  return v;
}

ComplexMatrix sample_unitary(int dim, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return sample_unitary(dim, rng);
}

DensityCheck validate_density(const ComplexMatrix& raw, double tol) {
  if (!(tol >= 0.0))
    throw std::invalid_argument("validate_density: tol must be >= 0");

  const double scale = std::max(1.0, raw.max_abs());
  if (raw.hermitian_defect() > tol * scale)
    return {std::nullopt, "non-Hermitian: defect " + std::to_string(raw.hermitian_defect())};

  // Symmetrize exactly; the defect already passed the gate.
  ComplexMatrix sym(raw.dim());
  for (int i = 0; i < raw.dim(); ++i) {
    sym(i, i) = Complex(raw(i, i).real(), 0.0);
    for (int j = i + 1; j < raw.dim(); ++j) {
      const Complex v = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
      sym(i, j) = v;
      sym(j, i) = std::conj(v);
    }
  }
  HermitianMatrix h(sym);

  if (std::abs(h.trace() - 1.0) > tol)
    return {std::nullopt, "trace != 1: got " + std::to_string(h.trace())};

  Spectrum spec;
  try {
    spec = hermitian_eigen(h);
  } catch (const std::exception& e) {
    return {std::nullopt, std::string("eigensolver failure: ") + e.what()};
  }
  const double min_lambda = spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.back();
  if (min_lambda < -tol)
    return {std::nullopt, "negative eigenvalue " + std::to_string(min_lambda)};

  return {DensityOperator(h, tol, -tol), std::string()};
}

}  // namespace tsallis
