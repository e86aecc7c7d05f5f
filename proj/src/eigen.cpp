#include "tsallis/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tsallis {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTol = 1e-14;      // off-diagonal mass vs ||A||_F
constexpr double kResidualTol = 1e-9;  // certificate gates
constexpr double kOrthoTol = 1e-9;

// Frobenius mass of the strict off-diagonal part.
double off_diagonal_norm(const ComplexMatrix& a) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// One cyclic sweep of two-sided unitary 2x2 rotations; returns rotation count.
// Each pivot (p, q) is annihilated by A <- G* A G with
//   G_pp = c, G_pq = -conj(s), G_qp = s, G_qq = c,  c real, c^2 + |s|^2 = 1.
int jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const int n = a.dim();
  int rotations = 0;
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Complex beta = a(p, q);
      const double absb = std::abs(beta);
      if (absb == 0.0) continue;
      ++rotations;

      const double alpha = a(p, p).real();
      const double gamma = a(q, q).real();
      const Complex phase = beta / absb;

      // Smaller-magnitude root of t^2 + 2*tau*t - 1 = 0 picks the rotation
      // angle <= pi/4, which keeps the iteration stable.
      const double tau = (alpha - gamma) / (2.0 * absb);
      const double sign = (tau >= 0.0) ? 1.0 : -1.0;
      double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      if (!std::isfinite(t)) t = 0.0;  // |tau| overflow: rotation degenerates
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const Complex s = (t * c) * std::conj(phase);
      const Complex s_conj = std::conj(s);

      // A <- A G (columns p, q), then A <- G* A (rows p, q).
      for (int k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp + s * akq;
        a(k, q) = -s_conj * akp + c * akq;
      }
      for (int k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + s_conj * aqk;
        a(q, k) = -s * apk + c * aqk;
      }
      // The pivot entries have closed forms; writing them directly removes
      // the rounding dust the general update leaves behind.
      a(p, p) = Complex(alpha + t * absb, 0.0);
      a(q, q) = Complex(gamma - t * absb, 0.0);
      a(p, q) = Complex(0.0, 0.0);
      a(q, p) = Complex(0.0, 0.0);

      for (int k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp + s * vkq;
        v(k, q) = -s_conj * vkp + c * vkq;
      }
    }
  }
  return rotations;
}

}  // namespace

EigenDecomposition hermitian_eigen_full(const HermitianMatrix& input) {
  const int n = input.dim();
  ComplexMatrix a = input.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > kOffTol * scale) {
    if (sweeps >= kMaxSweeps)
      throw std::runtime_error("hermitian_eigen: no convergence within " +
                               std::to_string(kMaxSweeps) + " sweeps");
    jacobi_sweep(a, v);
    ++sweeps;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition dec{std::vector<double>(static_cast<std::size_t>(n)),
                         ComplexMatrix(n), sweeps};
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    dec.eigenvalues[static_cast<std::size_t>(j)] = a(src, src).real();
    for (int i = 0; i < n; ++i) dec.eigenvectors(i, j) = v(i, src);
  }
  return dec;
}

Spectrum hermitian_eigen(const HermitianMatrix& input) {
  EigenDecomposition dec = hermitian_eigen_full(input);
  const int n = input.dim();
  const ComplexMatrix& m = input.matrix();
  const ComplexMatrix& v = dec.eigenvectors;

  double residual = 0.0;
  for (int j = 0; j < n; ++j) {
    const double lambda = dec.eigenvalues[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      Complex r(0.0, 0.0);
      for (int k = 0; k < n; ++k) r += m(i, k) * v(k, j);
      r -= lambda * v(i, j);
      residual = std::max(residual, std::abs(r));
    }
  }

  double ortho = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex g(0.0, 0.0);
      for (int k = 0; k < n; ++k) g += std::conj(v(k, i)) * v(k, j);
      if (i == j) g -= 1.0;
      ortho = std::max(ortho, std::abs(g));
    }

  double lambda_scale = 0.0;
  for (double lambda : dec.eigenvalues) lambda_scale = std::max(lambda_scale, std::abs(lambda));
  if (residual > kResidualTol * std::max(1.0, lambda_scale) || ortho > kOrthoTol)
    throw std::runtime_error("hermitian_eigen: certificate out of tolerance");

  return Spectrum{std::move(dec.eigenvalues), residual, ortho};
}

}  // namespace tsallis
