#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace tsallis {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major, value semantics.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  int dim() const { return dim_; }
  Complex& operator()(int i, int j) { return a_[idx(i, j)]; }
  const Complex& operator()(int i, int j) const { return a_[idx(i, j)]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;           // max_ij |a_ij|
  double frobenius_norm() const;
  double hermitian_defect() const;  // max_ij |a_ij - conj(a_ji)|

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(double c, const ComplexMatrix& a);

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * dim_ + j;
  }
  int dim_;
  std::vector<Complex> a_;
};

// Square complex matrix certified Hermitian. Construction rejects inputs
// whose defect exceeds kSymmetryTol * max(1, max|a_ij|) and stores the
// symmetrized (A + A*)/2, so downstream code sees an exactly Hermitian matrix.
class HermitianMatrix {
 public:
  static constexpr double kSymmetryTol = 1e-12;

  explicit HermitianMatrix(const ComplexMatrix& m);
  static HermitianMatrix diagonal(std::span<const double> values);

  int dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const;  // real by construction

  // Hermitian matrices are closed under +, - and real scaling; these skip
  // the defect check.
  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double c, const HermitianMatrix& a);

 private:
  struct Trusted {};
  HermitianMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

}  // namespace tsallis
