#pragma once

#include <vector>

#include "tsallis/matrix.hpp"

namespace tsallis {

// Full spectral decomposition A = V diag(values) V*. Eigenvalues are sorted
// descending (ties keep solver output order); eigenvector j sits in column j
// of `eigenvectors`.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  int sweeps = 0;
};

// Eigenvalues plus accuracy certificates:
//   residual              max_j |A v_j - lambda_j v_j|_inf
//   orthonormality_defect max_ij |(V* V - I)_ij|
struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double residual = 0.0;
  double orthonormality_defect = 0.0;
};

EigenDecomposition hermitian_eigen_full(const HermitianMatrix& a);
Spectrum hermitian_eigen(const HermitianMatrix& a);

}  // namespace tsallis
