#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tsallis/density.hpp"
#include "tsallis/eigen.hpp"
#include "tsallis/matrix.hpp"
#include "tsallis/matrix_io.hpp"
#include "tsallis/rng.hpp"

using namespace tsallis;

namespace {

ComplexMatrix random_gaussian(int dim, Xoshiro256& rng) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double re, im;
      rng.normal_pair(re, im);
      g(i, j) = Complex(re, im);
    }
  return g;
}

HermitianMatrix random_hermitian(int dim, Xoshiro256& rng) {
  const ComplexMatrix g = random_gaussian(dim, rng);
  return HermitianMatrix(0.5 * (g + g.adjoint()));
}

// Closed-form eigenvalues of a 2x2 Hermitian matrix, descending.
std::pair<double, double> eig2_oracle(const HermitianMatrix& h) {
  const double a = h.matrix()(0, 0).real();
  const double c = h.matrix()(1, 1).real();
  const double m = 0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), std::abs(h.matrix()(0, 1)));
  return {m + disc, m - disc};
}

double max_entry_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

}  // namespace

TEST_CASE("complex matrix basics") {
  const ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(id.trace() == Complex(3.0, 0.0));
  CHECK(id.hermitian_defect() == 0.0);

  const std::vector<double> d{0.25, 0.75};
  const ComplexMatrix diag = ComplexMatrix::diagonal(d);
  CHECK(diag(0, 0) == Complex(0.25, 0.0));
  CHECK(diag(1, 1) == Complex(0.75, 0.0));
  CHECK(diag(0, 1) == Complex(0.0, 0.0));

  ComplexMatrix a(2);
  a(0, 1) = Complex(1.0, 2.0);
  const ComplexMatrix aa = a.adjoint();
  CHECK(aa(1, 0) == Complex(1.0, -2.0));
  CHECK(a.hermitian_defect() == doctest::Approx(std::abs(Complex(1.0, 2.0))));
  CHECK(a.max_abs() == doctest::Approx(std::sqrt(5.0)));
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(5.0)));

  CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
}

TEST_CASE("hermitian wrapper gates and symmetrizes") {
  ComplexMatrix bad(2);
  bad(0, 1) = Complex(1.0, 0.0);  // strictly upper triangular, defect 1
  CHECK_THROWS_AS(HermitianMatrix{bad}, std::invalid_argument);

  // Noise below kSymmetryTol is absorbed and the stored matrix is exact.
  ComplexMatrix noisy(2);
  noisy(0, 0) = Complex(0.5, 1e-15);
  noisy(0, 1) = Complex(0.1, 0.2);
  noisy(1, 0) = Complex(0.1, -0.2 + 1e-15);
  noisy(1, 1) = Complex(0.5, 0.0);
  const HermitianMatrix h(noisy);
  CHECK(h.matrix().hermitian_defect() == 0.0);
  CHECK(h.matrix()(0, 0).imag() == 0.0);
  CHECK(h.trace() == doctest::Approx(1.0));
}

TEST_CASE("eigen anchors") {
  const std::vector<double> d{0.25, 0.75};
  const Spectrum s1 = hermitian_eigen(HermitianMatrix::diagonal(d));
  REQUIRE(s1.eigenvalues.size() == 2);
  CHECK(s1.eigenvalues[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(s1.eigenvalues[1] == doctest::Approx(0.25).epsilon(1e-14));

  ComplexMatrix m(2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = Complex(0.5, 0.0);
  const Spectrum s2 = hermitian_eigen(HermitianMatrix(m));
  CHECK(s2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(s2.eigenvalues[1]) <= 1e-14);
  CHECK(s2.residual <= 1e-9);
  CHECK(s2.orthonormality_defect <= 1e-9);
}

TEST_CASE("eigenvalues match the 2x2 closed form") {
  Xoshiro256 rng(2001);
  for (int i = 0; i < 2000; ++i) {
    const HermitianMatrix h = random_hermitian(2, rng);
    const auto [hi, lo] = eig2_oracle(h);
    const Spectrum s = hermitian_eigen(h);
    const double scale = std::max(1.0, std::abs(hi));
    CHECK(std::abs(s.eigenvalues[0] - hi) <= 1e-12 * scale);
    CHECK(std::abs(s.eigenvalues[1] - lo) <= 1e-12 * scale);
  }
}

TEST_CASE("decomposition reconstructs the matrix") {
  Xoshiro256 rng(2002);
  for (int trial = 0; trial < 400; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 15.0);  // 2..16
    const HermitianMatrix h = random_hermitian(dim, rng);
    const EigenDecomposition dec = hermitian_eigen_full(h);

    REQUIRE(static_cast<int>(dec.eigenvalues.size()) == dim);
    CHECK(std::is_sorted(dec.eigenvalues.rbegin(), dec.eigenvalues.rend()));

    const ComplexMatrix lam =
        ComplexMatrix::diagonal(std::span<const double>(dec.eigenvalues));
    const ComplexMatrix recon =
        dec.eigenvectors * lam * dec.eigenvectors.adjoint();
    const double scale = std::max(1.0, h.matrix().max_abs());
    CHECK(max_entry_gap(recon, h.matrix()) <= 1e-9 * scale);

    const ComplexMatrix gram =
        dec.eigenvectors.adjoint() * dec.eigenvectors - ComplexMatrix::identity(dim);
    CHECK(gram.max_abs() <= 1e-12);
  }
}

TEST_CASE("spectrum is unitarily invariant") {
  Xoshiro256 rng(2003);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 7.0);  // 2..8
    const HermitianMatrix h = random_hermitian(dim, rng);
    const ComplexMatrix u = sample_unitary(dim, rng);
    const HermitianMatrix rotated(u * h.matrix() * u.adjoint());
    const Spectrum sa = hermitian_eigen(h);
    const Spectrum sb = hermitian_eigen(rotated);
    for (int j = 0; j < dim; ++j)
      CHECK(std::abs(sa.eigenvalues[j] - sb.eigenvalues[j]) <= 1e-9);
  }
}

TEST_CASE("trace norm anchors and norm laws") {
  const std::vector<double> one{1.0, 0.0};
  const std::vector<double> threequarter{0.75, 0.25};
  const HermitianMatrix a = HermitianMatrix::diagonal(one);
  const HermitianMatrix b = HermitianMatrix::diagonal(threequarter);
  CHECK(trace_norm(a - a) == 0.0);
  CHECK(trace_norm(a - b) == doctest::Approx(0.5).epsilon(1e-14));

  Xoshiro256 rng(2004);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 5.0);
    const HermitianMatrix x = random_hermitian(dim, rng);
    const HermitianMatrix y = random_hermitian(dim, rng);
    const double nx = trace_norm(x);
    const double ny = trace_norm(y);
    CHECK(nx >= 0.0);
    CHECK(trace_norm(x + y) <= nx + ny + 1e-9);
    const double c = 4.0 * rng.uniform() - 2.0;
    CHECK(trace_norm(c * x) == doctest::Approx(std::abs(c) * nx).epsilon(1e-10));
  }

  // Distance between density operators never exceeds 2.
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 5.0);
    const DensityOperator r1 = sample_density(dim, rng);
    const DensityOperator r2 = sample_density(dim, rng);
    const double dist = trace_norm(r1.matrix() - r2.matrix());
    CHECK(dist >= 0.0);
    CHECK(dist <= 2.0 + 1e-12);
  }
}

TEST_CASE("sorted eigenvalue gaps are dominated by the trace norm") {
  Xoshiro256 rng(2005);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 2 + static_cast<int>(rng.uniform() * 7.0);
    const HermitianMatrix x = random_hermitian(dim, rng);
    const HermitianMatrix y = random_hermitian(dim, rng);
    const std::vector<double> lx = hermitian_eigen(x).eigenvalues;
    const std::vector<double> ly = hermitian_eigen(y).eigenvalues;
    double gap_sum = 0.0;
    for (int j = 0; j < dim; ++j)
      gap_sum += std::abs(lx[static_cast<std::size_t>(j)] -
                          ly[static_cast<std::size_t>(j)]);
    CHECK(gap_sum <= trace_norm(x - y) + 1e-9);
  }
}

TEST_CASE("density sampling is deterministic in the seed") {
  const DensityOperator a = sample_density(4, 777);
  const DensityOperator b = sample_density(4, 777);
  CHECK(max_entry_gap(a.matrix().matrix(), b.matrix().matrix()) == 0.0);
  const DensityOperator c = sample_density(4, 778);
  CHECK(max_entry_gap(a.matrix().matrix(), c.matrix().matrix()) > 0.0);
}

TEST_CASE("sampled densities are valid states") {
  const DensityOperator trivial = sample_density(1, 5);
  CHECK(trivial.eigenvalues() == std::vector<double>{1.0});

  Xoshiro256 rng(2006);
  double purity_sum = 0.0;
  const int n = 300;
  for (int i = 0; i < n; ++i) {
    const DensityOperator rho = sample_density(4, rng);
    CHECK(std::abs(rho.matrix().trace() - 1.0) <= 1e-12);
    double sum = 0.0;
    double purity = 0.0;
    for (double lambda : rho.eigenvalues()) {
      CHECK(lambda >= 0.0);
      CHECK(lambda <= 1.0);
      sum += lambda;
      purity += lambda * lambda;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    purity_sum += purity;
  }
  // Full-rank ensemble: mean purity sits strictly between pure (1) and
  // maximally mixed (1/4).
  const double mean_purity = purity_sum / n;
  CHECK(mean_purity > 0.3);
  CHECK(mean_purity < 0.7);
}

TEST_CASE("simplex sampling") {
  CHECK(sample_simplex(1, 9).values() == std::vector<double>{1.0});

  Xoshiro256 rng(2007);
  double mean_first = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const ProbVector p = sample_simplex(2, rng);
    double sum = 0.0;
    for (double x : p.values()) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    mean_first += p[0];
  }
  // Exchangeable coordinates: the first coordinate averages 1/2.
  CHECK(std::abs(mean_first / n - 0.5) <= 2e-2);
}

TEST_CASE("sampled unitaries are unitary") {
  Xoshiro256 rng(2008);
  for (int dim : {1, 2, 3, 5, 8}) {
    const ComplexMatrix u = sample_unitary(dim, rng);
    const ComplexMatrix gram = u.adjoint() * u - ComplexMatrix::identity(dim);
    CHECK(gram.max_abs() <= 1e-12);
  }
  const ComplexMatrix u1 = sample_unitary(3, 42);
  const ComplexMatrix u2 = sample_unitary(3, 42);
  CHECK(max_entry_gap(u1, u2) == 0.0);
}

TEST_CASE("probability vector gates") {
  CHECK_NOTHROW(ProbVector({0.5, 0.5}));
  CHECK_NOTHROW(ProbVector({1.0}));
  CHECK_THROWS_AS(ProbVector({}), std::invalid_argument);
  CHECK_THROWS_AS(ProbVector({0.5, -0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ProbVector({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(ProbVector({0.5, std::nan("")}), std::invalid_argument);
}

TEST_CASE("density operator gates") {
  const std::vector<double> half{0.5, 0.5};
  CHECK_NOTHROW(DensityOperator{HermitianMatrix::diagonal(half)});

  const std::vector<double> offtrace{0.6, 0.6};
  CHECK_THROWS_AS(DensityOperator{HermitianMatrix::diagonal(offtrace)},
                  std::invalid_argument);

  const std::vector<double> negative{1.2, -0.2};
  CHECK_THROWS_AS(DensityOperator{HermitianMatrix::diagonal(negative)},
                  std::invalid_argument);
}

TEST_CASE("interpolation between states") {
  const std::vector<double> e0{1.0, 0.0};
  const std::vector<double> e1{0.0, 1.0};
  const DensityOperator a(HermitianMatrix::diagonal(e0));
  const DensityOperator b(HermitianMatrix::diagonal(e1));

  const DensityOperator mid = interpolate(a, b, 0.25);
  CHECK(mid.matrix().matrix()(0, 0).real() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(mid.matrix().matrix()(1, 1).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(max_entry_gap(interpolate(a, b, 0.0).matrix().matrix(),
                      a.matrix().matrix()) == 0.0);
  CHECK(max_entry_gap(interpolate(a, b, 1.0).matrix().matrix(),
                      b.matrix().matrix()) == 0.0);
  CHECK_THROWS_AS(interpolate(a, b, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(interpolate(a, b, -0.5), std::invalid_argument);
}

TEST_CASE("input validation reports the violated invariant") {
  const DensityCheck ok = validate_density(0.5 * ComplexMatrix::identity(2));
  REQUIRE(ok.ok());
  CHECK(ok.state->eigenvalues() == std::vector<double>{0.5, 0.5});

  const std::vector<double> negative{1.2, -0.2};
  const DensityCheck neg = validate_density(ComplexMatrix::diagonal(negative));
  CHECK_FALSE(neg.ok());
  CHECK(neg.error.find("negative eigenvalue") != std::string::npos);

  const std::vector<double> offtrace{0.6, 0.6};
  const DensityCheck tr = validate_density(ComplexMatrix::diagonal(offtrace));
  CHECK_FALSE(tr.ok());
  CHECK(tr.error.find("trace") != std::string::npos);

  ComplexMatrix skew(2);
  skew(0, 1) = Complex(1.0, 0.0);
  const DensityCheck herm = validate_density(skew);
  CHECK_FALSE(herm.ok());
  CHECK(herm.error.find("non-Hermitian") != std::string::npos);

  // Hermitian up to rounding noise is accepted and symmetrized.
  ComplexMatrix noisy(2);
  noisy(0, 0) = Complex(0.5, 0.0);
  noisy(0, 1) = Complex(0.25, 1e-15);
  noisy(1, 0) = Complex(0.25, 0.0);
  noisy(1, 1) = Complex(0.5, 0.0);
  const DensityCheck fixed = validate_density(noisy);
  REQUIRE(fixed.ok());
  CHECK(fixed.state->matrix().matrix().hermitian_defect() == 0.0);
}

TEST_CASE("matrix json round trip") {
  Xoshiro256 rng(2009);
  const ComplexMatrix m = random_gaussian(3, rng);
  const ComplexMatrix back = parse_matrix_json(matrix_to_json(m));
  REQUIRE(back.dim() == 3);
  // %.15g serialization: round trip accurate to 15 significant digits.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(back(i, j) - m(i, j)) <=
            1e-14 * std::max(1.0, std::abs(m(i, j))));
}

TEST_CASE("matrix json accepts bare-number shorthand") {
  const ComplexMatrix m =
      parse_matrix_json(R"({"d": 2, "entries": [[1, [0, 1]], [[0, -1], 0.5]]})");
  CHECK(m(0, 0) == Complex(1.0, 0.0));
  CHECK(m(0, 1) == Complex(0.0, 1.0));
  CHECK(m(1, 0) == Complex(0.0, -1.0));
  CHECK(m(1, 1) == Complex(0.5, 0.0));
}

TEST_CASE("matrix json rejects malformed input") {
  CHECK_THROWS_AS(parse_matrix_json("[]"), std::runtime_error);
  CHECK_THROWS_AS(parse_matrix_json("{not json"), std::runtime_error);
  CHECK_THROWS_AS(parse_matrix_json(R"({"entries": [[1]]})"), std::runtime_error);
  CHECK_THROWS_AS(parse_matrix_json(R"({"d": 0, "entries": []})"), std::runtime_error);
  CHECK_THROWS_AS(parse_matrix_json(R"({"d": 2, "entries": [[1, 0]]})"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_matrix_json(R"({"d": 1, "entries": [[[1, 2, 3]]]})"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_matrix_json(R"({"d": 1, "entries": [["x"]]})"),
                  std::runtime_error);

  try {
    parse_matrix_json(R"({"d": 1, "entries": [["x"]]})");
  } catch (const std::runtime_error& e) {
    // The message locates the offending cell.
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}
