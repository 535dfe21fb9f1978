#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace gbnet {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Thrown when a symmetric factorization hits a non-positive pivot.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(const std::string& what, int leading_minor)
      : std::runtime_error(what), leading_minor_(leading_minor) {}
  // 1-based order of the first non-positive-definite leading minor.
  int leading_minor() const { return leading_minor_; }

 private:
  int leading_minor_;
};

// Lower-triangular Cholesky factor of an SPD matrix.
// Throws FactorizationError naming the first failing leading minor.
MatrixXd cholesky_lower(const Eigen::Ref<const MatrixXd>& m);

// Checks max|M - M^T| <= tol * max(1, max|M|).
bool is_symmetric(const Eigen::Ref<const MatrixXd>& m, double tol = 1e-10);

// log det of a symmetric positive definite matrix via Cholesky.
double logdet_spd(const Eigen::Ref<const MatrixXd>& m);

// Solves M s = b for SPD M.
MatrixXd solve_spd(const Eigen::Ref<const MatrixXd>& m,
                   const Eigen::Ref<const MatrixXd>& b);

// ln Gamma(x), x > 0. Stirling series after shifting small arguments up.
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x), x > 0. Upward recurrence into the asymptotic
// regime, then the series through the x^-6 term.
double digamma(double x);

// A square matrix validated symmetric (1e-10 relative) and positive
// definite (Cholesky succeeds) at construction.
class SpdMatrix {
 public:
  explicit SpdMatrix(MatrixXd m);
  static SpdMatrix identity(int n);
  // Scalar precision upsilon as a prior covariance: (1/upsilon) * I_m.
  static SpdMatrix scaled_identity(int n, double scale);

  const MatrixXd& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double logdet() const { return logdet_spd(m_); }

 private:
  MatrixXd m_;
};

}  // namespace gbnet
