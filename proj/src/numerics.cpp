#include "gbnet/numerics.hpp"

#include <cmath>
#include <string>

namespace gbnet {

MatrixXd cholesky_lower(const Eigen::Ref<const MatrixXd>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) {
    throw std::invalid_argument("cholesky_lower: matrix must be square");
  }
  MatrixXd l = MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw FactorizationError(
          "matrix is not positive definite: leading minor of order " +
              std::to_string(j + 1) + " is not positive",
          j + 1);
    }
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j) - l.row(i).head(j).dot(l.row(j).head(j));
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

bool is_symmetric(const Eigen::Ref<const MatrixXd>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

double logdet_spd(const Eigen::Ref<const MatrixXd>& m) {
  MatrixXd l = cholesky_lower(m);
  double acc = 0.0;
  for (int i = 0; i < l.rows(); ++i) acc += std::log(l(i, i));
  return 2.0 * acc;
}

MatrixXd solve_spd(const Eigen::Ref<const MatrixXd>& m,
                   const Eigen::Ref<const MatrixXd>& b) {
  if (m.rows() != b.rows()) {
    throw std::invalid_argument("solve_spd: dimension mismatch");
  }
  MatrixXd l = cholesky_lower(m);
  MatrixXd y = l.triangularView<Eigen::Lower>().solve(b);
  return l.transpose().triangularView<Eigen::Upper>().solve(y);
}

namespace {

// Arguments below this are shifted upward by recurrence before the
// asymptotic series is applied; the truncated series alone is not
// accurate enough under 12.
constexpr double kSeriesCutoff = 12.0;

double log_gamma_series(double x) {
  // Stirling: (x - 1/2) ln x - x + ln(2 pi)/2 + sum B_2n / (2n(2n-1) x^(2n-1))
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = inv * (1.0 / 12.0 +
                  inv2 * (-1.0 / 360.0 +
                  inv2 * (1.0 / 1260.0 +
                  inv2 * (-1.0 / 1680.0 +
                  inv2 * (1.0 / 1188.0 +
                  inv2 * (-691.0 / 360360.0))))));
  constexpr double kHalfLogTwoPi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  double shift = 0.0;
  double y = x;
  while (y < kSeriesCutoff) {
    shift += std::log(y);
    y += 1.0;
  }
  return log_gamma_series(y) - shift;
}

double digamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("digamma: argument must be positive");
  }
  double shift = 0.0;
  double y = x;
  while (y < kSeriesCutoff) {
    shift += 1.0 / y;
    y += 1.0;
  }
  // log(y) - 1/(2y) - 1/(12 y^2) + 1/(120 y^4) - 1/(252 y^6)
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double series = std::log(y) - 0.5 * inv -
                  inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
  return series - shift;
}

SpdMatrix::SpdMatrix(MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("SpdMatrix: matrix must be square");
  }
  if (!is_symmetric(m_)) {
    throw std::invalid_argument("SpdMatrix: matrix is not symmetric");
  }
  cholesky_lower(m_);  // positive definiteness gate
}

SpdMatrix SpdMatrix::identity(int n) { return SpdMatrix(MatrixXd::Identity(n, n)); }

SpdMatrix SpdMatrix::scaled_identity(int n, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("SpdMatrix: scale must be positive");
  }
  return SpdMatrix(scale * MatrixXd::Identity(n, n));
}

}  // namespace gbnet
