#pragma once

// Test-only generators and independent oracles.

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "taptest/tap_table.hpp"
#include "taptest/waveform.hpp"

namespace taptest::testing {

/// Gaussian table with a random scale per column, so the spectrum is uneven.
inline Matrix random_table(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.2, 3.0);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  Matrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const double s = scale(rng), o = shift(rng);
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = o + s * g(rng);
  }
  return a;
}

inline Matrix centered(const Matrix& a) {
  return a.rowwise() - a.colwise().mean();
}

/// Flips each column so its largest-magnitude entry (first on ties) is positive.
/// Returns the applied signs.
inline std::vector<double> sign_fix(Matrix& m) {
  std::vector<double> signs(static_cast<std::size_t>(m.cols()), 1.0);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > std::abs(m(best, j))) best = i;
    if (m(best, j) < 0) {
      m.col(j) *= -1.0;
      signs[static_cast<std::size_t>(j)] = -1.0;
    }
  }
  return signs;
}

/// PCA by eigendecomposition of the sample covariance, descending order.
struct CovarianceOracle {
  Matrix vectors;       // n x n
  Vector eigenvalues;   // n, descending, clamped at 0
  Vector explained;     // n
};

inline CovarianceOracle covariance_oracle(const Matrix& a) {
  const Matrix ac = centered(a);
  const Matrix cov = ac.transpose() * ac / static_cast<double>(a.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Matrix> es(cov);
  const Eigen::Index n = cov.rows();
  CovarianceOracle o;
  o.vectors.resize(n, n);
  o.eigenvalues.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    o.vectors.col(j) = es.eigenvectors().col(n - 1 - j);
    o.eigenvalues(j) = std::max(0.0, es.eigenvalues()(n - 1 - j));
  }
  sign_fix(o.vectors);
  o.explained = o.eigenvalues / o.eigenvalues.sum();
  return o;
}

/// True when eigenvalue j is separated from its neighbours, so its vector is
/// defined up to sign.
inline bool well_separated(const Vector& eig, Eigen::Index j, double rel = 1e-6) {
  const double tol = rel * std::max(eig(0), 1e-300);
  if (eig(j) <= tol) return false;
  if (j > 0 && eig(j - 1) - eig(j) <= tol) return false;
  if (j + 1 < eig.size() && eig(j) - eig(j + 1) <= tol) return false;
  return true;
}

/// First-c columns of V * Delta from Eigen's SVD of the centered table, with
/// the right vectors sign-normalized and the left vectors flipped to match.
inline Matrix reference_scores(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(centered(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix right = svd.matrixV();
  Matrix left = svd.matrixU();
  const auto signs = sign_fix(right);
  const Eigen::Index r = svd.singularValues().size();
  Matrix s = Matrix::Zero(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < r; ++j) s.col(j) = left.col(j) * svd.singularValues()(j) * signs[static_cast<std::size_t>(j)];
  return s;
}

struct BruteForce2 {
  double objective = std::numeric_limits<double>::infinity();
  std::vector<int> partition;
};

/// Exhaustive minimum of the 2-means objective; point 0 is fixed in group 0.
inline BruteForce2 brute_force_two_means(const Matrix& p) {
  const auto m = static_cast<std::size_t>(p.rows());
  BruteForce2 best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (m - 1)); ++mask) {
    std::vector<int> part(m, 0);
    for (std::size_t i = 1; i < m; ++i) part[i] = static_cast<int>((mask >> (i - 1)) & 1U);
    double obj = 0.0;
    bool empty = false;
    for (int g = 0; g < 2; ++g) {
      Vector mean = Vector::Zero(p.cols());
      std::size_t cnt = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (part[i] == g) { mean += p.row(static_cast<Eigen::Index>(i)).transpose(); ++cnt; }
      if (cnt == 0) { empty = true; break; }
      mean /= static_cast<double>(cnt);
      for (std::size_t i = 0; i < m; ++i)
        if (part[i] == g) obj += (p.row(static_cast<Eigen::Index>(i)).transpose() - mean).squaredNorm();
    }
    if (!empty && obj < best.objective) {
      best.objective = obj;
      best.partition = part;
    }
  }
  return best;
}

/// Decaying-cosine tap with its largest sample at offset 0.
inline std::vector<double> tap_template(std::size_t length = 300, double sample_rate = 44100.0,
                                        double freq = 2000.0, double decay_samples = 30.0) {
  std::vector<double> t(length);
  for (std::size_t i = 0; i < length; ++i) {
    const double x = static_cast<double>(i);
    t[i] = std::exp(-x / decay_samples) * std::cos(2.0 * std::numbers::pi * freq * x / sample_rate);
  }
  return t;
}

/// Adds `scale * tmpl` into `w` starting at `at`.
inline void stamp(std::vector<double>& w, const std::vector<double>& tmpl, std::size_t at, double scale) {
  for (std::size_t i = 0; i < tmpl.size() && at + i < w.size(); ++i) w[at + i] += scale * tmpl[i];
}

}  // namespace taptest::testing
