#include "taptest/pca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "taptest/errors.hpp"
#include "taptest/kernels.hpp"

namespace taptest {
namespace {

using Index = Eigen::Index;

constexpr int kMaxSweeps = 100;
constexpr double kOrthonormalTol = 1e-8;
constexpr double kExplainedSumTol = 1e-9;

Index dominant_entry(const Eigen::Ref<const Vector>& column) {
  Index best = 0;
  double best_abs = -1.0;
  for (Index i = 0; i < column.size(); ++i) {
    if (std::abs(column(i)) > best_abs) {
      best_abs = std::abs(column(i));
      best = i;
    }
  }
  return best;
}

bool all_columns_constant(const Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 1; i < a.rows(); ++i)
      if (a(i, j) != a(0, j)) return false;
  return true;
}

}  // namespace

std::vector<double> normalize_column_signs(Matrix& m) {
  std::vector<double> flips(static_cast<std::size_t>(m.cols()), 1.0);
  for (Index j = 0; j < m.cols(); ++j) {
    if (m.rows() == 0) break;
    if (m(dominant_entry(m.col(j)), j) < 0.0) {
      m.col(j) *= -1.0;
      flips[static_cast<std::size_t>(j)] = -1.0;
    }
  }
  return flips;
}

SvdResult jacobi_svd(Matrix a) {
  const Index m = a.rows();
  const Index n = a.cols();
  Matrix v = Matrix::Identity(n, n);
  const double tol =
      std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<Index>(m, 16));
  // Columns at the rounding floor are numerically null; rotating them against
  // each other only churns when m < n.
  const double floor_norm = std::numeric_limits<double>::epsilon() * a.norm();
  const double null_floor = floor_norm * floor_norm;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const double gamma = a.col(p).dot(a.col(q));
        if (alpha <= null_floor || beta <= null_floor) continue;
        if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;

        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::abs(zeta) > 1e100
                             ? 0.5 / zeta
                             : std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Index i = 0; i < m; ++i) {
          const double ap = a(i, p);
          const double aq = a(i, q);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
        for (Index i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  Vector norms(n);
  for (Index j = 0; j < n; ++j) norms(j) = a.col(j).norm();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return norms(x) > norms(y); });

  SvdResult out;
  out.left = Matrix::Zero(m, n);
  out.right.resize(n, n);
  out.singular_values.resize(n);
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<std::size_t>(j)];
    out.singular_values(j) = norms(src);
    out.right.col(j) = v.col(src);
    if (norms(src) > 0.0) out.left.col(j) = a.col(src) / norms(src);
  }
  const auto flips = normalize_column_signs(out.right);
  for (Index j = 0; j < n; ++j) out.left.col(j) *= flips[static_cast<std::size_t>(j)];
  return out;
}

void PcaModel::validate() const {
  const Index nn = mean.size();
  if (nn < 1) throw ValidationError("invariant violated: model has no variables (n >= 1)");
  if (!mean.allFinite()) throw ValidationError("invariant violated: mean must be finite");
  if (projection.rows() != nn || projection.cols() != nn) {
    throw ValidationError("invariant violated: projection must be n x n");
  }
  if (!projection.allFinite()) throw ValidationError("invariant violated: projection must be finite");
  const Matrix gram = projection.transpose() * projection;
  if ((gram - Matrix::Identity(nn, nn)).cwiseAbs().maxCoeff() > kOrthonormalTol) {
    throw ValidationError("invariant violated: projection columns are not orthonormal");
  }
  for (Index j = 0; j < nn; ++j) {
    if (projection(dominant_entry(projection.col(j)), j) < 0.0) {
      throw ValidationError(
          "invariant violated: sign convention (largest-magnitude entry of each projection "
          "column must be positive)");
    }
  }
  if (singular_values.size() < 1 || singular_values.size() > nn) {
    throw ValidationError("invariant violated: singular_values length must be in [1, n]");
  }
  for (Index k = 0; k < singular_values.size(); ++k) {
    if (!std::isfinite(singular_values(k)) || singular_values(k) < 0.0) {
      throw ValidationError("invariant violated: singular values must be finite and >= 0");
    }
    if (k > 0 && singular_values(k) > singular_values(k - 1)) {
      throw ValidationError("invariant violated: singular values must be non-increasing");
    }
  }
  if (explained.size() != nn) throw ValidationError("invariant violated: explained must have length n");
  if (!explained.allFinite() || (explained.array() < 0.0).any()) {
    throw ValidationError("invariant violated: explained ratios must be finite and >= 0");
  }
  if (std::abs(explained.sum() - 1.0) > kExplainedSumTol) {
    throw ValidationError("invariant violated: explained ratios must sum to 1");
  }
  const Vector expected = explained_variance(*this);
  if ((expected - explained).cwiseAbs().maxCoeff() > kExplainedSumTol) {
    throw ValidationError("invariant violated: explained ratios disagree with singular values");
  }
}

PcaModel fit(const TapTable& table) {
  table.validate();
  if (table.m() < 2) throw DataError("PCA needs at least 2 observations");
  if (all_columns_constant(table.rows)) throw DataError("PCA input has zero total variance");

  PcaModel model;
  model.mean = table.rows.colwise().mean().transpose();
  const Matrix centred = table.rows.rowwise() - model.mean.transpose();
  SvdResult svd = jacobi_svd(centred);

  const Index n = centred.cols();
  const Index rank_bound = std::min<Index>(centred.rows(), n);
  model.projection = std::move(svd.right);
  model.singular_values = svd.singular_values.head(rank_bound);
  model.explained = explained_variance(model);
  return model;
}

Vector explained_variance(const PcaModel& model) {
  Vector out = Vector::Zero(model.mean.size());
  const Index count = std::min<Index>(model.singular_values.size(), out.size());
  double total = 0.0;
  for (Index k = 0; k < count; ++k) total += model.singular_values(k) * model.singular_values(k);
  if (total <= 0.0) throw DataError("explained variance undefined for zero total variance");
  for (Index k = 0; k < count; ++k) out(k) = model.singular_values(k) * model.singular_values(k) / total;
  return out;
}

std::size_t select_components(std::span<const double> explained, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("variance threshold must be in (0, 1]");
  }
  if (explained.empty()) throw std::invalid_argument("no explained-variance ratios");
  // Cumulative sums of ratios that add to 1 can stop a few ulps short of 1.
  constexpr double kSlack = 1e-12;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < explained.size(); ++k) {
    cumulative += explained[k];
    if (cumulative >= threshold - kSlack) return k + 1;
  }
  return explained.size();
}

std::size_t select_components(const PcaModel& model, double threshold) {
  return select_components(std::span<const double>(model.explained.data(),
                                                   static_cast<std::size_t>(model.explained.size())),
                           threshold);
}

ScoreTable transform(const PcaModel& model, const TapTable& table, std::size_t c) {
  if (table.n() != model.n()) {
    throw DataError("dimension mismatch: table has " + std::to_string(table.n()) +
                    " variables, model expects " + std::to_string(model.n()));
  }
  if (c < 1 || c > model.n()) throw std::invalid_argument("component count must be in [1, n]");
  table.validate();
  ScoreTable out;
  const Matrix basis = model.projection.leftCols(static_cast<Index>(c));
  kernels::parallel::project_rows(table.rows, model.mean, basis, out.scores);
  out.labels = table.labels;
  return out;
}

TapTable reconstruct(const PcaModel& model, const ScoreTable& scores) {
  const std::size_t c = scores.component_count();
  if (c < 1 || c > model.n()) {
    throw DataError("dimension mismatch: score table has " + std::to_string(c) +
                    " components, model has n = " + std::to_string(model.n()));
  }
  TapTable out;
  out.rows = scores.scores * model.projection.leftCols(static_cast<Index>(c)).transpose();
  out.rows.rowwise() += model.mean.transpose();
  out.labels = scores.labels;
  return out;
}

}  // namespace taptest
