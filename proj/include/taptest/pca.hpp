#pragma once

// Principal component analysis by singular value decomposition of the
// column-centred observation table.
//
// Naming: for the centred table X (m x n), X = L * diag(s) * R^T. R is the
// n x n projection matrix (one principal axis per column) and L * diag(s) are
// the training scores.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "taptest/tap_table.hpp"

namespace taptest {

struct PcaModel {
  Vector mean;             // per-variable training means, length n
  Matrix projection;       // n x n, orthonormal columns, decreasing singular value
  Vector singular_values;  // length min(m, n), non-increasing, >= 0
  Vector explained;        // length n, per-component share of total variance

  std::size_t n() const { return static_cast<std::size_t>(mean.size()); }

  /// Re-checks every invariant; throws ValidationError naming the first
  /// one that fails.
  void validate() const;
};

/// Observations in principal-component space.
struct ScoreTable {
  Matrix scores;  // rows x c
  std::vector<std::string> labels;

  std::size_t rows() const { return static_cast<std::size_t>(scores.rows()); }
  std::size_t component_count() const { return static_cast<std::size_t>(scores.cols()); }
};

struct SvdResult {
  Matrix left;             // m x n; column j is a unit left singular vector (zero when s_j = 0)
  Vector singular_values;  // length n, non-increasing
  Matrix right;            // n x n orthonormal
};

/// One-sided (Hestenes) Jacobi SVD. Columns are ordered by decreasing singular
/// value and each right singular vector has its largest-magnitude entry
/// positive; the matching left vector is flipped with it.
SvdResult jacobi_svd(Matrix a);

/// Flips the sign of every column of `m` whose largest-magnitude entry is
/// negative. Returns the per-column factor applied (+1 or -1).
std::vector<double> normalize_column_signs(Matrix& m);

PcaModel fit(const TapTable& table);

/// lambda_k / sum(lambda) with lambda_k = s_k^2 (covariance eigenvalues).
Vector explained_variance(const PcaModel& model);

/// Smallest c whose cumulative explained share reaches `threshold`.
std::size_t select_components(std::span<const double> explained, double threshold = 0.95);
std::size_t select_components(const PcaModel& model, double threshold = 0.95);

/// scores = (A - 1 mean^T) * R(:, 0..c-1). Labels are carried over.
ScoreTable transform(const PcaModel& model, const TapTable& table, std::size_t c);

/// A~ = S * R(:, 0..c-1)^T + 1 mean^T.
TapTable reconstruct(const PcaModel& model, const ScoreTable& scores);

}  // namespace taptest
