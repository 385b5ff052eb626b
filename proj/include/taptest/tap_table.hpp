#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace taptest {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// The observation table: one row per tap, one column per sample position.
/// Labels are optional; when present there is one per row.
struct TapTable {
  Matrix rows;
  std::vector<std::string> labels;

  std::size_t m() const { return static_cast<std::size_t>(rows.rows()); }
  std::size_t n() const { return static_cast<std::size_t>(rows.cols()); }
  bool labeled() const { return !labels.empty(); }

  /// Throws DataError if the table is empty, labels do not cover every row,
  /// or any entry is non-finite.
  void validate() const;

  /// Distinct labels in lexicographic order.
  std::vector<std::string> distinct_labels() const;

  /// Row indices carrying `label`, in table order.
  std::vector<std::size_t> rows_with_label(const std::string& label) const;

  /// New table made of the given rows (labels follow).
  TapTable select(std::span<const std::size_t> indices) const;
};

/// Stacks tables vertically. All inputs must share n and either all carry
/// labels or none do.
TapTable concat(std::span<const TapTable> parts);

}  // namespace taptest
