#include "taptest/tap_table.hpp"

#include <algorithm>
#include <set>

#include "taptest/errors.hpp"

namespace taptest {

void TapTable::validate() const {
  if (rows.rows() == 0 || rows.cols() == 0) {
    throw DataError("tap table is empty");
  }
  if (labeled() && labels.size() != m()) {
    throw DataError("tap table has " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(m()) + " rows");
  }
  if (!rows.allFinite()) {
    throw DataError("tap table contains non-finite values");
  }
}

std::vector<std::string> TapTable::distinct_labels() const {
  std::set<std::string> unique(labels.begin(), labels.end());
  return {unique.begin(), unique.end()};
}

std::vector<std::size_t> TapTable::rows_with_label(const std::string& label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) out.push_back(i);
  }
  return out;
}

TapTable TapTable::select(std::span<const std::size_t> indices) const {
  TapTable out;
  out.rows.resize(static_cast<Eigen::Index>(indices.size()), rows.cols());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out.rows.row(static_cast<Eigen::Index>(i)) = rows.row(static_cast<Eigen::Index>(indices[i]));
    if (labeled()) out.labels.push_back(labels[indices[i]]);
  }
  return out;
}

TapTable concat(std::span<const TapTable> parts) {
  if (parts.empty()) throw DataError("nothing to concatenate");
  const auto n = parts.front().rows.cols();
  const bool labeled = parts.front().labeled();
  Eigen::Index total = 0;
  for (const auto& p : parts) {
    if (p.rows.cols() != n) throw DataError("cannot concatenate tables with different n");
    if (p.labeled() != labeled) throw DataError("cannot mix labeled and unlabeled tables");
    total += p.rows.rows();
  }
  TapTable out;
  out.rows.resize(total, n);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    out.rows.middleRows(at, p.rows.rows()) = p.rows;
    at += p.rows.rows();
    out.labels.insert(out.labels.end(), p.labels.begin(), p.labels.end());
  }
  return out;
}

}  // namespace taptest
