#pragma once

// The trained machine: PCA projection + k-means regions + the segmentation
// settings used to build the training table, persisted as one JSON file.
//
// Schema (version "1"):
//   {
//     "version": "1",
//     "n": <int>,
//     "mean": [n numbers],
//     "singular_values": [min(m, n) numbers, non-increasing],
//     "projection": [n columns, each an array of n numbers],
//     "explained": [n numbers summing to 1],
//     "regions": {"k": <int>, "c": <int>, "centroids": [[c numbers] x k],
//                 "cluster_to_label": {"0": "<label>", ...}},
//     "segmentation": {"peak_window": s, "tap_length_n": n,
//                      "low_factor": x, "high_factor": y},
//     "provenance": {"label_counts": {"<label>": count, ...},
//                    "fingerprint": "<16 hex digits>"}
//   }

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "taptest/clustering.hpp"
#include "taptest/pca.hpp"
#include "taptest/segmentation.hpp"

namespace taptest {

inline constexpr std::string_view kModelVersion = "1";

struct Provenance {
  std::map<std::string, std::size_t> label_counts;
  std::string fingerprint;
};

struct TrainedMachine {
  PcaModel pca;
  RegionModel regions;
  SegmentationConfig segmentation;
  Provenance provenance;

  /// Component checks plus the cross-checks: pca.n == tap_length_n and
  /// regions.c <= pca.n.
  void validate() const;
};

/// FNV-1a over the shape, values and labels of a table, as 16 hex digits.
std::string table_fingerprint(const TapTable& table);

std::string serialize(const TrainedMachine& machine);
/// Throws DataError on malformed JSON or schema mismatch, ValidationError on
/// an invariant violation.
TrainedMachine deserialize(std::string_view text);

void save(const TrainedMachine& machine, const std::filesystem::path& path);
TrainedMachine load(const std::filesystem::path& path);

}  // namespace taptest
