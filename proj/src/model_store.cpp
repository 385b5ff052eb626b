#include "taptest/model_store.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "taptest/errors.hpp"
#include "taptest/rng.hpp"

namespace taptest {
namespace {

using json = nlohmann::json;
using Index = Eigen::Index;

json vector_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector vector_from(const json& j, const char* field) {
  if (!j.is_array()) throw DataError(std::string("schema mismatch: '") + field + "' must be an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw DataError(std::string("schema mismatch: '") + field + "' must hold numbers");
    v(static_cast<Index>(i)) = j[i].get<double>();
  }
  return v;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DataError(std::string("schema mismatch: missing '") + key + "'");
  return j.at(key);
}

std::size_t size_from(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw DataError(std::string("schema mismatch: '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double number_from(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number()) throw DataError(std::string("schema mismatch: '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

void TrainedMachine::validate() const {
  pca.validate();
  regions.validate();
  try {
    segmentation.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("invariant violated: segmentation config: ") + e.what());
  }
  if (pca.n() != segmentation.tap_length_n) {
    throw ValidationError("invariant violated: pca.n must equal segmentation.tap_length_n");
  }
  if (regions.c() > pca.n()) {
    throw ValidationError("invariant violated: regions.c must not exceed the number of components");
  }
}

std::string table_fingerprint(const TapTable& table) {
  std::string bytes;
  const auto append = [&](const void* p, std::size_t size) {
    bytes.append(static_cast<const char*>(p), size);
  };
  const std::uint64_t m = table.m(), n = table.n();
  append(&m, sizeof m);
  append(&n, sizeof n);
  for (Index r = 0; r < table.rows.rows(); ++r)
    for (Index c = 0; c < table.rows.cols(); ++c) {
      const double v = table.rows(r, c);
      append(&v, sizeof v);
    }
  for (const auto& l : table.labels) {
    bytes += l;
    bytes.push_back('\0');
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return hex;
}

std::string serialize(const TrainedMachine& machine) {
  machine.validate();
  json j;
  j["version"] = std::string(kModelVersion);
  j["n"] = machine.pca.n();
  j["mean"] = vector_json(machine.pca.mean);
  j["singular_values"] = vector_json(machine.pca.singular_values);
  json columns = json::array();
  for (Index c = 0; c < machine.pca.projection.cols(); ++c) {
    columns.push_back(vector_json(machine.pca.projection.col(c)));
  }
  j["projection"] = std::move(columns);
  j["explained"] = vector_json(machine.pca.explained);

  json regions;
  regions["k"] = machine.regions.k();
  regions["c"] = machine.regions.c();
  json centroids = json::array();
  for (Index r = 0; r < machine.regions.centroids.rows(); ++r) {
    centroids.push_back(vector_json(machine.regions.centroids.row(r).transpose()));
  }
  regions["centroids"] = std::move(centroids);
  json mapping = json::object();
  for (std::size_t c = 0; c < machine.regions.cluster_to_label.size(); ++c) {
    mapping[std::to_string(c)] = machine.regions.cluster_to_label[c];
  }
  regions["cluster_to_label"] = std::move(mapping);
  j["regions"] = std::move(regions);

  const auto& seg = machine.segmentation;
  j["segmentation"] = {{"peak_window", seg.peak_window},
                       {"tap_length_n", seg.tap_length_n},
                       {"low_factor", seg.low_factor},
                       {"high_factor", seg.high_factor}};
  json counts = json::object();
  for (const auto& [label, count] : machine.provenance.label_counts) counts[label] = count;
  j["provenance"] = {{"label_counts", std::move(counts)}, {"fingerprint", machine.provenance.fingerprint}};
  return j.dump(2) + "\n";
}

TrainedMachine deserialize(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("model parse error: ") + e.what());
  }
  if (!j.is_object()) throw DataError("schema mismatch: model must be a JSON object");
  const json& version = member(j, "version");
  if (!version.is_string() || version.get<std::string>() != kModelVersion) {
    throw DataError("schema mismatch: unsupported model version");
  }

  TrainedMachine m;
  const std::size_t n = size_from(j, "n");
  m.pca.mean = vector_from(member(j, "mean"), "mean");
  m.pca.singular_values = vector_from(member(j, "singular_values"), "singular_values");
  m.pca.explained = vector_from(member(j, "explained"), "explained");
  const json& projection = member(j, "projection");
  if (!projection.is_array() || projection.size() != n) {
    throw DataError("schema mismatch: 'projection' must hold n columns");
  }
  m.pca.projection.resize(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const Vector col = vector_from(projection[c], "projection");
    if (static_cast<std::size_t>(col.size()) != n) {
      throw DataError("schema mismatch: projection column " + std::to_string(c) + " must have n entries");
    }
    m.pca.projection.col(static_cast<Index>(c)) = col;
  }
  if (static_cast<std::size_t>(m.pca.mean.size()) != n) throw DataError("schema mismatch: 'mean' must have n entries");

  const json& regions = member(j, "regions");
  const std::size_t k = size_from(regions, "k");
  const std::size_t c = size_from(regions, "c");
  const json& centroids = member(regions, "centroids");
  if (!centroids.is_array() || centroids.size() != k) throw DataError("schema mismatch: 'centroids' must hold k rows");
  m.regions.centroids.resize(static_cast<Index>(k), static_cast<Index>(c));
  for (std::size_t r = 0; r < k; ++r) {
    const Vector row = vector_from(centroids[r], "centroids");
    if (static_cast<std::size_t>(row.size()) != c) throw DataError("schema mismatch: centroid rows must have c entries");
    m.regions.centroids.row(static_cast<Index>(r)) = row.transpose();
  }
  const json& mapping = member(regions, "cluster_to_label");
  if (!mapping.is_object()) throw DataError("schema mismatch: 'cluster_to_label' must be an object");
  for (std::size_t r = 0; r < k; ++r) {
    const auto key = std::to_string(r);
    if (!mapping.contains(key) || !mapping.at(key).is_string()) {
      throw ValidationError("invariant violated: cluster_to_label must cover every cluster");
    }
    m.regions.cluster_to_label.push_back(mapping.at(key).get<std::string>());
  }
  if (mapping.size() != k) throw ValidationError("invariant violated: cluster_to_label has extra clusters");

  const json& seg = member(j, "segmentation");
  m.segmentation.peak_window = number_from(seg, "peak_window");
  m.segmentation.tap_length_n = size_from(seg, "tap_length_n");
  m.segmentation.low_factor = number_from(seg, "low_factor");
  m.segmentation.high_factor = number_from(seg, "high_factor");

  const json& prov = member(j, "provenance");
  const json& counts = member(prov, "label_counts");
  if (!counts.is_object()) throw DataError("schema mismatch: 'label_counts' must be an object");
  for (const auto& [label, count] : counts.items()) {
    if (!count.is_number_integer()) throw DataError("schema mismatch: label counts must be integers");
    m.provenance.label_counts[label] = count.get<std::size_t>();
  }
  const json& fp = member(prov, "fingerprint");
  if (!fp.is_string()) throw DataError("schema mismatch: 'fingerprint' must be a string");
  m.provenance.fingerprint = fp.get<std::string>();

  m.validate();
  return m;
}

void save(const TrainedMachine& machine, const std::filesystem::path& path) {
  const std::string text = serialize(machine);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

TrainedMachine load(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open model '" + path.string() + "'");
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  try {
    return deserialize(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace taptest
