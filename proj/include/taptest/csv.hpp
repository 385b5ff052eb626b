#pragma once

// CSV tables: a header row whose first cell is "label", then one numeric
// column per variable. Tap tables use v1..vn, score tables pc1..pcc.
// Values are written with 17 significant digits so a write/read cycle is
// exact.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "taptest/pca.hpp"
#include "taptest/tap_table.hpp"

namespace taptest {

/// Parsed CSV body: column names after "label", one label per row (possibly
/// empty) and the numeric block.
struct LabeledCsv {
  std::vector<std::string> columns;
  std::vector<std::string> labels;
  Matrix values;
};

/// Throws DataError naming the line for ragged rows or non-numeric cells.
LabeledCsv parse_labeled_csv(std::istream& in, const std::string& source);
void write_labeled_csv(std::ostream& out, const std::vector<std::string>& columns,
                       const std::vector<std::string>& labels, const Matrix& values);

/// Formats a double with 17 significant digits.
std::string format_double(double v);
/// Quotes a CSV field when it contains a comma, quote or leading/trailing space.
std::string csv_field(const std::string& s);

TapTable read_csv_table(const std::filesystem::path& path);
TapTable parse_csv_table(std::istream& in, const std::string& source = "<stream>");
void write_csv_table(const std::filesystem::path& path, const TapTable& table);
void write_csv_table(std::ostream& out, const TapTable& table);

ScoreTable read_score_csv(const std::filesystem::path& path);
void write_score_csv(const std::filesystem::path& path, const ScoreTable& scores);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace taptest
