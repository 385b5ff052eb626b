#include "taptest/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "taptest/errors.hpp"

namespace taptest {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_record(const std::string& line, const std::string& where) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"' && trim(cur).empty()) {
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(was_quoted ? cur : trim(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw DataError(where + ": unterminated quoted field");
  fields.push_back(was_quoted ? cur : trim(cur));
  return fields;
}

double parse_number(const std::string& cell, const std::string& where) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = cell.data() + cell.size();
  if (!cell.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (cell.empty() || ec != std::errc() || ptr != end) {
    throw DataError(where + ": non-numeric value '" + cell + "'");
  }
  return v;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  return f;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  return f;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> normalize_labels(std::vector<std::string> labels, const std::string& source) {
  std::size_t empty = 0;
  for (const auto& l : labels) empty += l.empty() ? 1 : 0;
  if (empty == labels.size()) return {};
  if (empty != 0) throw DataError(source + ": some rows have a label and others do not");
  return labels;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  const bool needs = s.find_first_of(",\"\n\r") != std::string::npos ||
                     (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

LabeledCsv parse_labeled_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw DataError(source + ": empty file");
  auto header = split_record(line, source + ":" + std::to_string(line_no));
  if (header.empty() || header.front() != "label") {
    throw DataError(source + ": header must start with 'label'");
  }
  LabeledCsv out;
  out.columns.assign(header.begin() + 1, header.end());
  if (out.columns.empty()) throw DataError(source + ": header has no value columns");

  std::vector<std::vector<double>> rows;
  while (next_line()) {
    const std::string where = source + ": line " + std::to_string(line_no);
    const auto fields = split_record(line, where);
    if (fields.size() != header.size()) {
      throw DataError(where + " has " + std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(header.size()) + " (ragged row)");
    }
    out.labels.push_back(fields.front());
    std::vector<double> values;
    values.reserve(out.columns.size());
    for (std::size_t c = 1; c < fields.size(); ++c) {
      values.push_back(parse_number(fields[c], where + ", column " + std::to_string(c + 1)));
    }
    rows.push_back(std::move(values));
  }

  out.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(out.columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      out.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return out;
}

void write_labeled_csv(std::ostream& out, const std::vector<std::string>& columns,
                       const std::vector<std::string>& labels, const Matrix& values) {
  out << "label";
  for (const auto& c : columns) out << ',' << csv_field(c);
  out << '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    out << (labels.empty() ? std::string{} : csv_field(labels[static_cast<std::size_t>(r)]));
    for (Eigen::Index c = 0; c < values.cols(); ++c) out << ',' << format_double(values(r, c));
    out << '\n';
  }
}

TapTable parse_csv_table(std::istream& in, const std::string& source) {
  LabeledCsv csv = parse_labeled_csv(in, source);
  if (csv.values.rows() == 0) throw DataError(source + ": table has no rows");
  TapTable table;
  table.rows = std::move(csv.values);
  table.labels = normalize_labels(std::move(csv.labels), source);
  table.validate();
  return table;
}

TapTable read_csv_table(const std::filesystem::path& path) {
  auto f = open_for_read(path);
  return parse_csv_table(f, path.string());
}

void write_csv_table(std::ostream& out, const TapTable& table) {
  if (table.m() == 0) throw DataError("refusing to write an empty tap table (m >= 1 required)");
  table.validate();
  write_labeled_csv(out, numbered("v", table.n()), table.labels, table.rows);
}

void write_csv_table(const std::filesystem::path& path, const TapTable& table) {
  if (table.m() == 0) throw DataError("refusing to write an empty tap table (m >= 1 required)");
  auto f = open_for_write(path);
  write_csv_table(f, table);
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

ScoreTable read_score_csv(const std::filesystem::path& path) {
  auto f = open_for_read(path);
  LabeledCsv csv = parse_labeled_csv(f, path.string());
  ScoreTable out;
  out.scores = std::move(csv.values);
  out.labels = normalize_labels(std::move(csv.labels), path.string());
  return out;
}

void write_score_csv(const std::filesystem::path& path, const ScoreTable& scores) {
  auto f = open_for_write(path);
  write_labeled_csv(f, numbered("pc", scores.component_count()), scores.labels, scores.scores);
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto f = open_for_write(path);
  f << text;
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace taptest
