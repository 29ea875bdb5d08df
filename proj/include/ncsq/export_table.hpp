#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncsq {

enum class ExportFormat { kCsv, kJson };

// Throws DomainError for anything but "csv" or "json".
ExportFormat parse_export_format(std::string_view text);
const char* export_format_name(ExportFormat format);

// Named numeric table with a provenance header. Rows are stored row-major.
class ExportTable {
 public:
  ExportTable(std::string name, std::vector<std::string> columns);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t column_count() const { return columns_.size(); }
  std::size_t row_count() const {
    return columns_.empty() ? 0 : data_.size() / columns_.size();
  }

  // Throws DomainError unless row.size() == column_count().
  void add_row(std::span<const double> row);
  void add_row(std::initializer_list<double> row) {
    add_row(std::span<const double>(row.begin(), row.size()));
  }

  double at(std::size_t row, std::size_t col) const {
    return data_[row * columns_.size() + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * columns_.size(), columns_.size()};
  }
  // Index of a named column; throws DomainError if absent.
  std::size_t column_index(std::string_view column) const;

  // Insertion-ordered provenance entries.
  void set_meta(std::string key, std::string value);
  const std::vector<std::pair<std::string, std::string>>& meta() const {
    return meta_;
  }
  const std::string* find_meta(std::string_view key) const;

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<double> data_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

// Shortest decimal text (at most 17 significant digits) that parses back
// to exactly `value`.
std::string format_double(double value);

// '#'-prefixed "key: value" header lines, one header row, then
// comma-separated rows in round-trip precision.
std::string to_csv(const ExportTable& table);
// {"meta": {...}, "columns": [...], "data": [[...], ...]}
std::string to_json(const ExportTable& table);

// Inverse of to_csv. Throws DomainError on malformed input.
ExportTable parse_csv(std::string_view text, std::string name = "table");

// Writes <dir>/<name>.<csv|json>, creating dir as needed. Throws IoError.
std::filesystem::path write_table(const ExportTable& table,
                                  const std::filesystem::path& dir,
                                  ExportFormat format);

}  // namespace ncsq
