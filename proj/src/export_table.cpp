#include "ncsq/export_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ncsq/errors.hpp"

namespace ncsq {

ExportFormat parse_export_format(std::string_view text) {
  if (text == "csv") return ExportFormat::kCsv;
  if (text == "json") return ExportFormat::kJson;
  throw DomainError("unsupported format '" + std::string(text) +
                    "' (expected csv or json)");
}

const char* export_format_name(ExportFormat format) {
  return format == ExportFormat::kCsv ? "csv" : "json";
}

ExportTable::ExportTable(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  if (columns_.empty()) throw DomainError("table needs at least one column");
}

void ExportTable::add_row(std::span<const double> row) {
  if (row.size() != columns_.size()) {
    throw DomainError("row has " + std::to_string(row.size()) +
                      " values, table '" + name_ + "' declares " +
                      std::to_string(columns_.size()) + " columns");
  }
  data_.insert(data_.end(), row.begin(), row.end());
}

std::size_t ExportTable::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == column) return i;
  }
  throw DomainError("table '" + name_ + "' has no column '" +
                    std::string(column) + "'");
}

void ExportTable::set_meta(std::string key, std::string value) {
  for (auto& [k, v] : meta_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta_.emplace_back(std::move(key), std::move(value));
}

const std::string* ExportTable::find_meta(std::string_view key) const {
  for (const auto& [k, v] : meta_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string to_csv(const ExportTable& table) {
  std::string out;
  for (const auto& [k, v] : table.meta()) {
    out += "# " + k + ": " + v + "\n";
  }
  for (std::size_t c = 0; c < table.column_count(); ++c) {
    if (c) out += ',';
    out += table.columns()[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    for (std::size_t c = 0; c < table.column_count(); ++c) {
      if (c) out += ',';
      out += format_double(table.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ExportTable& table) {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.meta()) meta[k] = v;
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    auto row = table.row(r);
    data.push_back(std::vector<double>(row.begin(), row.end()));
  }
  nlohmann::ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["columns"] = table.columns();
  doc["data"] = std::move(data);
  return doc.dump() + "\n";
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

ExportTable parse_csv(std::string_view text, std::string name) {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string_view> lines = split(text, '\n');
  std::size_t i = 0;
  for (; i < lines.size() && !lines[i].empty() && lines[i].front() == '#';
       ++i) {
    std::string_view body = lines[i].substr(1);
    if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    const auto colon = body.find(": ");
    if (colon == std::string_view::npos) {
      throw DomainError("malformed header line: " + std::string(lines[i]));
    }
    meta.emplace_back(std::string(body.substr(0, colon)),
                      std::string(body.substr(colon + 2)));
  }
  if (i >= lines.size() || lines[i].empty()) {
    throw DomainError("CSV has no column header");
  }
  std::vector<std::string> columns;
  for (auto c : split(lines[i], ',')) columns.emplace_back(c);
  ExportTable table(std::move(name), std::move(columns));
  for (auto& [k, v] : meta) table.set_meta(k, v);

  std::vector<double> row;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    row.clear();
    for (auto cell : split(lines[i], ',')) {
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw DomainError("malformed number '" + std::string(cell) + "'");
      }
      row.push_back(v);
    }
    table.add_row(row);
  }
  return table;
}

std::filesystem::path write_table(const ExportTable& table,
                                  const std::filesystem::path& dir,
                                  ExportFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory " + dir.string() + ": " +
                  ec.message());
  }
  const auto path =
      dir / (table.name() + "." + export_format_name(format));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << (format == ExportFormat::kCsv ? to_csv(table) : to_json(table));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
  return path;
}

}  // namespace ncsq
