#include "ncsq/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "ncsq/errors.hpp"

namespace ncsq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ParamInputs apply_config_text(ParamInputs base, std::string_view text) {
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": expected 'name = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view raw = trim(line.substr(eq + 1));
    double value = 0.0;
    const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (raw.empty() || res.ec != std::errc() ||
        res.ptr != raw.data() + raw.size()) {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": malformed value '" + std::string(raw) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": duplicate name '" + std::string(key) + "'");
    }

    if (key == "theta") {
      base.theta = value;
    } else if (key == "eta") {
      base.eta = value;
    } else if (key == "mass") {
      base.mass = value;
    } else if (key == "omega") {
      base.omega = value;
    } else if (key == "hbar") {
      base.hbar = value;
    } else if (key == "lambda") {
      base.lambda = value;
    } else if (key == "mu") {
      base.mu = value;
    } else {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": unknown name '" + std::string(key) + "'");
    }
  }
  return base;
}

ParamInputs apply_config_file(ParamInputs base,
                              const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return apply_config_text(std::move(base), buf.str());
}

}  // namespace ncsq
