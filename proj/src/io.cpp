#include "admdiag/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace admdiag {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, res.ptr);
}

void CsvTable::add_meta(const std::string& key, const std::string& value) {
  meta.emplace_back(key, value);
}
void CsvTable::add_meta(const std::string& key, double value) {
  meta.emplace_back(key, format_double(value));
}
void CsvTable::add_meta(const std::string& key, long value) {
  meta.emplace_back(key, std::to_string(value));
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (const auto& [key, value] : meta) os << "# " << key << " = " << value << "\n";
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    os << columns[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

std::string meta_sidecar(const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream os;
  for (const auto& [key, value] : meta) os << key << " = " << value << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ':')) parts.push_back(token);
  return parts;
}

}  // namespace

std::pair<int, int> parse_window_spec(const std::string& text) {
  const auto parts = split_colon(text);
  if (parts.size() != 2) throw std::invalid_argument("window spec must be LO:HI, got '" + text + "'");
  try {
    return {std::stoi(parts[0]), std::stoi(parts[1])};
  } catch (const std::exception&) {
    throw std::invalid_argument("window spec must be LO:HI, got '" + text + "'");
  }
}

RangeSpec parse_range_spec(const std::string& text) {
  const auto parts = split_colon(text);
  if (parts.size() != 3) {
    throw std::invalid_argument("range spec must be MIN:MAX:STEPS, got '" + text + "'");
  }
  RangeSpec out;
  try {
    out.min = std::stod(parts[0]);
    out.max = std::stod(parts[1]);
    out.steps = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("range spec must be MIN:MAX:STEPS, got '" + text + "'");
  }
  if (out.steps < 1 || (out.steps > 1 && !(out.max >= out.min))) {
    throw std::invalid_argument("range spec must satisfy steps >= 1 and max >= min");
  }
  return out;
}

}  // namespace admdiag
