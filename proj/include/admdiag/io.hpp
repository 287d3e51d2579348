#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace admdiag {

/// Shortest round-trip decimal representation of a double (to_chars), so
/// repeated runs produce byte-identical files.
std::string format_double(double value);

/// CSV payload with '#'-prefixed "key = value" metadata lines; every output
/// file carries enough metadata to re-run its producing command.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
  void add_meta(const std::string& key, long value);
  std::string to_string() const;
};

/// Writes content to `path` via a temporary file and rename, so partial
/// outputs are never left behind.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// "key = value" sidecar content from a metadata list.
std::string meta_sidecar(const std::vector<std::pair<std::string, std::string>>& meta);

/// Parses "LO:HI" / "MIN:MAX:STEPS" strings used by the CLI.
std::pair<int, int> parse_window_spec(const std::string& text);
struct RangeSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;
};
RangeSpec parse_range_spec(const std::string& text);

}  // namespace admdiag
