#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace whitham::harness {

/// Shortest round-trip-safe text for a double, 17 significant digits.
std::string format_double(double v);

/// Six significant digits, for human-readable messages only.
std::string format_short(double v);

/// A named numeric table written as CSV.
struct CsvTable {
  std::string name;  ///< file stem, e.g. "energy_direct"
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  std::string to_string() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace whitham::harness
