#pragma once

// Plain CSV tables with a header row. Numbers are written in shortest
// round-trip form so identical inputs give byte-identical files.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/basis.hpp"

namespace vilenkin {

std::string format_number(double value);
std::string format_number(Index value);
inline std::string format_number(int value) { return std::to_string(value); }
inline std::string format_bool(bool value) { return value ? "1" : "0"; }

class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  /// Throws std::invalid_argument when the width does not match the header.
  void add_row(std::vector<std::string> row);

  void write(std::ostream& os) const;
  std::string str() const;

  /// Writes to `path` through a temporary sibling file and a rename.
  void write_file(const std::filesystem::path& path) const;

  static CsvTable parse(std::istream& is);

private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Grids and spectra as (index, re, im) rows.
CsvTable to_csv(const CylinderGrid1D& f);
CsvTable to_csv(const Spectrum1D& s);
CylinderGrid1D grid_from_csv(const CsvTable& table, const ModulusSequence& ms, std::size_t depth);
Spectrum1D spectrum_from_csv(const CsvTable& table, const ModulusSequence& ms, std::size_t depth);

}  // namespace vilenkin
