#include "vilenkin/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vilenkin {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::string format_number(Index value) { return std::to_string(value); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CSV header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("CSV row has " + std::to_string(row.size()) + " fields, expected " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

namespace {

void write_line(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& text) {
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  if (text == "nan") return NAN;
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad number '" + text + "' in CSV");
  }
  return value;
}

std::vector<Complex> complex_column(const CsvTable& table, Index expected) {
  if (table.header() != std::vector<std::string>{"index", "re", "im"}) {
    throw std::invalid_argument("expected CSV header index,re,im");
  }
  if (table.rows().size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " CSV rows, got " +
                                std::to_string(table.rows().size()));
  }
  std::vector<Complex> values(expected);
  for (Index i = 0; i < expected; ++i) {
    const auto& row = table.rows()[i];
    if (row[0] != std::to_string(i)) throw std::invalid_argument("CSV rows out of index order");
    values[i] = {parse_double(row[1]), parse_double(row[2])};
  }
  return values;
}

template <typename Values>
CsvTable complex_table(const Values& values) {
  CsvTable table({"index", "re", "im"});
  for (Index i = 0; i < values.size(); ++i) {
    table.add_row({std::to_string(i), format_number(values[i].real()), format_number(values[i].imag())});
  }
  return table;
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
  write_line(os, header_);
  for (const auto& row : rows_) write_line(os, row);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

void CsvTable::write_file(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    write(out);
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

CsvTable CsvTable::parse(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty CSV input");
  CsvTable table(split_line(line));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    table.add_row(split_line(line));
  }
  return table;
}

CsvTable to_csv(const CylinderGrid1D& f) { return complex_table(f.values()); }
CsvTable to_csv(const Spectrum1D& s) { return complex_table(s.coeffs()); }

CylinderGrid1D grid_from_csv(const CsvTable& table, const ModulusSequence& ms, std::size_t depth) {
  return CylinderGrid1D(ms, depth, complex_column(table, ms.scale(depth)));
}

Spectrum1D spectrum_from_csv(const CsvTable& table, const ModulusSequence& ms, std::size_t depth) {
  return Spectrum1D(ms, depth, complex_column(table, ms.scale(depth)));
}

}  // namespace vilenkin
