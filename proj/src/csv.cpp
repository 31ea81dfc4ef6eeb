#include "radchem/csv.hpp"

#include <charconv>
#include <cmath>

namespace radchem {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
  if (!out_) throw IoError("CsvWriter: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::write_row(const std::vector<double>& cells) {
  if (cells.size() != columns_) throw IoError("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_double(cells[i]);
  }
  out_ << '\n';
  if (!out_) throw IoError("CsvWriter: write failed");
}

void CsvWriter::write_raw_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw IoError("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_) throw IoError("CsvWriter: write failed");
}

const std::vector<std::string>& CsvSink::series_columns() {
  static const std::vector<std::string> cols = {
      "t",       "dt",         "mass_u",     "mass_v",  "mass_w",
      "sup_u",   "F",          "D",          "cross_uv", "entropy",
      "weighted_w", "weighted_v", "psi"};
  return cols;
}

CsvSink::CsvSink(const std::string& path) : writer_(path, series_columns()) {}

void CsvSink::record(const EnergyRecord& rec) {
  writer_.write_row({rec.t, rec.dt, rec.mass_u, rec.mass_v, rec.mass_w, rec.sup_u,
                     rec.F, rec.D, rec.cross_uv, rec.entropy, rec.weighted_w,
                     rec.weighted_v, rec.psi});
  records_.push_back(rec);
}

}  // namespace radchem
