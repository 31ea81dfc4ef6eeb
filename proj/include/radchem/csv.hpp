#pragma once
// CSV output with shortest round-trip numeric formatting (byte-identical
// across runs on the same platform).

#include <fstream>
#include <string>
#include <vector>

#include "radchem/stepper.hpp"

namespace radchem {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal representation that round-trips; infinities print "inf".
std::string format_double(double x);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void write_row(const std::vector<double>& cells);
  void write_raw_row(const std::vector<std::string>& cells);
  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
  std::size_t columns_;
};

// DiagnosticsSink writing series.csv rows and retaining records in memory
// for post-run analysis.
class CsvSink : public DiagnosticsSink {
 public:
  static const std::vector<std::string>& series_columns();

  explicit CsvSink(const std::string& path);
  void record(const EnergyRecord& rec) override;
  const std::vector<EnergyRecord>& records() const { return records_; }

 private:
  CsvWriter writer_;
  std::vector<EnergyRecord> records_;
};

// Sink that only collects records (tests, sweeps without persistence).
class MemorySink : public DiagnosticsSink {
 public:
  void record(const EnergyRecord& rec) override { records_.push_back(rec); }
  const std::vector<EnergyRecord>& records() const { return records_; }

 private:
  std::vector<EnergyRecord> records_;
};

}  // namespace radchem
