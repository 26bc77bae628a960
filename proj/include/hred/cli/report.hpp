#pragma once

// Line-oriented verification reports.
//
//   # hred report                 <- lines starting with '#' carry timestamps
//   # generated 2026-01-01T00:00:00Z   and wall-clock times; everything else
//   report 1                         is deterministic for fixed inputs/seed
//   workflow verify
//   input_digest sha256:...
//   param tolerance_factor 10
//   stage low-spectrum budget B measured M tolerance_factor F floor A pass
//   # wall low-spectrum 0.012
//   spectrum low-spectrum e0 e1 ...
//   value heisenberg_couplings 8
//   result pass
//   input plan.txt 42             <- name and line count, then the lines
//   > plan 1
//   ...

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hred::cli {

struct StageRecord {
  std::string name;
  double budget = 0;
  double measured = 0;
  double tolerance_factor = 1;
  double wall_seconds = 0;
  std::vector<double> spectrum;
  double floor = 0;  // absolute round-off allowance

  // measured <= budget * tolerance_factor + floor
  bool passed() const { return measured <= budget * tolerance_factor + floor; }
};

struct EmbeddedInput {
  std::string name;
  std::string text;
};

struct VerificationReport {
  std::string workflow;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<StageRecord> stages;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<EmbeddedInput> inputs;
  std::vector<std::string> notes;  // emitted as '# note' lines

  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  void value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }
  bool passed() const;
  std::string digest() const;  // SHA-256 over the embedded inputs
};

std::string sha256_hex(const std::string& data);

// With timestamps = false every comment line (header, wall clock, notes) is omitted,
// leaving the deterministic body.
std::string format_report(const VerificationReport& r, bool timestamps = true);
// Drops comment lines from a formatted report.
std::string report_body(const std::string& formatted);

}  // namespace hred::cli
