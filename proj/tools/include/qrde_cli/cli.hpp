#pragma once

// Command-line front end. Everything the `qrde` binary does goes through
// run_cli so that tests can drive the exact same code path in-process.
//
// Exit codes: 0 success, 1 validation or domain error, 2 failed check.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrde/game_core.hpp"

namespace qrde::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCheckFailed = 2;

enum class OutputFormat { kText, kCsv, kJson };

// Inclusive linear grid; steps == 1 yields only `start`.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> values() const;
};

// Parses "x" or "start:stop:steps". Throws qrde::Error(kInvalidArgument).
Range parse_range(const std::string& text);

enum class Quantity { kClass, kNe, kRde, kPayoffs, kSensitivity, kThresholds };

struct SweepConfig {
  Range dg_range{0.9, 0.9, 1};
  Range dr_range{0.2, 0.2, 1};
  Range gamma_range{0.0, 0.0, 1};
  OutputFormat format = OutputFormat::kCsv;
  // Kept in canonical order regardless of how they were requested.
  std::vector<Quantity> quantities{Quantity::kClass, Quantity::kNe, Quantity::kRde,
                                   Quantity::kThresholds};
  std::uint64_t seed = 0;
};

// Throws qrde::Error(kInvalidArgument) when a range leaves its domain.
void validate(const SweepConfig& config);

// A column value: number, text token, or empty (undefined).
struct Cell {
  enum class Kind { kNumber, kText, kEmpty } kind = Kind::kEmpty;
  double number = 0.0;
  std::string text;

  static Cell num(double v);
  static Cell str(std::string v);
  static Cell empty();
};

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// d_g outer, d_r middle, gamma inner. Grid points are evaluated in parallel;
// row order is independent of scheduling.
ReportTable sweep(const SweepConfig& config);

// Rounds to 12 significant digits so every output format carries the same
// numbers.
double round_sig12(double v);
std::string format_sig12(double v);

void write_csv(const ReportTable& table, std::ostream& out);
void write_json(const ReportTable& table, std::ostream& out);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrde::cli
