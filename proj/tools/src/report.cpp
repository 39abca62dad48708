#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qrde/errors.hpp"
#include "qrde_cli/cli.hpp"

namespace qrde::cli {

std::vector<double> Range::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    // Endpoints are hit exactly.
    if (i == steps - 1) {
      out.push_back(stop);
    } else {
      out.push_back(start + (stop - start) * static_cast<double>(i) / (steps - 1));
    }
  }
  return out;
}

Range parse_range(const std::string& text) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidArgument,
                 "expected a number or start:stop:steps, got '" + text + "'");
  };
  auto to_double = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) throw bad();
    return v;
  };

  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() == 1) {
    const double v = to_double(parts[0]);
    return {v, v, 1};
  }
  if (parts.size() != 3) throw bad();
  char* end = nullptr;
  const long steps = std::strtol(parts[2].c_str(), &end, 10);
  if (parts[2].empty() || *end != '\0') throw bad();
  if (steps < 1 || steps > 1000000) {
    throw Error(ErrorCode::kInvalidArgument, "range steps must be in [1, 1e6]");
  }
  return {to_double(parts[0]), to_double(parts[1]), static_cast<int>(steps)};
}

Cell Cell::num(double v) { return {Kind::kNumber, v, {}}; }
Cell Cell::str(std::string v) { return {Kind::kText, 0.0, std::move(v)}; }
Cell Cell::empty() { return {}; }

double round_sig12(double v) {
  if (v == 0.0) return 0.0;
  if (!std::isfinite(v)) return v;
  return std::strtod(format_sig12(v).c_str(), nullptr);
}

std::string format_sig12(double v) {
  if (v == 0.0) return "0";  // folds -0
  return fmt::format("{:.12g}", v);
}

void write_csv(const ReportTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      const Cell& c = row[i];
      switch (c.kind) {
        case Cell::Kind::kNumber: out << format_sig12(c.number); break;
        case Cell::Kind::kText: out << c.text; break;
        case Cell::Kind::kEmpty: break;
      }
    }
    out << '\n';
  }
}

void write_json(const ReportTable& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      switch (c.kind) {
        case Cell::Kind::kNumber: obj[table.columns[i]] = round_sig12(c.number); break;
        case Cell::Kind::kText: obj[table.columns[i]] = c.text; break;
        case Cell::Kind::kEmpty: obj[table.columns[i]] = nullptr; break;
      }
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

}  // namespace qrde::cli
