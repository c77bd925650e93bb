#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetalab::cli {

enum class Format { json, csv, md };

struct Check {
  std::string name;
  bool passed = false;
  std::optional<double> residual;  // measured quantity, when there is one
  std::string detail;
};

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;  // echo of the invocation
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0;
  std::vector<Check> checks;
  std::vector<std::string> lines;  // one-line summaries
  std::vector<Table> tables;

  void check(std::string name, bool passed, std::optional<double> residual = {},
             std::string detail = {});
  bool passed() const;
};

/// Wall time is the only nondeterministic field; drop it to compare runs.
std::string render(const Report& r, Format f, bool with_wall_time = true);

/// Shortest round-trip formatting, so equal doubles print identically.
std::string format_double(double x);

}  // namespace thetalab::cli
