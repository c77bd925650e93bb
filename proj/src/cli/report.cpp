#include "thetalab/cli/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace thetalab::cli {

void Report::check(std::string name, bool passed, std::optional<double> residual, std::string detail) {
  checks.push_back({std::move(name), passed, residual, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{}", x);
}

namespace {

const char* status(bool ok) { return ok ? "pass" : "fail"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_json(const Report& r, bool with_wall_time) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["overall"] = status(r.passed());
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status(c.passed);
    // Non-finite residuals are not JSON numbers; keep them as strings.
    if (!c.residual)
      e["residual"] = nullptr;
    else if (std::isfinite(*c.residual))
      e["residual"] = *c.residual;
    else
      e["residual"] = format_double(*c.residual);
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["lines"] = r.lines;
  auto& tables = j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tables) {
    nlohmann::ordered_json e;
    e["title"] = t.title;
    e["header"] = t.header;
    e["rows"] = t.rows;
    tables.push_back(std::move(e));
  }
  if (with_wall_time) j["wall_time_s"] = r.wall_time_s;
  return j.dump(2) + "\n";
}

std::string render_csv(const Report& r, bool with_wall_time) {
  std::string out = "check,status,residual,detail\n";
  for (const auto& c : r.checks) {
    out += fmt::format("{},{},{},{}\n", csv_field(c.name), status(c.passed),
                       c.residual ? format_double(*c.residual) : "", csv_field(c.detail));
  }
  out += fmt::format("overall,{},,\n", status(r.passed()));
  out += fmt::format("seed,{},,\n", r.seed ? std::to_string(*r.seed) : "");
  if (with_wall_time) out += fmt::format("wall_time_s,{},,\n", format_double(r.wall_time_s));
  return out;
}

std::string render_md(const Report& r, bool with_wall_time) {
  std::string out = fmt::format("# {}\n\n", r.command);
  if (r.seed) out += fmt::format("seed: {}\n\n", *r.seed);
  for (const auto& l : r.lines) out += fmt::format("    {}\n", l);
  if (!r.lines.empty()) out += "\n";
  for (const auto& t : r.tables) {
    if (!t.title.empty()) out += fmt::format("## {}\n\n", t.title);
    std::vector<std::string> head;
    for (const auto& h : t.header) head.push_back(md_cell(h));
    out += fmt::format("| {} |\n|{}\n", fmt::join(head, " | "),
                       [&] {
                         std::string s;
                         for (std::size_t i = 0; i < head.size(); ++i) s += "---|";
                         return s;
                       }());
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(md_cell(c));
      out += fmt::format("| {} |\n", fmt::join(cells, " | "));
    }
    out += "\n";
  }
  if (!r.checks.empty()) {
    out += "## Checks\n\n| check | status | residual | detail |\n|---|---|---|---|\n";
    for (const auto& c : r.checks) {
      out += fmt::format("| {} | {} | {} | {} |\n", md_cell(c.name), status(c.passed),
                         c.residual ? format_double(*c.residual) : "", md_cell(c.detail));
    }
    out += "\n";
  }
  out += fmt::format("overall: {}\n", status(r.passed()));
  if (with_wall_time) out += fmt::format("wall time: {} s\n", format_double(r.wall_time_s));
  return out;
}

}  // namespace

std::string render(const Report& r, Format f, bool with_wall_time) {
  switch (f) {
    case Format::json: return render_json(r, with_wall_time);
    case Format::csv: return render_csv(r, with_wall_time);
    case Format::md: return render_md(r, with_wall_time);
  }
  return {};
}

}  // namespace thetalab::cli
