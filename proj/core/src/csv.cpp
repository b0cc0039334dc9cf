#include "msde/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace msde {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("csv: malformed number: " + s);
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("csv: malformed integer: " + s);
  return v;
}

}  // namespace

std::string format_scientific(double v) {
  char buf[40];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 9);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string to_csv(const ExperimentTable& table) {
  std::string out = "problem,algorithm,mfv,sd,me,afe,sr,runs\n";
  for (const auto& row : table) {
    out += row.problem;
    out += ',';
    out += strategy_name(row.algorithm);
    out += ',';
    out += format_scientific(row.stats.mfv);
    out += ',';
    out += format_scientific(row.stats.sd);
    out += ',';
    out += format_scientific(row.stats.me);
    out += ',';
    out += format_scientific(row.stats.afe);
    out += ',';
    out += std::to_string(row.stats.sr);
    out += ',';
    out += std::to_string(row.stats.runs);
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<std::pair<double, double>>& sweep) {
  std::string out = "cr,mean_afe\n";
  for (const auto& [cr, afe] : sweep) {
    out += format_scientific(cr);
    out += ',';
    out += format_scientific(afe);
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "problem,verdict\n";
  for (const auto& r : rows) {
    out += r.problem;
    out += ',';
    out += r.verdict;
    out += '\n';
  }
  out += "total_plus," + std::to_string(total_plus(rows)) + "\n";
  return out;
}

void emit_csv(const std::string& csv, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

ExperimentTable parse_experiment_csv(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line) ||
      split(line, ',') !=
          std::vector<std::string>{"problem", "algorithm", "mfv", "sd", "me",
                                   "afe", "sr", "runs"})
    throw std::runtime_error("csv: unexpected run-table header");
  ExperimentTable table;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::runtime_error("csv: malformed row: " + line);
    ExperimentRow row;
    row.problem = f[0];
    row.algorithm = parse_strategy(f[1]);
    row.stats.mfv = parse_double(f[2]);
    row.stats.sd = parse_double(f[3]);
    row.stats.me = parse_double(f[4]);
    row.stats.afe = parse_double(f[5]);
    row.stats.sr = parse_int(f[6]);
    row.stats.runs = parse_int(f[7]);
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace msde
