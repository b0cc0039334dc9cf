#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msde/experiment.hpp"

namespace msde {

// Scientific notation with 10 significant digits, locale-independent.
std::string format_scientific(double v);

// columns: problem,algorithm,mfv,sd,me,afe,sr,runs
std::string to_csv(const ExperimentTable& table);
// columns: cr,mean_afe
std::string to_csv(const std::vector<std::pair<double, double>>& sweep);
// columns: problem,verdict  plus a trailing total_plus row
std::string to_csv(const std::vector<ComparisonRow>& rows);

// Writes the text in a single operation; a failure throws std::runtime_error
// and leaves no partial file behind on open failure.
void emit_csv(const std::string& csv, const std::string& path);

// Round-trips the run-table schema (and feeds the compare subcommand).
ExperimentTable parse_experiment_csv(const std::string& text);

}  // namespace msde
