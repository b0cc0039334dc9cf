#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msde/problem.hpp"

namespace msde {

// Per-problem constants loaded from the versioned data files.
struct DataTables {
  std::vector<double> kowalik_a;       // 11 rows
  std::vector<double> kowalik_b;       // b = 1 / inv_b column
  std::vector<double> meyer_t;         // 5 rows
  std::vector<double> meyer_v;
  std::vector<double> meyer_y;
  std::vector<double> rosenbrock_shift;  // 10 rows
};

// Data directory resolution: the MSDE_DATA_DIR environment variable when
// set, otherwise the path baked in at configure time (the source tree's
// core/data for a build-tree checkout).
std::string default_data_dir();

// The eleven-problem benchmark suite: f1..f8 closed-form functions plus the
// pressure-vessel design (f9), the five-atom Lennard-Jones cluster (f10) and
// FM sound-wave parameter estimation (f11).
//
// Construction loads and checksums the data files, then validates the
// catalog: every optimum point must reproduce its optimum value to 1e-3,
// and the Kowalik / Meyer-Roth tables must reproduce their published optima
// to 1e-5. A failure throws std::runtime_error.
class ProblemCatalog {
 public:
  explicit ProblemCatalog(const std::string& data_dir = default_data_dir());

  const std::vector<Problem>& problems() const { return problems_; }
  const Problem& lookup(std::string_view name) const;
  bool contains(std::string_view name) const;

  // Dispatch for the closed-form functions f1..f8 by catalog key.
  double eval_closed_form(std::string_view name, const CandidateVector& x) const;

  const DataTables& tables() const { return tables_; }

 private:
  DataTables tables_;
  std::vector<Problem> problems_;
};

// Regenerates the shifted-Rosenbrock shift vector from its documented seed;
// the committed data file must match this function exactly.
std::vector<double> generate_rosenbrock_shift(int dimension = 10);

}  // namespace msde
