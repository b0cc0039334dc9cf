// Command-line front end for the DE/MSDE experiment harness.
//
//   msde run      --problems f1,f6 --algo both --runs 100 --out results.csv
//   msde sweep-cr --problems f6 --algo msde --cr-list 0.1,0.5,0.9 --out fig1.csv
//   msde compare  de.csv msde.csv --out signs.csv
//
// A JSON config file mirroring the experiment spec can seed any subcommand;
// explicit flags override it.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "msde/csv.hpp"
#include "msde/experiment.hpp"

namespace {

using nlohmann::json;

struct CliOptions {
  std::vector<std::string> problems;
  std::string algo = "both";
  int runs = 100;
  int np = 50;
  double f = 0.5;
  double cr = 0.9;
  long max_evals = 200000;
  double limit = 0.0;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
  std::string data_dir;
  std::string config_path;
  std::vector<double> cr_list;
  msde::MemeticConfig memetic{};
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void apply_config_file(CliOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw std::runtime_error("cannot open config: " + opt.config_path);
  json cfg = json::parse(in);

  if (cfg.contains("problems")) opt.problems = cfg["problems"].get<std::vector<std::string>>();
  if (cfg.contains("algorithms")) {
    const auto algos = cfg["algorithms"].get<std::vector<std::string>>();
    opt.algo = algos.size() == 2 ? "both" : algos.at(0);
  }
  if (cfg.contains("runs")) opt.runs = cfg["runs"].get<int>();
  if (cfg.contains("np")) opt.np = cfg["np"].get<int>();
  if (cfg.contains("f")) opt.f = cfg["f"].get<double>();
  if (cfg.contains("cr")) opt.cr = cfg["cr"].get<double>();
  if (cfg.contains("max_evals")) opt.max_evals = cfg["max_evals"].get<long>();
  if (cfg.contains("limit")) opt.limit = cfg["limit"].get<double>();
  if (cfg.contains("seed")) opt.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("threads")) opt.threads = cfg["threads"].get<int>();
  if (cfg.contains("cr_list")) opt.cr_list = cfg["cr_list"].get<std::vector<double>>();
  if (cfg.contains("data_dir")) opt.data_dir = cfg["data_dir"].get<std::string>();
  if (cfg.contains("memetic")) {
    const json& m = cfg["memetic"];
    if (m.contains("interval")) {
      opt.memetic.interval.low = m["interval"].at(0).get<double>();
      opt.memetic.interval.high = m["interval"].at(1).get<double>();
    }
    if (m.contains("golden_ratio")) opt.memetic.golden_ratio = m["golden_ratio"].get<double>();
    if (m.contains("width_tolerance")) opt.memetic.width_tolerance = m["width_tolerance"].get<double>();
    if (m.contains("max_gss_iterations")) opt.memetic.max_gss_iterations = m["max_gss_iterations"].get<int>();
  }
}

msde::ExperimentSpec to_spec(const CliOptions& opt,
                             const msde::ProblemCatalog& catalog) {
  msde::ExperimentSpec spec;
  if (opt.problems.empty()) {
    for (const auto& p : catalog.problems()) spec.problems.push_back(p.name);
  } else {
    spec.problems = opt.problems;
  }
  if (opt.algo == "both")
    spec.algorithms = {msde::Strategy::De, msde::Strategy::Msde};
  else
    spec.algorithms = {msde::parse_strategy(opt.algo)};
  spec.runs = opt.runs;
  spec.base_config.np = opt.np;
  spec.base_config.scale_factor = opt.f;
  spec.base_config.crossover_rate = opt.cr;
  spec.base_config.max_evals = opt.max_evals;
  spec.base_config.limit = opt.limit;
  spec.master_seed = opt.seed;
  spec.threads = opt.threads;
  spec.memetic = opt.memetic;
  return spec;
}

msde::ProblemCatalog open_catalog(const CliOptions& opt) {
  return opt.data_dir.empty() ? msde::ProblemCatalog()
                              : msde::ProblemCatalog(opt.data_dir);
}

void deliver(const std::string& csv, const std::string& out) {
  if (out.empty())
    std::cout << csv;
  else
    msde::emit_csv(csv, out);
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--problems", opt.problems,
                  "Comma-separated problem names (default: whole catalog)")
      ->delimiter(',');
  cmd->add_option("--algo", opt.algo, "de | msde | both")
      ->check(CLI::IsMember({"de", "msde", "both"}));
  cmd->add_option("--runs", opt.runs, "Runs per (problem, algorithm) cell")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--np", opt.np, "Population size");
  cmd->add_option("--f", opt.f, "Mutation scale factor F");
  cmd->add_option("--cr", opt.cr, "Crossover probability CR");
  cmd->add_option("--max-evals", opt.max_evals, "Evaluation budget per run");
  cmd->add_option("--limit", opt.limit,
                  "ABC-style Limit parameter (recorded, unused)");
  cmd->add_option("--seed", opt.seed, "Master seed");
  cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  cmd->add_option("--out", opt.out, "Output CSV path (default: stdout)");
  cmd->add_option("--data", opt.data_dir, "Data-table directory");
  cmd->add_option("--config", opt.config_path,
                  "JSON config file mirroring the experiment spec");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential evolution with memetic (golden-section) search"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* run = app.add_subcommand("run", "Multi-run experiment with aggregate statistics");
  add_common_flags(run, opt);

  CLI::App* sweep = app.add_subcommand("sweep-cr", "AFE as a function of CR");
  add_common_flags(sweep, opt);
  sweep->add_option("--cr-list", opt.cr_list, "CR values to sweep")
      ->delimiter(',');

  std::vector<std::string> compare_inputs;
  CLI::App* compare =
      app.add_subcommand("compare", "Sign table from two run outputs");
  compare->add_option("inputs", compare_inputs, "Two run CSV files")
      ->expected(2)
      ->check(CLI::ExistingFile);
  compare->add_option("--out", opt.out, "Output CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(opt);
    // Re-apply explicit flags on top of the config file.
    app.clear();
    (void)app.parse(argc, argv);

    if (run->parsed()) {
      const auto catalog = open_catalog(opt);
      const auto table = run_experiment(to_spec(opt, catalog), catalog);
      deliver(msde::to_csv(table), opt.out);
    } else if (sweep->parsed()) {
      if (opt.cr_list.empty())
        throw std::invalid_argument("sweep-cr: --cr-list is required");
      const auto catalog = open_catalog(opt);
      const auto rows = cr_sweep(to_spec(opt, catalog), opt.cr_list, catalog);
      deliver(msde::to_csv(rows), opt.out);
    } else if (compare->parsed()) {
      msde::ExperimentTable merged;
      for (const auto& path : compare_inputs) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        auto part = msde::parse_experiment_csv(text.str());
        merged.insert(merged.end(), part.begin(), part.end());
      }
      deliver(msde::to_csv(msde::compare_sign(merged)), opt.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
