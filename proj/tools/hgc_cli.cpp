#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgc/bench.hpp"
#include "hgc/errors.hpp"

namespace fs = std::filesystem;
using namespace hgc;
using namespace hgc::bench;

namespace {

struct Flags {
  std::vector<std::string> datasets;
  std::vector<std::string> methods;
  std::size_t radius = 2;
  std::size_t iterations = 2;
  std::string truncation = "hops";
  bool rcp_from_layer1 = false;
  std::string beta = "auto";
  std::string runs = "auto";
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;
  std::string k_list = "10:100:10";
  std::size_t top_seeds = 10;
  std::string out;
  int threads = 0;
  std::string config;
  std::string ground_truth;
  bool timestamps = false;
  bool breakdown = false;
};

void add_dataset(CLI::App* cmd, Flags& f) {
  cmd->add_option("--dataset", f.datasets, "Edge-list file (repeatable)");
}

void add_hgc(CLI::App* cmd, Flags& f) {
  cmd->add_option("--radius", f.radius, "Gravity radius R");
  cmd->add_option("--iterations", f.iterations, "Propagation layers T");
  cmd->add_option("--truncation", f.truncation, "hops | effective-units");
  cmd->add_flag("--rcp-from-layer1", f.rcp_from_layer1, "Drop the layer-0 term of RCP");
}

void add_sir(CLI::App* cmd, Flags& f) {
  cmd->add_option("--beta", f.beta, "Infection probability, or auto for the epidemic threshold");
  cmd->add_option("--runs", f.runs, "Simulations per node, or auto");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--max-steps", f.max_steps, "Step cap per simulation (0: N)");
}

HgcConfig hgc_config(const Flags& f) {
  HgcConfig cfg;
  cfg.radius = f.radius;
  cfg.iterations = f.iterations;
  try {
    cfg.truncation = parse_truncation(f.truncation);
    cfg.include_initial_layer = !f.rcp_from_layer1;
    cfg.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

SirSettings sir_settings(const Flags& f) {
  SirSettings s;
  try {
    if (f.beta != "auto") s.beta = std::stod(f.beta);
    if (f.runs != "auto") s.runs = std::stoull(f.runs);
  } catch (const std::exception&) {
    throw UsageError("--beta and --runs take a number or 'auto'");
  }
  s.seed = f.seed;
  s.max_steps = f.max_steps;
  return s;
}

std::vector<Dataset> datasets(const Flags& f) {
  if (f.datasets.empty()) throw UsageError("--dataset is required");
  std::vector<Dataset> out;
  for (const auto& p : f.datasets) out.push_back(dataset_from_path(p));
  return out;
}

fs::path output_dir(const Flags& f) {
  if (!f.out.empty()) return f.out;
  if (const char* env = std::getenv("HGC_OUTPUT_DIR"); env && *env) return env;
  return "hgc-out";
}

// Config values fill only the options not given on the command line.
void apply_config(CLI::App& app, CLI::App* active, const std::string& path) {
  for (const auto& [key, value] : read_config_file(path)) {
    const std::string name = "--" + key;
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) {
      if (sub->get_option_no_throw(name)) known = true;
    }
    if (!known) throw UsageError("unknown config key '" + key + "'");
    auto* opt = active->get_option_no_throw(name);
    if (opt == nullptr || opt->count() > 0 || key == "config") continue;
    opt->add_result(value);
  }
  for (auto* opt : active->get_options()) {
    if (opt->count() > 0) opt->run_callback();
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Influential spreader ranking and benchmark harness"};
  app.require_subcommand(1);
  Flags f;

  auto* stats = app.add_subcommand("stats", "Topological summary of each dataset");
  add_dataset(stats, f);

  auto* rank = app.add_subcommand("rank", "Rank the nodes of one dataset");
  add_dataset(rank, f);
  rank->add_option("--method", f.methods, "DC, BC, CC, KS, CR, LGM, RDP or HGC");
  add_hgc(rank, f);
  rank->add_flag("--breakdown", f.breakdown, "For HGC: print GM, RCP and gamma per node");

  auto* truth = app.add_subcommand("ground-truth", "SIR spreading influence of every node");
  add_dataset(truth, f);
  add_sir(truth, f);
  truth->add_option("--out", f.out, "Output directory");

  auto* evaluate = app.add_subcommand("evaluate", "Full benchmark over datasets and methods");
  add_dataset(evaluate, f);
  evaluate->add_option("--method", f.methods, "Methods to evaluate (default: all)");
  add_hgc(evaluate, f);
  add_sir(evaluate, f);
  evaluate->add_option("--k-list", f.k_list, "Top-k sizes as a:b:step");
  evaluate->add_option("--top-seeds", f.top_seeds, "Seeds for the F(t) trajectories");
  evaluate->add_option("--out", f.out, "Output directory");
  evaluate->add_option("--ground-truth", f.ground_truth, "Use this node_label,influence file");
  evaluate->add_flag("--timestamps", f.timestamps, "Record wall-clock times in manifests");

  for (auto* sub : {stats, rank, truth, evaluate}) {
    sub->add_option("--threads", f.threads, "Worker threads (0: all cores)");
    sub->add_option("--config", f.config, "key = value file; flags take precedence");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  CLI::App* active = app.get_subcommands().front();
  if (!f.config.empty()) apply_config(app, active, f.config);
  if (f.threads > 0) omp_set_num_threads(f.threads);

  if (active == stats) {
    bool first = true;
    for (const auto& d : datasets(f)) {
      std::ostringstream row;
      cmd_stats(d, row);
      auto text = row.str();
      if (!first) text.erase(0, text.find('\n') + 1);
      std::cout << text;
      first = false;
    }
  } else if (active == rank) {
    auto ds = datasets(f);
    if (ds.size() != 1) throw UsageError("rank takes exactly one --dataset");
    if (f.methods.size() != 1) throw UsageError("rank takes exactly one --method");
    const auto method = parse_method(f.methods.front());
    const auto cfg = hgc_config(f);
    if (f.breakdown) {
      if (method != Method::kHGC) throw UsageError("--breakdown applies to HGC only");
      auto data = load_dataset(ds.front());
      write_hgc_csv(data.graph, hgc_breakdown(data.graph, cfg), std::cout);
    } else {
      cmd_rank(ds.front(), method, cfg, std::cout);
    }
  } else if (active == truth) {
    const auto settings = sir_settings(f);
    for (const auto& d : datasets(f)) {
      auto gt = cmd_ground_truth(d, settings, output_dir(f));
      std::cout << gt.file.string() << (gt.from_cache ? " (cached)" : "") << '\n';
    }
  } else {
    BenchmarkSpec spec;
    spec.datasets = datasets(f);
    if (!f.methods.empty()) {
      spec.methods.clear();
      for (const auto& m : f.methods) spec.methods.push_back(parse_method(m));
    }
    spec.hgc = hgc_config(f);
    spec.sir = sir_settings(f);
    spec.k_list = parse_k_list(f.k_list);
    spec.top_seeds = f.top_seeds;
    spec.output_dir = output_dir(f);
    if (!f.ground_truth.empty()) spec.injected_ground_truth = f.ground_truth;
    spec.record_timestamps = f.timestamps;
    auto result = cmd_evaluate(spec, std::cerr);
    std::cout << (spec.output_dir / "kendall.csv").string() << '\n';
    for (const auto& dir : result.dataset_dirs) std::cout << dir.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
