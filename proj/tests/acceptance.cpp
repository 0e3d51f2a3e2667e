// Acceptance report: one PASS/FAIL line per criterion; exit status 1 if any fails.
// Datasets are read from $HGC_DATA_DIR (default: <repo>/data) as <name>.txt.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hgc/bench.hpp"
#include "hgc/centrality.hpp"
#include "hgc/csv.hpp"
#include "hgc/cycles.hpp"
#include "hgc/effective_distance.hpp"
#include "hgc/metrics.hpp"
#include "hgc/ranker.hpp"
#include "hgc/sir.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace hgc;
using namespace hgc::bench;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::cout << "C" << id << ' ' << (pass ? "PASS" : "FAIL") << "  " << title << ": " << detail
            << std::endl;
  if (!pass) ++failures;
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

fs::path data_dir() {
  if (const char* env = std::getenv("HGC_DATA_DIR"); env && *env) return env;
  return HGC_DEFAULT_DATA_DIR;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::optional<LoadedDataset> find_dataset(const std::string& name, std::string& why) {
  const auto dir = data_dir();
  std::error_code ec;
  if (fs::is_directory(dir, ec)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (!e.is_regular_file() || lower(e.path().stem().string()) != name) continue;
      try {
        return load_dataset({name, e.path()});
      } catch (const DataError& err) {
        why = err.what();
        return std::nullopt;
      }
    }
  }
  why = "dataset not found: " + (dir / (name + ".txt")).string();
  return std::nullopt;
}

void worked_example() {
  auto g = fixtures::example_network();
  auto cr = cycle_ratio(g);
  auto rcp = rcp_scores(g);
  auto set = enumerate_shortest_cycles(g).to_vectors();
  const std::vector<std::vector<NodeId>> want{{0, 1, 2}, {2, 6, 7}, {5, 6, 7}};
  const bool ok = cr[6] == 3.5 && rcp[4] == 3.75 && set == want;
  std::string cycles;
  for (const auto& c : set) {
    cycles += "{";
    for (std::size_t i = 0; i < c.size(); ++i) cycles += (i ? "," : "") + std::to_string(c[i]);
    cycles += "}";
  }
  report(1, "worked example", ok,
         "CR(6)=" + csv::format_real(cr[6]) + " RCP(4)=" + csv::format_real(rcp[4]) + " cycles=" + cycles);
}

struct TableRow {
  std::string name;
  std::size_t n, m;
  double k, d, c;
};

void dataset_fidelity() {
  const std::vector<TableRow> rows{{"jazz", 198, 2742, 27.6970, 2.2350, 0.6334},
                                   {"usair", 332, 2126, 12.8072, 2.7381, 0.7494},
                                   {"ns", 379, 914, 4.8232, 6.0419, 0.7981},
                                   {"email", 1133, 5451, 9.6222, 3.6060, 0.2540}};
  bool ok = true;
  std::string detail;
  for (const auto& row : rows) {
    std::string why;
    auto data = find_dataset(row.name, why);
    if (!data) {
      ok = false;
      detail += row.name + " [" + why + "] ";
      continue;
    }
    auto s = graph_stats(data->graph);
    const bool hit = s.nodes == row.n && s.edges == row.m && std::abs(s.avg_degree - row.k) <= 1e-3 &&
                     std::abs(s.avg_distance - row.d) <= 1e-3 && std::abs(s.clustering - row.c) <= 1e-3;
    ok = ok && hit;
    detail += row.name + " [N=" + std::to_string(s.nodes) + " M=" + std::to_string(s.edges) +
              " <k>=" + fmt(s.avg_degree) + " <d>=" + fmt(s.avg_distance) + " C=" + fmt(s.clustering) +
              (hit ? "" : " expected N=" + std::to_string(row.n) + " M=" + std::to_string(row.m) +
                              " <k>=" + fmt(row.k) + " <d>=" + fmt(row.d) + " C=" + fmt(row.c)) +
              "] ";
  }
  report(2, "dataset statistics", ok, detail);
}

void monotonicity_reproduction() {
  const std::map<Method, double> want{{Method::kDC, 0.9659},  {Method::kBC, 0.9885},
                                      {Method::kCC, 0.9878},  {Method::kKS, 0.7944},
                                      {Method::kCR, 0.9985},  {Method::kLGM, 0.9993},
                                      {Method::kRDP, 0.9992}, {Method::kHGC, 0.9994}};
  std::string why;
  auto jazz = find_dataset("jazz", why);
  if (!jazz) return report(3, "Jazz monotonicity", false, why);
  bool ok = true;
  std::string detail;
  for (Method m : kAllMethods) {
    const double value = monotonicity(compute_method(jazz->graph, m, {}));
    const bool hit = std::abs(value - want.at(m)) <= 0.005;
    ok = ok && hit;
    detail += std::string(method_name(m)) + "=" + fmt(value) + (hit ? "" : "(want " + fmt(want.at(m)) + ")") + " ";
  }
  report(3, "Jazz monotonicity", ok, detail);
}

std::map<Method, double> kendall_row(const LoadedDataset& data) {
  SirSettings settings;
  settings.runs = 1000;
  auto cfg = resolve_sir_config(data.graph, settings);
  auto truth = spreading_influence(data.graph, cfg);
  std::map<Method, double> tau;
  for (Method m : kAllMethods) tau[m] = kendall_tau(compute_method(data.graph, m, {}).scores(), truth.influence);
  return tau;
}

void kendall_reproduction() {
  std::string why_jazz, why_ns;
  auto jazz = find_dataset("jazz", why_jazz);
  auto ns = find_dataset("ns", why_ns);
  if (!jazz || !ns) {
    return report(4, "Kendall tau at beta_c", false,
                  (jazz ? "" : why_jazz + " ") + (ns ? "" : why_ns));
  }
  auto tj = kendall_row(*jazz);
  auto tn = kendall_row(*ns);
  bool ok = std::abs(tj[Method::kHGC] - 0.865) <= 0.03 && std::abs(tj[Method::kDC] - 0.8145) <= 0.03 &&
            std::abs(tn[Method::kHGC] - 0.8107) <= 0.04;
  for (Method m : {Method::kDC, Method::kBC, Method::kCC, Method::kKS, Method::kCR}) {
    ok = ok && tj[Method::kHGC] > tj[m] && tn[Method::kHGC] > tn[m];
  }
  std::string detail = "jazz:";
  for (Method m : kAllMethods) detail += " " + std::string(method_name(m)) + "=" + fmt(tj[m]);
  detail += " | ns:";
  for (Method m : kAllMethods) detail += " " + std::string(method_name(m)) + "=" + fmt(tn[m]);
  report(4, "Kendall tau at beta_c", ok, detail);
}

void oracle_suites() {
  std::mt19937_64 rng(2024);
  std::size_t bc_bad = 0, cyc_bad = 0, ed_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_graph(2 + trial % 7, 0.2 + 0.1 * (trial % 5), rng);
    auto bc = betweenness_centrality(g);
    auto want = oracle::betweenness(g);
    for (NodeId i = 0; i < g.node_count(); ++i)
      if (std::abs(bc[i] - want[i]) > 1e-12) ++bc_bad;
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_graph(3 + trial % 6, 0.2 + 0.1 * (trial % 5), rng);
    auto got = enumerate_shortest_cycles(g).to_vectors();
    if (std::set<std::vector<NodeId>>(got.begin(), got.end()) != oracle::shortest_cycles(g)) ++cyc_bad;
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_graph(2 + trial % 7, 0.2 + 0.1 * (trial % 5), rng);
    EffectiveDistanceSolver solver(g);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      auto want = oracle::effective_distances(g, s);
      auto got = solver.within_hops(s, kUnbounded);
      for (NodeId t = 0; t < g.node_count(); ++t) {
        const bool same = std::isinf(want[t]) ? !got.contains(t) : std::abs(got.distance[t] - want[t]) <= 1e-9;
        if (!same) ++ed_bad;
      }
    }
  }
  std::size_t sir_checks = 0, sir_bad = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& g : fixtures::connected_graphs_up_to_isomorphism(n)) {
      for (double beta : {0.25, 0.5, 0.75}) {
        SirConfig cfg;
        cfg.beta = beta;
        cfg.runs = 2000;
        auto s = spreading_influence(g, cfg);
        for (NodeId i = 0; i < n; ++i) {
          ++sir_checks;
          if (std::abs(s.influence[i] - oracle::expected_outbreak(g, i, beta)) > 3.0 * s.standard_error[i]) ++sir_bad;
        }
      }
    }
  }
  const bool ok = bc_bad == 0 && cyc_bad == 0 && ed_bad == 0 && sir_bad == 0;
  report(5, "oracle equivalence", ok,
         "betweenness mismatches=" + std::to_string(bc_bad) + "/200 graphs, cycle-set mismatches=" +
             std::to_string(cyc_bad) + "/200, ED mismatches=" + std::to_string(ed_bad) +
             ", SIR outside 3 SE=" + std::to_string(sir_bad) + "/" + std::to_string(sir_checks));
}

void metric_properties() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 60;
    std::vector<double> x(n), tied(n);
    for (auto& v : x) v = u(rng);
    std::uniform_int_distribution<int> level(0, 1 + trial % 6);
    for (auto& v : tied) v = level(rng);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = -x[i];
    const double t_self = kendall_tau(x, x);
    const double t_rev = kendall_tau(x, y);
    const double t_mix = kendall_tau(x, tied);
    const double m_tied = monotonicity(tied);
    std::vector<double> flat(n, 0.5);
    std::vector<NodeId> rank = rank_descending(x);
    if (t_self != 1.0 || t_rev != -1.0 || t_mix < -1.0 || t_mix > 1.0) ++bad;
    if (monotonicity(x) != 1.0 || monotonicity(flat) != 0.0 || m_tied < 0.0 || m_tied > 1.0) ++bad;
    if (jaccard_top_k(rank, rank, 1 + trial % n) != 1.0) ++bad;
  }
  report(6, "metric properties", bad == 0, std::to_string(bad) + " violations over 1000 random vectors");
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HGC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), root).string()] = s.str();
  }
  return files;
}

void determinism() {
  const auto tmp = fs::temp_directory_path() / ("hgc-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  const auto data = tmp / "example.txt";
  {
    std::ofstream out(data);
    write_edge_list(fixtures::example_network(), out);
  }
  const std::string args = "evaluate --dataset " + data.string() + " --k-list 1:8:1 --seed 7 --out ";
  const int a = run_cli(args + (tmp / "a").string());
  const int b = run_cli(args + (tmp / "b").string() + " --threads 1");
  bool ok = a == 0 && b == 0;
  std::size_t files = 0;
  if (ok) {
    auto ta = tree(tmp / "a");
    files = ta.size();
    ok = ta == tree(tmp / "b");
  }
  fs::remove_all(tmp);
  report(7, "evaluate determinism", ok,
         "exit codes " + std::to_string(a) + "/" + std::to_string(b) + ", " + std::to_string(files) +
             " files compared");
}

}  // namespace

int main() {
  std::cout << "data directory: " << data_dir().string() << std::endl;
  worked_example();
  dataset_fidelity();
  monotonicity_reproduction();
  kendall_reproduction();
  oracle_suites();
  metric_properties();
  determinism();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
