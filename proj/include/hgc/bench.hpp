#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/ranker.hpp"
#include "hgc/score_map.hpp"
#include "hgc/sir.hpp"

namespace hgc::bench {

/// Bad invocation (unknown method, malformed flag value). Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or invalid input data. Exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { kDC, kBC, kCC, kKS, kCR, kLGM, kRDP, kHGC };

inline constexpr Method kAllMethods[] = {Method::kDC, Method::kBC,  Method::kCC,  Method::kKS,
                                         Method::kCR, Method::kLGM, Method::kRDP, Method::kHGC};

std::string_view method_name(Method m);
/// Case-insensitive; throws UsageError listing the valid identifiers.
Method parse_method(std::string_view name);

/// Parses "a:b:step" (or a single value) into a strictly increasing list.
std::vector<std::size_t> parse_k_list(std::string_view text);

/// Runs `method` with the harness parameters (LGM radius and RDP iterations
/// follow the HGC config).
ScoreMap compute_method(const Graph& g, Method method, const HgcConfig& cfg);

struct Dataset {
  std::string name;
  std::filesystem::path path;
};

/// Name derived from the file stem.
Dataset dataset_from_path(const std::filesystem::path& path);

struct LoadedDataset {
  Dataset source;
  Graph graph;
  EdgeListWarnings warnings;
  std::string checksum;  // sha256 of the file bytes, hex
};

/// Throws DataError with the file name on any read or parse failure.
LoadedDataset load_dataset(const Dataset& d);

std::string sha256_hex(std::string_view bytes);
std::string file_sha256(const std::filesystem::path& path);

/// Settings shared by ground-truth generation and evaluation.
struct SirSettings {
  /// nullopt: use the graph's epidemic threshold.
  std::optional<double> beta;
  /// nullopt: 1000 runs up to 2500 nodes, 100 above.
  std::optional<std::size_t> runs;
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;
};

/// Concrete SIR parameters for one graph. Throws DataError when the
/// threshold is degenerate and no explicit beta was given.
SirConfig resolve_sir_config(const Graph& g, const SirSettings& settings);

std::size_t default_runs(std::size_t node_count);

struct GroundTruth {
  SirSummary summary;
  std::filesystem::path file;
  bool from_cache = false;
};

/// Cache key over (dataset checksum, beta, runs, seed, step cap).
std::string ground_truth_key(const std::string& checksum, const SirConfig& cfg);

/// Loads `<dir>/ground_truth-<key>.csv` if present, else simulates and writes it.
GroundTruth ground_truth(const LoadedDataset& data, const SirConfig& cfg,
                         const std::filesystem::path& dir);

struct BenchmarkSpec {
  std::vector<Dataset> datasets;
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  HgcConfig hgc;
  SirSettings sir;
  std::vector<std::size_t> k_list = parse_k_list("10:100:10");
  /// Seeds for the F(t) trajectories.
  std::size_t top_seeds = 10;
  std::filesystem::path output_dir = "hgc-out";
  /// Replaces SIR ground truth for a single dataset (node_label,influence).
  std::optional<std::filesystem::path> injected_ground_truth;
  /// Record wall-clock timestamps in manifests (breaks byte-identical reruns).
  bool record_timestamps = false;

  void validate() const;
};

struct RunManifest {
  std::string spec_hash;
  std::map<std::string, std::string> dataset_checksums;
  std::uint64_t master_seed = 0;
  std::string artifact_version;
  std::map<std::string, std::string> timestamps;
};

/// Hash of everything that determines evaluation output (not the output dir).
std::string spec_hash(const BenchmarkSpec& spec, const std::vector<LoadedDataset>& data);

inline constexpr std::string_view kArtifactVersion = "1.0.0";

/// `stats` subcommand: writes the CSV row and returns it.
GraphStats cmd_stats(const Dataset& d, std::ostream& out);

/// `rank` subcommand: `node_label,score,rank` in rank order.
ScoreMap cmd_rank(const Dataset& d, Method method, const HgcConfig& cfg, std::ostream& out);

/// `ground-truth` subcommand; the influence file lands under `<out>/<dataset>/`.
GroundTruth cmd_ground_truth(const Dataset& d, const SirSettings& settings,
                             const std::filesystem::path& out_dir);

struct EvaluateResult {
  RunManifest manifest;
  /// network -> method -> value
  std::map<std::string, std::map<std::string, double>> kendall;
  std::map<std::string, std::map<std::string, double>> monotonicity;
  std::vector<std::filesystem::path> dataset_dirs;
};

/// `evaluate` subcommand. Writes, under the output directory:
///   kendall.csv, monotonicity.csv, manifest.json and one
///   `<dataset>-<spec hash>/` directory per network holding rankings/,
///   reports/, the ground-truth cache, jaccard.csv and trajectories.csv.
/// All datasets are loaded first; failures are reported together.
EvaluateResult cmd_evaluate(const BenchmarkSpec& spec, std::ostream& log);

/// Reads the `key = value` config format. Keys are long flag names without
/// dashes; repeated keys accumulate. '#' starts a comment.
std::multimap<std::string, std::string> read_config_file(const std::filesystem::path& path);

}  // namespace hgc::bench
