#include "hgc/bench.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hgc/centrality.hpp"
#include "hgc/csv.hpp"
#include "hgc/cycles.hpp"
#include "hgc/metrics.hpp"
#include "json.hpp"

namespace hgc::bench {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto t = trim(text);
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || end != t.data() + t.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string utc_now() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Json manifest_json(const RunManifest& m) {
  Json j;
  j["spec_hash"] = m.spec_hash;
  j["dataset_checksums"] = m.dataset_checksums;
  j["master_seed"] = m.master_seed;
  j["artifact_version"] = m.artifact_version;
  if (!m.timestamps.empty()) j["timestamps"] = m.timestamps;
  return j;
}

Json sir_json(const SirConfig& cfg) {
  Json j;
  j["beta"] = cfg.beta;
  j["runs"] = cfg.runs;
  j["seed"] = cfg.master_seed;
  j["max_steps"] = cfg.max_steps;
  return j;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kDC: return "DC";
    case Method::kBC: return "BC";
    case Method::kCC: return "CC";
    case Method::kKS: return "KS";
    case Method::kCR: return "CR";
    case Method::kLGM: return "LGM";
    case Method::kRDP: return "RDP";
    case Method::kHGC: return "HGC";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  const auto key = upper(name);
  for (Method m : kAllMethods) {
    if (key == method_name(m)) return m;
  }
  throw UsageError("unknown method '" + std::string(name) +
                   "' (valid: DC, BC, CC, KS, CR, LGM, RDP, HGC)");
}

std::vector<std::size_t> parse_k_list(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = text.find(':', start);
    parts.emplace_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::vector<std::size_t> ks;
  if (parts.size() == 1) {
    ks.push_back(parse_count(parts[0], "k-list"));
  } else if (parts.size() == 3) {
    const auto first = parse_count(parts[0], "k-list start");
    const auto last = parse_count(parts[1], "k-list end");
    const auto step = parse_count(parts[2], "k-list step");
    if (step == 0 || last < first) throw UsageError("k-list must be a:b:step with a <= b, step > 0");
    for (auto k = first; k <= last; k += step) ks.push_back(k);
  } else {
    throw UsageError("k-list must be a:b:step");
  }
  if (ks.front() == 0) throw UsageError("k-list values must be >= 1");
  return ks;
}

ScoreMap compute_method(const Graph& g, Method method, const HgcConfig& cfg) {
  switch (method) {
    case Method::kDC: return degree_centrality(g);
    case Method::kBC: return betweenness_centrality(g);
    case Method::kCC: return closeness_centrality(g);
    case Method::kKS: return k_shell(g);
    case Method::kCR: return cycle_ratio(g);
    case Method::kLGM: return local_gravity_model(g, cfg.radius);
    case Method::kRDP: return restricted_degree_propagation(g, cfg.iterations);
    case Method::kHGC: return hgc_scores(g, cfg);
  }
  throw UsageError("unknown method");
}

Dataset dataset_from_path(const fs::path& path) { return {path.stem().string(), path}; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string file_sha256(const fs::path& path) { return sha256_hex(read_bytes(path)); }

LoadedDataset load_dataset(const Dataset& d) {
  try {
    auto bytes = read_bytes(d.path);
    std::istringstream in(bytes);
    auto parsed = parse_edge_list(in);
    return {d, std::move(parsed.graph), parsed.warnings, sha256_hex(bytes)};
  } catch (const ParseError& e) {
    throw DataError(d.path.string() + ": " + e.what());
  } catch (const EmptyGraphError& e) {
    throw DataError(d.path.string() + ": " + e.what());
  }
}

std::size_t default_runs(std::size_t node_count) { return node_count <= 2500 ? 1000 : 100; }

SirConfig resolve_sir_config(const Graph& g, const SirSettings& settings) {
  SirConfig cfg;
  if (settings.beta) {
    cfg.beta = *settings.beta;
  } else {
    try {
      cfg.beta = epidemic_threshold(g);
    } catch (const DegenerateThresholdError& e) {
      throw DataError(std::string(e.what()) + "; pass an explicit --beta");
    }
    cfg.beta = std::min(cfg.beta, 1.0);
  }
  cfg.runs = settings.runs.value_or(default_runs(g.node_count()));
  cfg.master_seed = settings.seed;
  cfg.max_steps = settings.max_steps;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

std::string ground_truth_key(const std::string& checksum, const SirConfig& cfg) {
  std::ostringstream key;
  key << checksum << '|' << csv::format_real(cfg.beta) << '|' << cfg.runs << '|'
      << cfg.master_seed << '|' << cfg.max_steps;
  return sha256_hex(key.str()).substr(0, 16);
}

GroundTruth ground_truth(const LoadedDataset& data, const SirConfig& cfg, const fs::path& dir) {
  fs::create_directories(dir);
  GroundTruth result;
  result.file = dir / ("ground_truth-" + ground_truth_key(data.checksum, cfg) + ".csv");
  if (fs::exists(result.file)) {
    std::ifstream in(result.file);
    try {
      result.summary = read_influence_csv(data.graph, in);
    } catch (const std::exception& e) {
      throw DataError(result.file.string() + ": " + e.what());
    }
    result.summary.beta_used = cfg.beta;
    result.summary.runs = cfg.runs;
    result.summary.master_seed = cfg.master_seed;
    result.from_cache = true;
    return result;
  }
  result.summary = spreading_influence(data.graph, cfg);
  std::ostringstream text;
  write_influence_csv(data.graph, result.summary, text);
  // write then rename so an interrupted run never leaves a partial cache entry
  auto tmp = result.file;
  tmp += ".tmp";
  write_text(tmp, text.str());
  fs::rename(tmp, result.file);
  return result;
}

void BenchmarkSpec::validate() const {
  if (datasets.empty()) throw UsageError("at least one --dataset is required");
  if (methods.empty()) throw UsageError("at least one --method is required");
  if (k_list.empty()) throw UsageError("k-list must not be empty");
  for (std::size_t i = 1; i < k_list.size(); ++i) {
    if (k_list[i] <= k_list[i - 1]) throw UsageError("k-list must be strictly increasing");
  }
  if (top_seeds < 1) throw UsageError("top seed count must be >= 1");
  if (injected_ground_truth && datasets.size() != 1) {
    throw UsageError("--ground-truth applies to exactly one dataset");
  }
  try {
    hgc.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string spec_hash(const BenchmarkSpec& spec, const std::vector<LoadedDataset>& data) {
  Json j;
  Json datasets = Json::array();
  for (const auto& d : data) datasets.push_back({{"name", d.source.name}, {"sha256", d.checksum}});
  j["datasets"] = datasets;
  Json methods = Json::array();
  for (Method m : spec.methods) methods.push_back(std::string(method_name(m)));
  j["methods"] = methods;
  j["radius"] = spec.hgc.radius;
  j["iterations"] = spec.hgc.iterations;
  j["truncation"] = std::string(to_string(spec.hgc.truncation));
  j["rcp_initial_layer"] = spec.hgc.include_initial_layer;
  j["beta"] = spec.sir.beta ? Json(*spec.sir.beta) : Json("auto");
  j["runs"] = spec.sir.runs ? Json(*spec.sir.runs) : Json("auto");
  j["seed"] = spec.sir.seed;
  j["max_steps"] = spec.sir.max_steps;
  j["k_list"] = spec.k_list;
  j["top_seeds"] = spec.top_seeds;
  if (spec.injected_ground_truth) j["ground_truth"] = file_sha256(*spec.injected_ground_truth);
  return sha256_hex(j.dump());
}

GraphStats cmd_stats(const Dataset& d, std::ostream& out) {
  auto data = load_dataset(d);
  auto stats = graph_stats(data.graph);
  write_stats_csv(d.name, stats, out);
  return stats;
}

ScoreMap cmd_rank(const Dataset& d, Method method, const HgcConfig& cfg, std::ostream& out) {
  auto data = load_dataset(d);
  auto scores = compute_method(data.graph, method, cfg);
  write_scores_csv(data.graph, scores, out);
  return scores;
}

GroundTruth cmd_ground_truth(const Dataset& d, const SirSettings& settings,
                             const fs::path& out_dir) {
  auto data = load_dataset(d);
  auto cfg = resolve_sir_config(data.graph, settings);
  return ground_truth(data, cfg, out_dir / d.name);
}

EvaluateResult cmd_evaluate(const BenchmarkSpec& spec, std::ostream& log) {
  spec.validate();

  std::vector<LoadedDataset> data;
  std::vector<std::string> failures;
  for (const auto& d : spec.datasets) {
    try {
      data.push_back(load_dataset(d));
    } catch (const DataError& e) {
      failures.emplace_back(e.what());
    }
  }
  if (spec.injected_ground_truth && !fs::exists(*spec.injected_ground_truth)) {
    failures.push_back("ground truth file not found: " + spec.injected_ground_truth->string());
  }
  if (!failures.empty()) {
    std::string message = std::to_string(failures.size()) + " input(s) failed to load:";
    for (const auto& f : failures) message += "\n  " + f;
    throw DataError(message);
  }
  for (const auto& d : data) {
    if (spec.k_list.back() > d.graph.node_count()) {
      throw UsageError("k-list exceeds the node count of " + d.source.name);
    }
  }

  EvaluateResult result;
  const auto hash = spec_hash(spec, data);
  result.manifest.spec_hash = hash;
  result.manifest.master_seed = spec.sir.seed;
  result.manifest.artifact_version = std::string(kArtifactVersion);
  if (spec.record_timestamps) result.manifest.timestamps["started"] = utc_now();
  fs::create_directories(spec.output_dir);

  for (const auto& d : data) {
    const auto& g = d.graph;
    const auto& name = d.source.name;
    result.manifest.dataset_checksums[name] = d.checksum;
    const auto dir = spec.output_dir / (name + "-" + hash.substr(0, 12));
    fs::create_directories(dir / "rankings");
    fs::create_directories(dir / "reports");
    result.dataset_dirs.push_back(dir);
    log << "[" << name << "] N=" << g.node_count() << " M=" << g.edge_count() << '\n';

    {
      std::ostringstream stats;
      write_stats_csv(name, graph_stats(g), stats);
      write_text(dir / "stats.csv", stats.str());
    }

    const auto sir = resolve_sir_config(g, spec.sir);
    SirSummary truth;
    std::string truth_source;
    if (spec.injected_ground_truth) {
      std::ifstream in(*spec.injected_ground_truth);
      try {
        truth = read_influence_csv(g, in);
      } catch (const std::exception& e) {
        throw DataError(spec.injected_ground_truth->string() + ": " + e.what());
      }
      truth_source = "injected:" + file_sha256(*spec.injected_ground_truth);
    } else {
      log << "[" << name << "] ground truth beta=" << sir.beta << " runs=" << sir.runs << '\n';
      auto gt = ground_truth(d, sir, dir);
      truth = std::move(gt.summary);
      truth_source = gt.file.filename().string();
    }

    std::vector<std::map<std::size_t, double>> jaccard;
    std::vector<std::vector<double>> trajectories;
    const auto top = std::min(spec.top_seeds, g.node_count());
    for (Method m : spec.methods) {
      const auto label = std::string(method_name(m));
      log << "[" << name << "] " << label << '\n';
      ScoreMap scores;
      if (m == Method::kHGC) {
        auto parts = hgc_breakdown(g, spec.hgc);
        std::ostringstream text;
        write_hgc_csv(g, parts, text);
        write_text(dir / "hgc_breakdown.csv", text.str());
        scores = parts.hgc;
      } else {
        scores = compute_method(g, m, spec.hgc);
      }
      {
        std::ostringstream text;
        write_scores_csv(g, scores, text);
        write_text(dir / "rankings" / (label + ".csv"), text.str());
      }
      auto report = evaluate_method(scores, truth, spec.k_list);
      Json j;
      j["network"] = name;
      j["method"] = label;
      j["kendall_tau"] = report.kendall_tau;
      Json jac = Json::object();
      for (const auto& [k, v] : report.jaccard_at_k) jac[std::to_string(k)] = v;
      j["jaccard_at_k"] = jac;
      j["monotonicity"] = report.monotonicity;
      j["ground_truth"] = truth_source;
      j["sir"] = sir_json(sir);
      write_text(dir / "reports" / (label + ".json"), j.dump(2) + "\n");

      result.kendall[name][label] = report.kendall_tau;
      result.monotonicity[name][label] = report.monotonicity;
      jaccard.push_back(report.jaccard_at_k);

      std::vector<NodeId> seeds(scores.ranking().begin(),
                                scores.ranking().begin() + static_cast<std::ptrdiff_t>(top));
      trajectories.push_back(top_k_trajectory(g, seeds, sir));
    }

    std::ostringstream jac_csv;
    jac_csv << 'k';
    for (Method m : spec.methods) jac_csv << ',' << method_name(m);
    jac_csv << '\n';
    for (std::size_t k : spec.k_list) {
      jac_csv << k;
      for (const auto& series : jaccard) jac_csv << ',' << csv::format_real(series.at(k));
      jac_csv << '\n';
    }
    write_text(dir / "jaccard.csv", jac_csv.str());

    std::size_t length = 0;
    for (const auto& t : trajectories) length = std::max(length, t.size());
    std::ostringstream traj_csv;
    traj_csv << 't';
    for (Method m : spec.methods) traj_csv << ',' << method_name(m);
    traj_csv << '\n';
    for (std::size_t t = 0; t < length; ++t) {
      traj_csv << t;
      for (const auto& series : trajectories) {
        traj_csv << ',' << csv::format_real(t < series.size() ? series[t] : series.back());
      }
      traj_csv << '\n';
    }
    write_text(dir / "trajectories.csv", traj_csv.str());

    RunManifest local = result.manifest;
    local.dataset_checksums = {{name, d.checksum}};
    Json mj = manifest_json(local);
    mj["sir"] = sir_json(sir);
    mj["ground_truth"] = truth_source;
    write_text(dir / "manifest.json", mj.dump(2) + "\n");
  }

  auto write_table = [&](const std::map<std::string, std::map<std::string, double>>& table,
                         const fs::path& path) {
    std::ostringstream out;
    out << "network";
    for (Method m : spec.methods) out << ',' << method_name(m);
    out << '\n';
    for (const auto& d : data) {
      out << d.source.name;
      for (Method m : spec.methods) {
        out << ',' << csv::format_real(table.at(d.source.name).at(std::string(method_name(m))));
      }
      out << '\n';
    }
    write_text(path, out.str());
  };
  write_table(result.kendall, spec.output_dir / "kendall.csv");
  write_table(result.monotonicity, spec.output_dir / "monotonicity.csv");

  if (spec.record_timestamps) result.manifest.timestamps["finished"] = utc_now();
  write_text(spec.output_dir / "manifest.json", manifest_json(result.manifest).dump(2) + "\n");
  return result;
}

std::multimap<std::string, std::string> read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::multimap<std::string, std::string> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto text = trim(line);
    if (text.empty()) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    auto key = trim(std::string_view(text).substr(0, eq));
    auto value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) throw UsageError(path.string() + ":" + std::to_string(line_no) + ": empty key");
    entries.emplace(key, value);
  }
  return entries;
}

}  // namespace hgc::bench
