#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hypermotif/analysis.hpp"
#include "hypermotif/catalog.hpp"
#include "hypermotif/census.hpp"
#include "hypermotif/combinatorics.hpp"
#include "hypermotif/detect.hpp"
#include "hypermotif/downsample.hpp"
#include "hypermotif/graph.hpp"
#include "hypermotif/report.hpp"
#include "hypermotif/rng.hpp"

namespace hypermotif::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Bad input data (as opposed to bad flags).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  std::size_t jobs = 1;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("HYPERMOTIF_SEED"); env != nullptr && *env != '\0') {
      std::uint64_t v = 0;
      std::istringstream in(env);
      if (!(in >> v) || !in.eof()) throw std::invalid_argument(fmt::format("HYPERMOTIF_SEED is not a u64: '{}'", env));
      return v;
    }
    return 0;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs) {
  cmd->add_option("--seed", c.seed, "Root random seed (falls back to $HYPERMOTIF_SEED, then 0)");
  cmd->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
  if (with_jobs) cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create output directory {}: {}", dir, ec.message()));
  return p;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

void save_json(const fs::path& path, const json& doc) {
  auto f = open_out(path);
  write_json(doc, f);
}

LoadResult load_graph(const std::string& path) {
  try {
    return load_edge_list(fs::path(path));
  } catch (const ParseError& e) {
    throw DataError(fmt::format("{}: {}", path, e.what()));
  }
}

json graph_summary(const std::string& path, const LoadResult& r) {
  return json{{"input", fs::path(path).filename().string()},
              {"nodes", r.graph.node_count()},
              {"edges", r.graph.edge_count()},
              {"self_loops", r.graph.self_loop_count()},
              {"duplicates_collapsed", r.duplicate_edges}};
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  std::string input;
  std::size_t ensemble = 100;
  int motif_size = 3;
  double z_threshold = kDefaultMotifZThreshold;
};

int cmd_census(const CensusArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = c.resolved_seed();
  const LoadResult loaded = load_graph(a.input);
  const DirectedGraph& g = loaded.graph;
  const Census census = triad_census(g);
  std::vector<MotifScore> scores;
  if (a.ensemble > 0) {
    NullModelConfig cfg;
    cfg.ensemble_size = a.ensemble;
    cfg.rng_seed = stream_seed(seed, "motif-null");
    scores = score_motifs(g, cfg, c.jobs, a.z_threshold);
  }
  json doc = envelope("census", seed,
                      json{{"ensemble", a.ensemble}, {"motif_size", a.motif_size},
                           {"z_threshold", a.z_threshold}});
  doc["graph"] = graph_summary(a.input, loaded);
  doc["census"] = to_json(census);
  json motifs = json::array();
  for (const auto& m : scores) motifs.push_back(to_json(m));
  doc["motifs"] = motifs;
  save_json(prepare_out(c.out_dir) / "census.json", doc);

  out << fmt::format("nodes {} edges {} self-loops {}\n", g.node_count(), g.edge_count(), g.self_loop_count());
  for (const auto& cls : triad_classes()) {
    if (cls.connected) out << fmt::format("{:>5} {}\n", cls.name(), census.count(cls));
  }
  for (const auto& m : scores) {
    if (m.significant) out << fmt::format("motif {} z={}\n", m.motif.alias(), m.z);
  }
  return kOk;
}

// ---------------------------------------------------------------- detect

struct DetectArgs {
  std::string input;
  std::size_t ensemble = 100;
  double alpha = 0.05;
  int motif_size = 3;
  double z_threshold = kDefaultMotifZThreshold;
  std::uint64_t anneal_iterations = AnnealConfig{}.max_iterations;
  std::uint32_t restarts = AnnealConfig{}.restarts;
  bool save_ensemble = false;
};

int cmd_detect(const DetectArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = c.resolved_seed();
  const LoadResult loaded = load_graph(a.input);
  DetectConfig cfg;
  cfg.null_model.ensemble_size = a.ensemble;
  cfg.null_model.rng_seed = seed;
  cfg.null_model.anneal.max_iterations = a.anneal_iterations;
  cfg.null_model.anneal.restarts = a.restarts;
  cfg.alpha = a.alpha;
  cfg.motif_z_threshold = a.z_threshold;
  cfg.jobs = c.jobs;
  cfg.keep_ensemble = a.save_ensemble;
  const DetectResult r = detect(loaded.graph, cfg);

  json doc = envelope("detect", seed, to_json(cfg));
  doc["graph"] = graph_summary(a.input, loaded);
  for (auto& [k, v] : to_json(r).items()) doc[k] = v;
  const fs::path dir = prepare_out(c.out_dir);
  save_json(dir / "detect.json", doc);
  {
    auto f = open_out(dir / "detect.csv");
    write_detect_csv(r, f);
  }
  if (a.save_ensemble) {
    auto f = open_out(dir / "ensemble_census.tsv");
    write_ensemble_tsv(r, f);
    for (std::size_t i = 0; i < r.ensemble.size(); ++i) {
      auto e = open_out(dir / fmt::format("ensemble_{:03d}.tsv", i));
      write_edge_list(r.ensemble[i], e);
    }
  }

  std::size_t converged = 0;
  for (auto res : r.residuals) converged += res == 0 ? 1 : 0;
  out << fmt::format("motifs {} roles {} statistics {} ensemble residual-0 {}/{}\n", r.motifs.size(),
                     r.roles.size(), r.stats.size(), converged, r.residuals.size());
  for (const auto& s : r.stats) {
    if (s.direction == Direction::kNone) continue;
    out << fmt::format("{} {} x {} z={:.3f} q={:.3g}\n", to_string(s.direction),
                       RoleOrbit{s.role_a.motif, s.role_a.orbit, {}}.label(),
                       RoleOrbit{s.role_b.motif, s.role_b.orbit, {}}.label(), s.z, s.q);
  }
  return kOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string motif_a, motif_b;
  std::string mode = "combine";
  bool count_only = false;
  std::string count_in;
};

json big(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
  return v.str();
}

int cmd_enumerate(const EnumerateArgs& a, const Common& c, std::ostream& out) {
  const SmallMotif ma = small_motif(a.motif_a);
  const SmallMotif mb = small_motif(a.motif_b);
  json cfg{{"motif_a", ma.name}, {"motif_b", mb.name}, {"mode", a.mode}, {"count_only", a.count_only}};
  json doc = envelope("enumerate", c.resolved_seed(), cfg);

  if (a.mode == "interact") {
    const InteractionCount n = count_interaction_topologies(ma.size(), mb.size());
    const BigInt unique = count_unique_interactions(ma, mb);
    doc["labeled"] = big(n.labeled);
    doc["non_empty"] = big(n.non_empty);
    doc["unique"] = big(unique);
    if (!a.count_only) {
      json list = json::array();
      for (const Pattern& p : enumerate_unique_interactions(ma, mb)) list.push_back(to_json(p));
      doc["topologies"] = list;
    }
    out << n.labeled.str() << '\n';
  } else {
    const auto cores = enumerate_core_combinations(ma, mb);
    doc["count"] = cores.size();
    std::optional<DirectedGraph> g;
    if (!a.count_in.empty()) {
      g = load_graph(a.count_in).graph;
      doc["config"]["count_in"] = fs::path(a.count_in).filename().string();
    }
    if (!a.count_only) {
      json list = json::array();
      for (const auto& core : cores) {
        json t = to_json(core);
        t["extensions"] = std::uint64_t{1} << core.eligible_pairs().size();
        if (g) {
          const ExtensionHistogram h = count_extension_frequencies(*g, core);
          t["occurrences"] = h.total();
          t["extension_counts"] = h.counts;
        }
        list.push_back(t);
      }
      doc["topologies"] = list;
    }
    out << cores.size() << '\n';
  }
  if (!a.count_only) save_json(prepare_out(c.out_dir) / "enumerate.json", doc);
  return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string model;
  std::string topology;
  std::vector<std::string> init;
  std::optional<double> n, k, step, horizon;
  bool fixed_points = true;
};

std::string file_id(const std::string& id) {
  std::string s = id;
  for (char& ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_') ch = '_';
  }
  return s;
}

CatalogEntry load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open topology file: " + path);
  json j;
  try {
    in >> j;
    Topology t;
    t.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      const std::string sign = e.value("sign", "+");
      if (sign != "+" && sign != "-") throw DataError("edge sign must be + or -");
      t.edges.push_back(TopologyEdge{e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                                     sign == "+", e.value("n", 1.0), e.value("k", 1.0)});
    }
    if (j.contains("constants")) t.constants = j["constants"].get<std::vector<double>>();
    CatalogEntry entry;
    entry.id = j.value("id", fs::path(path).stem().string());
    entry.description = "topology file " + fs::path(path).filename().string();
    try {
      entry.model = build_circuit(t, entry.id);
    } catch (const std::invalid_argument& e) {
      throw DataError(fmt::format("{}: {}", path, e.what()));
    }
    entry.initial = j.contains("initial") ? j["initial"].get<std::vector<double>>()
                                          : std::vector<double>(t.variables.size(), 0.0);
    return entry;
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: {}", path, e.what()));
  }
}

std::vector<double> parse_init(const std::string& spec, const CircuitModel& m, std::vector<double> base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--init expects NAME=VALUE pairs, got '" + item + "'");
    const int idx = m.index_of(item.substr(0, eq));
    std::size_t used = 0;
    const std::string value = item.substr(eq + 1);
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty()) throw std::invalid_argument("bad --init value '" + value + "'");
    base[static_cast<std::size_t>(idx)] = v;
  }
  return base;
}

CatalogEntry resolve_model(const SimulateArgs& a) {
  if (a.model.empty() == a.topology.empty()) throw std::invalid_argument("give exactly one of --model or --topology");
  CatalogEntry e = a.model.empty() ? load_topology(a.topology) : catalog_entry(a.model);
  if (a.n || a.k) e.model = with_uniform_hill(e.model, a.n.value_or(-1.0), a.k.value_or(-1.0));
  if (a.step) e.step = *a.step;
  if (a.horizon) e.horizon = *a.horizon;
  return e;
}

int cmd_simulate(const SimulateArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = c.resolved_seed();
  const CatalogEntry e = resolve_model(a);
  std::vector<std::vector<double>> inits;
  if (a.init.empty()) inits.push_back(e.initial);
  for (const auto& s : a.init) inits.push_back(parse_init(s, e.model, e.initial));

  json cfg{{"model", e.id}, {"step", e.step}, {"horizon", e.horizon}};
  if (a.n) cfg["n"] = *a.n;
  if (a.k) cfg["k"] = *a.k;
  json doc = envelope("simulate", seed, cfg);
  doc["model"] = to_json(e.model);
  const fs::path dir = prepare_out(c.out_dir);
  const std::string fid = file_id(e.id);

  json runs = json::array();
  for (std::size_t r = 0; r < inits.size(); ++r) {
    const Trajectory t = integrate(e.model, inits[r], e.horizon, e.step);
    const std::string name = inits.size() == 1 ? fmt::format("traj_{}.csv", fid) : fmt::format("traj_{}_{}.csv", fid, r);
    {
      auto f = open_out(dir / name);
      write_trajectory_csv(t, f);
    }
    const SteadyStateClass cls = classify_steady_state(t, e.model);
    json run{{"initial", inits[r]}, {"trajectory", name}, {"classification", to_json(cls)}};
    json pulses = json::object();
    for (int v = 0; v < e.model.dimension(); ++v) {
      if (cls.variables[static_cast<std::size_t>(v)].state != SteadyState::kSustainedOscillation) {
        pulses[e.model.variables[static_cast<std::size_t>(v)]] = to_json(pulse_metrics(t, v));
      }
    }
    run["pulse"] = pulses;
    json phases = json::array();
    for (int u = 0; u < e.model.dimension(); ++u) {
      for (int v = u + 1; v < e.model.dimension(); ++v) {
        if (cls.variables[static_cast<std::size_t>(u)].state != SteadyState::kSustainedOscillation ||
            cls.variables[static_cast<std::size_t>(v)].state != SteadyState::kSustainedOscillation) {
          continue;
        }
        json p = to_json(phase_relation(t, t, u, v));
        p["a"] = e.model.variables[static_cast<std::size_t>(u)];
        p["b"] = e.model.variables[static_cast<std::size_t>(v)];
        phases.push_back(p);
      }
    }
    run["phase"] = phases;
    runs.push_back(run);

    out << fmt::format("{} run {}: {}", e.id, r, to_string(cls.overall));
    for (const auto& vs : cls.variables) out << fmt::format(" {}={}", vs.variable, to_string(vs.state));
    out << '\n';
    for (const auto& p : phases) {
      out << fmt::format("  {} vs {}: {} (period {:.3f}, lag {:.3f})\n", p["a"].get<std::string>(),
                         p["b"].get<std::string>(), p["relation"].get<std::string>(),
                         p["period"].get<double>(), p["lag"].get<double>());
    }
  }
  doc["runs"] = runs;

  if (a.fixed_points) {
    FixedPointSearch search;
    search.rng_seed = seed;
    const auto fps = find_fixed_points(e.model, search);
    json list = json::array();
    std::size_t stable = 0;
    for (const auto& fp : fps) {
      list.push_back(to_json(fp));
      stable += is_stable(fp.stability) ? 1 : 0;
    }
    doc["fixed_points"] = list;
    doc["stable_states"] = stable;
    out << fmt::format("fixed points {} (stable {})\n", fps.size(), stable);
    for (const auto& fp : fps) {
      std::string coords;
      for (double x : fp.point) coords += fmt::format("{}{:.6g}", coords.empty() ? "" : ", ", x);
      out << fmt::format("  ({}) {}\n", coords, to_string(fp.stability));
    }
  }
  save_json(dir / fmt::format("simulate_{}.json", fid), doc);
  return kOk;
}

// ---------------------------------------------------------------- portrait

struct PortraitArgs {
  SimulateArgs model;
  int grid = 101;
  std::string x_range = "0:1";
  std::string y_range = "0:1";
};

std::pair<double, double> parse_range(const std::string& s, const char* flag) {
  const auto colon = s.find(':');
  try {
    if (colon != std::string::npos) {
      std::size_t u1 = 0, u2 = 0;
      const std::string lo = s.substr(0, colon), hi = s.substr(colon + 1);
      const double a = std::stod(lo, &u1), b = std::stod(hi, &u2);
      if (u1 == lo.size() && u2 == hi.size()) return {a, b};
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(fmt::format("{} expects MIN:MAX, got '{}'", flag, s));
}

int cmd_portrait(const PortraitArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = c.resolved_seed();
  const CatalogEntry e = resolve_model(a.model);
  PortraitGrid grid;
  std::tie(grid.x_min, grid.x_max) = parse_range(a.x_range, "--x-range");
  std::tie(grid.y_min, grid.y_max) = parse_range(a.y_range, "--y-range");
  grid.nx = grid.ny = a.grid;
  const PhasePortrait p = phase_portrait(e.model, grid);

  const fs::path dir = prepare_out(c.out_dir);
  const std::string fid = file_id(e.id);
  {
    auto f = open_out(dir / fmt::format("portrait_{}.csv", fid));
    write_portrait_csv(p, f);
  }
  {
    auto f = open_out(dir / fmt::format("portrait_{}_nullclines.csv", fid));
    write_nullclines_csv(p, f);
  }
  json doc = envelope("portrait", seed,
                      json{{"model", e.id}, {"grid", a.grid}, {"x_range", {grid.x_min, grid.x_max}},
                           {"y_range", {grid.y_min, grid.y_max}}});
  doc["model"] = to_json(e.model);
  json inter = json::array();
  for (const auto& q : p.intersections) inter.push_back({q[0], q[1]});
  doc["intersections"] = inter;
  json fps = json::array();
  for (const auto& fp : find_fixed_points(e.model)) fps.push_back(to_json(fp));
  doc["fixed_points"] = fps;
  save_json(dir / fmt::format("portrait_{}.json", fid), doc);

  out << fmt::format("{}: {} nullcline intersections\n", e.id, p.intersections.size());
  for (const auto& q : p.intersections) out << fmt::format("  ({:.4f}, {:.4f})\n", q[0], q[1]);
  return kOk;
}

// ---------------------------------------------------------------- downsample

struct DownsampleArgs {
  std::string input;
  std::size_t sz = DownsampleConfig{}.sz;
  double walk_probability = DownsampleConfig{}.walk_probability;
  std::size_t validate_ensemble = 20;
};

int cmd_downsample(const DownsampleArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t seed = c.resolved_seed();
  const LoadResult loaded = load_graph(a.input);
  DownsampleConfig cfg;
  cfg.sz = a.sz;
  cfg.walk_probability = a.walk_probability;
  cfg.rng_seed = stream_seed(seed, "downsample");
  DownsampleResult r;
  try {
    r = downsample(loaded.graph, cfg);
  } catch (const DownsampleError& e) {
    throw DataError(e.what());
  }
  const fs::path dir = prepare_out(c.out_dir);
  {
    auto f = open_out(dir / "downsample.tsv");
    write_edge_list(r.graph, f);
  }
  json doc = envelope("downsample", seed,
                      json{{"sz", a.sz}, {"walk_probability", a.walk_probability},
                           {"validate_ensemble", a.validate_ensemble}});
  doc["graph"] = graph_summary(a.input, loaded);
  doc["sample"] = json{{"nodes", r.graph.node_count()}, {"edges", r.graph.edge_count()},
                       {"sequence_length", r.sequence.size()}, {"anchor_draws", r.anchor_draws},
                       {"warnings", r.warnings}};
  if (a.validate_ensemble > 0) {
    NullModelConfig mcfg;
    mcfg.ensemble_size = a.validate_ensemble;
    mcfg.rng_seed = stream_seed(seed, "motif-null");
    doc["validation"] = to_json(validate_downsample(loaded.graph, r.graph, mcfg, c.jobs));
  }
  save_json(dir / "downsample.json", doc);
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  out << fmt::format("sampled {} nodes, {} edges from {} nodes\n", r.graph.node_count(), r.graph.edge_count(),
                     loaded.graph.node_count());
  return kOk;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(std::ostream& out) {
  json list = json::array();
  for (const auto& id : catalog_ids()) {
    const CatalogEntry e = catalog_entry(id);
    json j = to_json(e.model);
    j["description"] = e.description;
    j["initial"] = e.initial;
    j["step"] = e.step;
    j["horizon"] = e.horizon;
    list.push_back(j);
  }
  write_json(json{{"tool", "hypermotif"}, {"version", version()}, {"models", list}}, out);
  return kOk;
}

void add_model_options(CLI::App* cmd, SimulateArgs& s) {
  cmd->add_option("--model", s.model, "Catalog model id (see `hypermotif catalog`)");
  cmd->add_option("--topology", s.topology, "JSON topology file");
  cmd->add_option("--n", s.n, "Replace every Hill cooperativity")->check(CLI::Range(1.0, 1e6));
  cmd->add_option("--k", s.k, "Replace every Hill half-max")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Network-motif combinations: detection, enumeration and circuit dynamics", "hypermotif"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  Common common;

  CensusArgs census;
  auto* c_census = app.add_subcommand("census", "Triad census and motif significance");
  c_census->add_option("edges", census.input, "Edge list")->required();
  c_census->add_option("--ensemble", census.ensemble, "Degree-preserving random networks (0 skips scoring)")->capture_default_str();
  c_census->add_option("--motif-size", census.motif_size, "Motif size")->check(CLI::IsMember({3}))->capture_default_str();
  c_census->add_option("--z-threshold", census.z_threshold, "Motif z-score threshold")->capture_default_str();
  add_common(c_census, common, true);

  DetectArgs det;
  auto* c_detect = app.add_subcommand("detect", "Enriched motif-role combinations");
  c_detect->add_option("edges", det.input, "Edge list")->required();
  c_detect->add_option("--ensemble", det.ensemble, "Census-preserving random networks")->check(CLI::Range(2, 1000000))->capture_default_str();
  c_detect->add_option("--alpha", det.alpha, "FDR level")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  c_detect->add_option("--motif-size", det.motif_size, "Motif size")->check(CLI::IsMember({3}))->capture_default_str();
  c_detect->add_option("--z-threshold", det.z_threshold, "Motif z-score threshold")->capture_default_str();
  c_detect->add_option("--anneal-iterations", det.anneal_iterations, "Annealing proposals per attempt")->capture_default_str();
  c_detect->add_option("--restarts", det.restarts, "Annealing attempts per member")->capture_default_str();
  c_detect->add_flag("--save-ensemble", det.save_ensemble, "Write ensemble_census.tsv and ensemble_NNN.tsv");
  add_common(c_detect, common, true);

  EnumerateArgs en;
  auto* c_enum = app.add_subcommand("enumerate", "Combinations or interactions of two motifs");
  c_enum->add_option("motif_a", en.motif_a, "Motif name (SL, MUTUAL, FFL, C1FFL, I1FFL, TOGGLE, LOCKON, OSC, triad code)")->required();
  c_enum->add_option("motif_b", en.motif_b, "Motif name")->required();
  c_enum->add_option("--mode", en.mode, "combine or interact")->check(CLI::IsMember({"combine", "interact"}))->capture_default_str();
  c_enum->add_flag("--count-only", en.count_only, "Print the count only");
  c_enum->add_option("--count-in", en.count_in, "Edge list in which to count each core's extensions");
  add_common(c_enum, common, false);

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Integrate a circuit model and classify its dynamics");
  add_model_options(c_sim, sim);
  c_sim->add_option("--init", sim.init, "Initial condition, e.g. \"X=0.1,Y=0.2\" (repeatable)");
  c_sim->add_option("--step", sim.step, "RK4 step")->check(CLI::PositiveNumber);
  c_sim->add_option("--horizon", sim.horizon, "Integration horizon")->check(CLI::PositiveNumber);
  add_common(c_sim, common, false);

  PortraitArgs por;
  auto* c_por = app.add_subcommand("portrait", "Vector field and nullclines of a 2-variable model");
  add_model_options(c_por, por.model);
  c_por->add_option("--grid", por.grid, "Grid points per axis")->capture_default_str();
  c_por->add_option("--x-range", por.x_range, "MIN:MAX of the first variable")->capture_default_str();
  c_por->add_option("--y-range", por.y_range, "MIN:MAX of the second variable")->capture_default_str();
  add_common(c_por, common, false);

  DownsampleArgs ds;
  auto* c_ds = app.add_subcommand("downsample", "Random-walk downsampling with validation");
  c_ds->add_option("edges", ds.input, "Edge list")->required();
  c_ds->add_option("--sz", ds.sz, "Sample list length")->capture_default_str();
  c_ds->add_option("--walk-probability", ds.walk_probability, "Probability of stepping from the last node")->capture_default_str();
  c_ds->add_option("--validate-ensemble", ds.validate_ensemble, "Random networks for the motif check (0 skips)")->capture_default_str();
  add_common(c_ds, common, true);

  auto* c_cat = app.add_subcommand("catalog", "List the circuit model catalog as JSON");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (c_census->parsed()) return cmd_census(census, common, out);
    if (c_detect->parsed()) return cmd_detect(det, common, out);
    if (c_enum->parsed()) return cmd_enumerate(en, common, out);
    if (c_sim->parsed()) return cmd_simulate(sim, common, out);
    if (c_por->parsed()) return cmd_portrait(por, common, out);
    if (c_ds->parsed()) return cmd_downsample(ds, common, out);
    if (c_cat->parsed()) return cmd_catalog(out);
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace hypermotif::cli
