#include "hypermotif/report.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#ifndef HYPERMOTIF_VERSION
#define HYPERMOTIF_VERSION "0.0.0"
#endif

namespace hypermotif {

using nlohmann::json;

std::string version() { return HYPERMOTIF_VERSION; }

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json envelope(const std::string& command, std::uint64_t seed, json config) {
  return json{{"tool", "hypermotif"},
              {"version", version()},
              {"command", command},
              {"seed", seed},
              {"config", std::move(config)}};
}

json to_json(const Census& c) {
  json triads = json::object();
  const auto& classes = triad_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) triads[classes[i].name()] = c.triads[i];
  return json{{"triads", triads}, {"self_loops", c.self_loops}, {"connected_total", c.connected_total()}};
}

json to_json(const MotifScore& m) {
  return json{{"motif", m.motif.name()},
              {"alias", m.motif.alias()},
              {"real", number(m.real)},
              {"mean", number(m.mean)},
              {"stddev", number(m.stddev)},
              {"z", number(m.z)},
              {"significant", m.significant}};
}

namespace {

std::string role_label(const RoleKey& k) { return RoleOrbit{k.motif, k.orbit, {}}.label(); }

}  // namespace

json to_json(const CombinationStat& s) {
  return json{{"role_a", role_label(s.role_a)},
              {"role_b", role_label(s.role_b)},
              {"self_repetition", s.is_self_repetition()},
              {"j_real", number(s.j_real)},
              {"mean", number(s.mean)},
              {"stddev", number(s.stddev)},
              {"z", number(s.z)},
              {"p", number(s.p)},
              {"q", number(s.q)},
              {"direction", to_string(s.direction)},
              {"tested", s.tested}};
}

json to_json(const NullModelConfig& cfg) {
  return json{{"ensemble_size", cfg.ensemble_size},
              {"swap_multiplier", cfg.swap_multiplier},
              {"anneal",
               {{"initial_temperature", cfg.anneal.initial_temperature},
                {"cooling_factor", cfg.anneal.cooling_factor},
                {"max_iterations", cfg.anneal.max_iterations},
                {"restarts", cfg.anneal.restarts},
                {"target_residual", cfg.anneal.target_residual}}}};
}

json to_json(const DetectConfig& cfg) {
  // jobs is left out on purpose: it must not change the output.
  return json{{"null_model", to_json(cfg.null_model)},
              {"alpha", cfg.alpha},
              {"motif_z_threshold", cfg.motif_z_threshold},
              {"motif_size", 3}};
}

json to_json(const DetectResult& r) {
  json motifs = json::array(), roles = json::array(), stats = json::array();
  for (const auto& m : r.motifs) motifs.push_back(to_json(m));
  for (const auto& o : r.roles) {
    roles.push_back(json{{"label", o.label()}, {"motif", o.motif.name()}, {"orbit", o.orbit},
                         {"positions", o.positions}});
  }
  for (const auto& s : r.stats) stats.push_back(to_json(s));
  std::size_t converged = 0;
  for (auto res : r.residuals) converged += res == 0 ? 1 : 0;
  return json{{"census", to_json(r.census)},
              {"motifs", motifs},
              {"roles", roles},
              {"stats", stats},
              {"ensemble", {{"members", r.residuals.size()}, {"residual_zero", converged},
                            {"residuals", r.residuals}}}};
}

json to_json(const Pattern& p) {
  json edges = json::array();
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (p.has(i, j)) edges.push_back(json{{"from", i}, {"to", j}, {"sign", p.negative(i, j) ? "-" : "+"}});
    }
  }
  return json{{"nodes", p.n}, {"edges", edges}};
}

json to_json(const CombinationTopology& t) {
  json sharing = json::array();
  for (auto [a, b] : t.sharing) sharing.push_back(json::array({a, b}));
  json eligible = json::array();
  for (auto [u, v] : t.eligible_pairs()) eligible.push_back(json::array({u, v}));
  return json{{"label", t.label()},
              {"motif_a", t.motif_a.name},
              {"motif_b", t.motif_b.name},
              {"sharing", sharing},
              {"a_nodes", t.a_nodes},
              {"b_nodes", t.b_nodes},
              {"merged", to_json(t.merged)},
              {"eligible_pairs", eligible}};
}

json to_json(const FixedPoint& fp) {
  json eig = json::array();
  for (const auto& e : fp.eigenvalues) eig.push_back(json::array({e.real(), e.imag()}));
  return json{{"point", fp.point}, {"stability", to_string(fp.stability)},
              {"eigenvalues", eig}, {"residual", fp.residual}};
}

json to_json(const SteadyStateClass& c) {
  json vars = json::array();
  for (const auto& v : c.variables) {
    vars.push_back(json{{"variable", v.variable}, {"class", to_string(v.state)},
                        {"final", number(v.final_value)}, {"amplitude", number(v.amplitude)},
                        {"peaks", v.peaks}});
  }
  return json{{"overall", to_string(c.overall)}, {"variables", vars}};
}

json to_json(const PulseMetrics& m) {
  auto opt = [](const std::optional<double>& v) { return v ? number(*v) : json(nullptr); };
  return json{{"peak_value", number(m.peak_value)}, {"peak_time", number(m.peak_time)},
              {"pulse_width", opt(m.pulse_width)}, {"response_delay", opt(m.response_delay)}};
}

json to_json(const PhaseRelation& r) {
  return json{{"period", number(r.period)}, {"lag", number(r.lag)}, {"relation", to_string(r.relation)}};
}

json to_json(const CircuitModel& m) {
  json eqs = json::array();
  for (int i = 0; i < m.dimension(); ++i) {
    const Production& p = m.production[static_cast<std::size_t>(i)];
    json factors = json::array();
    for (const HillFactor& f : p.factors) {
      factors.push_back(json{{"source", m.variables[static_cast<std::size_t>(f.source)]},
                             {"sign", f.activating ? "+" : "-"}, {"n", f.n}, {"k", f.k}});
    }
    eqs.push_back(json{{"variable", m.variables[static_cast<std::size_t>(i)]},
                       {"constant", p.constant}, {"factors", factors}});
  }
  return json{{"id", m.id}, {"variables", m.variables}, {"equations", eqs}};
}

json to_json(const DownsampleReport& r) {
  auto names = [](const std::vector<MotifClass>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.name());
    return a;
  };
  return json{{"ks_distance", number(r.ks_distance)},
              {"motifs_full", names(r.motifs_full)},
              {"motifs_sample", names(r.motifs_sample)},
              {"same_motifs", r.same_motifs}};
}

void write_detect_csv(const DetectResult& r, std::ostream& out) {
  out << "role_a,role_b,j_real,mean,stddev,z,p,q,direction,tested\n";
  auto f = [](double x) {
    if (std::isinf(x)) return std::string(x > 0 ? "inf" : "-inf");
    return fmt::format("{:.10g}", x);
  };
  for (const auto& s : r.stats) {
    out << role_label(s.role_a) << ',' << role_label(s.role_b) << ',' << f(s.j_real) << ','
        << f(s.mean) << ',' << f(s.stddev) << ',' << f(s.z) << ',' << f(s.p) << ',' << f(s.q)
        << ',' << to_string(s.direction) << ',' << (s.tested ? 1 : 0) << '\n';
  }
}

void write_ensemble_tsv(const DetectResult& r, std::ostream& out) {
  out << "member\tresidual";
  for (const auto& c : triad_classes()) out << '\t' << c.name();
  out << "\tSL\n";
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    out << i << '\t' << r.residuals[i];
    if (i < r.ensemble.size()) {
      const Census c = triad_census(r.ensemble[i]);
      for (auto v : c.triads) out << '\t' << v;
      out << '\t' << c.self_loops;
    }
    out << '\n';
  }
}

void write_json(const json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

}  // namespace hypermotif
