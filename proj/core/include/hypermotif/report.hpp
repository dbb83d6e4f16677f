#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hypermotif/analysis.hpp"
#include "hypermotif/catalog.hpp"
#include "hypermotif/census.hpp"
#include "hypermotif/combinatorics.hpp"
#include "hypermotif/detect.hpp"
#include "hypermotif/downsample.hpp"

namespace hypermotif {

std::string version();

/// Finite values as numbers; infinities and NaN as the strings "inf",
/// "-inf" and "nan" so documents stay valid JSON.
nlohmann::json number(double x);

/// {"tool", "version", "command", "seed", "config"}; every output document
/// starts from this.
nlohmann::json envelope(const std::string& command, std::uint64_t seed, nlohmann::json config);

nlohmann::json to_json(const Census& c);
nlohmann::json to_json(const MotifScore& m);
nlohmann::json to_json(const CombinationStat& s);
nlohmann::json to_json(const NullModelConfig& cfg);
nlohmann::json to_json(const DetectConfig& cfg);
nlohmann::json to_json(const DetectResult& r);
nlohmann::json to_json(const Pattern& p);
nlohmann::json to_json(const CombinationTopology& t);
nlohmann::json to_json(const FixedPoint& fp);
nlohmann::json to_json(const SteadyStateClass& c);
nlohmann::json to_json(const PulseMetrics& m);
nlohmann::json to_json(const PhaseRelation& r);
nlohmann::json to_json(const CircuitModel& m);
nlohmann::json to_json(const DownsampleReport& r);

/// One row per statistic: role_a,role_b,j_real,mean,stddev,z,p,q,direction,tested.
void write_detect_csv(const DetectResult& r, std::ostream& out);
/// One row per census-null member: member, residual, then the class counts.
void write_ensemble_tsv(const DetectResult& r, std::ostream& out);

/// Pretty-printed with a trailing newline.
void write_json(const nlohmann::json& doc, std::ostream& out);

}  // namespace hypermotif
