#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypermotif/circuit.hpp"
#include "hypermotif/ode.hpp"

namespace hypermotif {

enum class Stability { kStable, kUnstable, kSaddle, kSpiralStable, kSpiralUnstable, kNonHyperbolic };
std::string to_string(Stability s);
bool is_stable(Stability s);

struct FixedPoint {
  std::vector<double> point;
  std::vector<std::complex<double>> eigenvalues;
  Stability stability = Stability::kStable;
  double residual = 0.0;  // max-norm of rhs at point
};

struct FixedPointSearch {
  int grid_per_axis = 11;      // full grid of starts when dimension <= max_grid_dimension
  int max_grid_dimension = 4;
  int random_starts = 400;     // used above max_grid_dimension
  std::uint64_t rng_seed = 1;
  int max_iterations = 200;
  double tolerance = 1e-12;    // Newton stops at this residual
  double accept_residual = 1e-8;
  double dedup_distance = 1e-6;
  double zero_real_part = 1e-9;  // below this an eigenvalue counts as marginal
};

/// Damped Newton from a multi-start set spanning [0, max production] per
/// variable. Starts that do not converge are skipped. Results are sorted
/// lexicographically.
std::vector<FixedPoint> find_fixed_points(const CircuitModel& model,
                                          const FixedPointSearch& search = {});

/// Eigenvalues of a dense matrix.
std::vector<std::complex<double>> eigenvalues(const DenseMatrix& m);
Stability classify_stability(const std::vector<std::complex<double>>& eig,
                             double zero_real_part = 1e-9);

enum class SteadyState { kOff, kOn, kIntermediate, kDampedOscillation, kSustainedOscillation };
std::string to_string(SteadyState s);

struct ClassifyConfig {
  double off_threshold = 1e-3;
  double decay_ratio = 0.95;
  int min_peaks = 3;
  double transient_fraction = 0.5;
  double on_fraction = 0.5;      // ON when final >= on_fraction * max production
  double min_amplitude = 1e-6;   // peaks smaller than this are numerical noise
  std::size_t min_window_samples = 10;
};

struct VariableState {
  std::string variable;
  SteadyState state = SteadyState::kOff;
  double final_value = 0.0;
  double amplitude = 0.0;  // last post-transient peak-to-trough; 0 if none
  int peaks = 0;           // post-transient peaks for sustained, all peaks otherwise
};

struct SteadyStateClass {
  SteadyState overall = SteadyState::kOff;
  std::vector<VariableState> variables;
};

/// `max_production` gives the ON reference per variable (defaults to 1).
/// Throws std::invalid_argument when the post-transient window is too short.
SteadyStateClass classify_steady_state(const Trajectory& traj,
                                       const std::vector<double>& max_production = {},
                                       const ClassifyConfig& cfg = {});
SteadyStateClass classify_steady_state(const Trajectory& traj, const CircuitModel& model,
                                       const ClassifyConfig& cfg = {});

struct PortraitGrid {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  int nx = 101, ny = 101;
};

struct Segment {
  double x0, y0, x1, y1;
};

struct PhasePortrait {
  std::string x_variable, y_variable;
  PortraitGrid grid;
  std::vector<std::array<double, 4>> samples;  // x, y, dx, dy
  std::vector<Segment> x_nullcline;            // dx = 0
  std::vector<Segment> y_nullcline;            // dy = 0
  std::vector<std::array<double, 2>> intersections;
};

/// Vector field on a regular grid and the zero-level contours of both
/// derivative components (marching squares with linear interpolation).
/// Requires a 2-variable model; throws std::invalid_argument otherwise or
/// when the grid has fewer than 2 points per axis or an empty range.
PhasePortrait phase_portrait(const CircuitModel& model, const PortraitGrid& grid = {});

void write_portrait_csv(const PhasePortrait& p, std::ostream& out);
void write_nullclines_csv(const PhasePortrait& p, std::ostream& out);

struct PulseMetrics {
  double peak_value = 0.0;
  double peak_time = 0.0;
  std::optional<double> pulse_width;     // time above half-peak, if the signal falls back below it
  std::optional<double> response_delay;  // time to reach half the final value, if rising
};

PulseMetrics pulse_metrics(const Trajectory& traj, int variable);
PulseMetrics pulse_metrics(const std::vector<double>& times, const std::vector<double>& values);

enum class PhaseKind { kNone, kInPhase, kAntiPhase };
std::string to_string(PhaseKind k);

struct PhaseRelation {
  double period = 0.0;
  double lag = 0.0;  // in [0, period)
  PhaseKind relation = PhaseKind::kNone;
};

/// Both series are compared over the post-transient window of a shared time
/// grid. Throws std::invalid_argument when either has fewer than three peaks
/// there or the grids differ.
PhaseRelation phase_relation(const Trajectory& a, const Trajectory& b, int variable_a,
                             int variable_b, const ClassifyConfig& cfg = {});

/// Indices of local maxima (plateaus count once) whose rise above the
/// preceding trough exceeds min_amplitude.
std::vector<std::size_t> find_peaks(const std::vector<double>& values, std::size_t begin,
                                    double min_amplitude);

}  // namespace hypermotif
