#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypermotif/circuit.hpp"

namespace hypermotif {

struct Trajectory {
  std::string model_id;
  std::vector<std::string> variables;
  double step = 0.0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // states[t][variable]

  std::size_t size() const { return times.size(); }
  std::vector<double> series(int variable) const;
  std::vector<double> series(const std::string& variable) const;
  const std::vector<double>& final_state() const { return states.back(); }
};

/// Classical fixed-step RK4 from t = 0 to `horizon`; the last step is
/// shortened when horizon is not a multiple of step. States are clipped at 0
/// after every step. Throws std::invalid_argument on bad arguments and
/// NumericError when a state becomes non-finite.
Trajectory integrate(const CircuitModel& model, const std::vector<double>& initial,
                     double horizon, double step = 0.01);

/// Writes "t,<var1>,<var2>,..." followed by one row per sample.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace hypermotif
