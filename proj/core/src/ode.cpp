#include "hypermotif/ode.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace hypermotif {

std::vector<double> Trajectory::series(int variable) const {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.at(static_cast<std::size_t>(variable)));
  return out;
}

std::vector<double> Trajectory::series(const std::string& variable) const {
  const auto it = std::find(variables.begin(), variables.end(), variable);
  if (it == variables.end()) throw std::invalid_argument("unknown variable '" + variable + "'");
  return series(static_cast<int>(it - variables.begin()));
}

Trajectory integrate(const CircuitModel& model, const std::vector<double>& initial,
                     double horizon, double step) {
  const std::size_t d = static_cast<std::size_t>(model.dimension());
  if (initial.size() != d) {
    throw std::invalid_argument(fmt::format("expected {} initial values, got {}", d, initial.size()));
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive");
  if (!(horizon >= step) || !std::isfinite(horizon)) {
    throw std::invalid_argument("horizon must be at least one step");
  }
  for (double v : initial) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("initial values must be finite and >= 0");
  }

  // Steps are counted so that times are exact multiples of step.
  const auto full = static_cast<std::size_t>(std::floor(horizon / step + 1e-9));
  const double tail = horizon - static_cast<double>(full) * step;
  const std::size_t count = full + (tail > 1e-12 * horizon ? 1 : 0);

  Trajectory traj;
  traj.model_id = model.id;
  traj.variables = model.variables;
  traj.step = step;
  traj.times.reserve(count + 1);
  traj.states.reserve(count + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(initial);

  std::vector<double> x = initial, k1, k2, k3, k4, tmp(d);
  for (std::size_t s = 0; s < count; ++s) {
    const double h = s < full ? step : tail;
    rhs(model, x, k1);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    rhs(model, tmp, k2);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    rhs(model, tmp, k3);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + h * k3[i];
    rhs(model, tmp, k4);
    const double t = s < full ? static_cast<double>(s + 1) * step : horizon;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(x[i])) {
        throw NumericError(fmt::format("non-finite {} at t = {}", model.variables[i], t), t);
      }
      x[i] = std::max(x[i], 0.0);
    }
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << 't';
  for (const auto& v : traj.variables) out << ',' << v;
  out << '\n';
  for (std::size_t s = 0; s < traj.size(); ++s) {
    out << fmt::format("{:.10g}", traj.times[s]);
    for (double v : traj.states[s]) out << fmt::format(",{:.10g}", v);
    out << '\n';
  }
}

}  // namespace hypermotif
