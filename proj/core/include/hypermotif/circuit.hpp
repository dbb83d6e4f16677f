#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypermotif {

/// Raised when an integration or solve produces a non-finite value.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

/// x^n / (k^n + x^n) when activating, k^n / (k^n + x^n) otherwise; x < 0 is
/// treated as 0.
double hill(double x, double n, double k, bool activating);
/// Derivative of hill() with respect to x.
double hill_derivative(double x, double n, double k, bool activating);

struct HillFactor {
  int source = 0;  // index of the regulating variable
  bool activating = true;
  double n = 1.0;
  double k = 1.0;
};

/// Production of one variable: constant times the product of its Hill factors.
struct Production {
  double constant = 1.0;
  std::vector<HillFactor> factors;
};

/// var_i' = production_i(state) - var_i for every variable.
struct CircuitModel {
  std::string id;
  std::vector<std::string> variables;
  std::vector<Production> production;

  int dimension() const { return static_cast<int>(variables.size()); }
  int index_of(const std::string& name) const;  // throws std::invalid_argument
  /// Upper bound of production_i (Hill factors never exceed 1).
  double max_production(int i) const;
  /// True when the regulation graph (self-loops included) has no cycle.
  bool feedforward() const;
};

/// Row-major dense square matrix.
struct DenseMatrix {
  int n = 0;
  std::vector<double> values;

  explicit DenseMatrix(int size = 0) : n(size), values(static_cast<std::size_t>(size * size), 0.0) {}
  double& operator()(int i, int j) { return values[static_cast<std::size_t>(i * n + j)]; }
  double operator()(int i, int j) const { return values[static_cast<std::size_t>(i * n + j)]; }
};

void rhs(const CircuitModel& model, const std::vector<double>& state, std::vector<double>& out);
std::vector<double> rhs(const CircuitModel& model, const std::vector<double>& state);

/// Analytic Jacobian of rhs at `state`.
DenseMatrix jacobian(const CircuitModel& model, const std::vector<double>& state);

struct TopologyEdge {
  std::string from;
  std::string to;
  bool activating = true;
  double n = 1.0;
  double k = 1.0;
};

struct Topology {
  std::vector<std::string> variables;
  std::vector<TopologyEdge> edges;
  std::vector<double> constants;  // per variable; empty means all 1
};

/// One Hill factor per edge on the target's production, in edge order.
/// Throws std::invalid_argument on unknown variables, k <= 0 or n < 1.
CircuitModel build_circuit(const Topology& topology, const std::string& id = "custom");

/// Edge list of a model in the same form build_circuit accepts.
Topology to_topology(const CircuitModel& model);

}  // namespace hypermotif
