#include "hypermotif/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hypermotif {

double hill(double x, double n, double k, bool activating) {
  const double r = std::pow(std::max(x, 0.0) / k, n);
  return activating ? r / (1.0 + r) : 1.0 / (1.0 + r);
}

double hill_derivative(double x, double n, double k, bool activating) {
  x = std::max(x, 0.0);
  const double u = x / k;
  const double r = std::pow(u, n);
  const double dr = n * std::pow(u, n - 1.0) / k;  // d(u^n)/dx
  const double d = dr / ((1.0 + r) * (1.0 + r));
  return activating ? d : -d;
}

int CircuitModel::index_of(const std::string& name) const {
  const auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<int>(it - variables.begin());
}

double CircuitModel::max_production(int i) const { return production[i].constant; }

bool CircuitModel::feedforward() const {
  const int d = dimension();
  std::vector<int> state(static_cast<std::size_t>(d), 0);  // 0 new, 1 open, 2 done
  std::function<bool(int)> acyclic = [&](int v) {
    state[v] = 1;
    // Edges run from a factor's source to the variable it regulates.
    for (int w = 0; w < d; ++w) {
      for (const HillFactor& f : production[w].factors) {
        if (f.source != v) continue;
        if (state[w] == 1) return false;
        if (state[w] == 0 && !acyclic(w)) return false;
      }
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < d; ++v) {
    if (state[v] == 0 && !acyclic(v)) return false;
  }
  return true;
}

void rhs(const CircuitModel& model, const std::vector<double>& state, std::vector<double>& out) {
  const int d = model.dimension();
  out.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const Production& p = model.production[i];
    double v = p.constant;
    for (const HillFactor& f : p.factors) v *= hill(state[f.source], f.n, f.k, f.activating);
    out[i] = v - state[i];
  }
}

std::vector<double> rhs(const CircuitModel& model, const std::vector<double>& state) {
  std::vector<double> out;
  rhs(model, state, out);
  return out;
}

DenseMatrix jacobian(const CircuitModel& model, const std::vector<double>& state) {
  const int d = model.dimension();
  DenseMatrix j(d);
  for (int i = 0; i < d; ++i) {
    const Production& p = model.production[i];
    const std::size_t m = p.factors.size();
    std::vector<double> values(m);
    for (std::size_t a = 0; a < m; ++a) {
      const HillFactor& f = p.factors[a];
      values[a] = hill(state[f.source], f.n, f.k, f.activating);
    }
    for (std::size_t a = 0; a < m; ++a) {
      const HillFactor& f = p.factors[a];
      double term = p.constant * hill_derivative(state[f.source], f.n, f.k, f.activating);
      for (std::size_t b = 0; b < m; ++b) {
        if (b != a) term *= values[b];
      }
      j(i, f.source) += term;
    }
    j(i, i) -= 1.0;
  }
  return j;
}

CircuitModel build_circuit(const Topology& topology, const std::string& id) {
  CircuitModel m;
  m.id = id;
  m.variables = topology.variables;
  const std::size_t d = m.variables.size();
  if (d == 0) throw std::invalid_argument("topology has no variables");
  if (!topology.constants.empty() && topology.constants.size() != d) {
    throw std::invalid_argument("one constant production per variable expected");
  }
  m.production.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double c = topology.constants.empty() ? 1.0 : topology.constants[i];
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("constant production must be >= 0");
    m.production[i].constant = c;
  }
  for (const TopologyEdge& e : topology.edges) {
    if (!(e.k > 0.0) || !std::isfinite(e.k)) {
      throw std::invalid_argument("half-max k must be positive on edge " + e.from + "->" + e.to);
    }
    if (!(e.n >= 1.0) || !std::isfinite(e.n)) {
      throw std::invalid_argument("cooperativity n must be >= 1 on edge " + e.from + "->" + e.to);
    }
    const int from = m.index_of(e.from);
    const int to = m.index_of(e.to);
    m.production[static_cast<std::size_t>(to)].factors.push_back(HillFactor{from, e.activating, e.n, e.k});
  }
  return m;
}

Topology to_topology(const CircuitModel& model) {
  Topology t;
  t.variables = model.variables;
  for (int i = 0; i < model.dimension(); ++i) {
    const Production& p = model.production[i];
    t.constants.push_back(p.constant);
    for (const HillFactor& f : p.factors) {
      t.edges.push_back(TopologyEdge{model.variables[f.source], model.variables[i], f.activating, f.n, f.k});
    }
  }
  return t;
}

}  // namespace hypermotif
