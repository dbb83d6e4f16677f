#pragma once

#include <string>
#include <vector>

#include "hypermotif/circuit.hpp"

namespace hypermotif {

struct CatalogEntry {
  std::string id;
  std::string description;
  CircuitModel model;
  std::vector<double> initial;  // default initial condition
  double step = 0.01;
  double horizon = 200.0;
};

/// Catalog ids in listing order.
std::vector<std::string> catalog_ids();

/// Throws std::invalid_argument for an unknown id.
CatalogEntry catalog_entry(const std::string& id);
CircuitModel circuit_library(const std::string& id);

/// Positive autoregulation X' = X^n / (k^n + X^n) - X.
CircuitModel self_loop_circuit(double n, double k);

/// Copy of `model` with every Hill factor's n and/or k replaced (a negative
/// value leaves that parameter unchanged).
CircuitModel with_uniform_hill(CircuitModel model, double n, double k);

}  // namespace hypermotif
