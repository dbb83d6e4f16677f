#include "hypermotif/catalog.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace hypermotif {

namespace {

TopologyEdge act(const char* from, const char* to, double n, double k) {
  return TopologyEdge{from, to, true, n, k};
}
TopologyEdge rep(const char* from, const char* to, double n, double k) {
  return TopologyEdge{from, to, false, n, k};
}

CatalogEntry make(const std::string& id, const std::string& description,
                  std::vector<std::string> vars, std::vector<TopologyEdge> edges,
                  std::vector<double> initial, std::vector<double> constants = {}) {
  CatalogEntry e;
  e.id = id;
  e.description = description;
  e.model = build_circuit(Topology{std::move(vars), std::move(edges), std::move(constants)}, id);
  e.initial = std::move(initial);
  return e;
}

CatalogEntry with_self_loop(CatalogEntry e, const std::string& var, double n, double k,
                            const std::string& suffix) {
  const int v = e.model.index_of(var);
  auto& factors = e.model.production[static_cast<std::size_t>(v)].factors;
  factors.insert(factors.begin(), HillFactor{v, true, n, k});
  e.id += suffix;
  e.model.id = e.id;
  e.description += ", positive self-loop on " + var;
  return e;
}

CatalogEntry coherent_ffl() {
  return make("M14-16", "coherent type 1 FFL", {"X", "Y", "Z"},
              {act("X", "Y", 1, 0.01), act("X", "Z", 1, 0.01), act("Y", "Z", 1, 0.01)},
              {0.0, 0.0, 0.0});
}

CatalogEntry incoherent_ffl() {
  return make("M17-19", "incoherent type 1 FFL", {"X", "Y", "Z"},
              {act("X", "Y", 1, 0.01), act("X", "Z", 1, 0.01), rep("Y", "Z", 1, 0.5)},
              {0.0, 0.0, 0.0});
}

// Oscillator circuit (Y activates X, X represses Y) feeding the FFL's
// intermediate node through W.
CatalogEntry oscillator_ffl(bool coherent) {
  std::vector<TopologyEdge> edges = {
      act("Y", "Y", 3, 0.2), act("X", "Y", 1, 0.01), act("W", "Y", 3, 0.3),
      act("X", "Z", 1, 0.01),
      coherent ? act("Y", "Z", 1, 0.01) : rep("Y", "Z", 1, 0.5),
      act("W", "W", 3, 0.2), rep("Y", "W", 3, 0.3)};
  return make(coherent ? "M27-30-coherent" : "M27-30-incoherent",
              std::string("oscillator circuit combined with a ") +
                  (coherent ? "coherent" : "incoherent") + " FFL through the intermediate node",
              {"X", "Y", "Z", "W"}, std::move(edges), {0.01, 0.3, 0.01, 1.0});
}

CatalogEntry s_model(bool coherent) {
  // X is a step input held at X_f = 1, folded into the constants.
  const double xf = 1.0;
  std::vector<TopologyEdge> edges = {coherent ? act("Y", "Z", 1, 0.01) : rep("Y", "Z", 1, 1.0)};
  return make(coherent ? "S1-S2" : "S3-S4",
              std::string(coherent ? "coherent" : "incoherent") +
                  " FFL with step input X_f = 1, reduced to Y and Z",
              {"Y", "Z"}, std::move(edges), {0.0, 0.0}, {xf, xf});
}

const std::map<std::string, std::function<CatalogEntry()>>& builders() {
  static const std::map<std::string, std::function<CatalogEntry()>> table = [] {
    std::map<std::string, std::function<CatalogEntry()>> t;
    t["M3"] = [] {
      CatalogEntry e;
      e.id = "M3";
      e.description = "positive self-loop";
      e.model = self_loop_circuit(3, 0.3);
      e.initial = {0.5};
      return e;
    };
    t["M4-5"] = [] {
      return make("M4-5", "toggle switch", {"X", "Y"},
                  {rep("Y", "X", 3, 0.3), rep("X", "Y", 3, 0.3)}, {0.6, 0.1});
    };
    t["M6-7"] = [] {
      return make("M6-7", "lock-ON circuit", {"X", "Y"},
                  {act("Y", "X", 3, 0.3), act("X", "Y", 3, 0.3)}, {0.5, 0.5});
    };
    t["M8-9"] = [] {
      return make("M8-9", "oscillator feedback circuit", {"X", "Y"},
                  {act("Y", "X", 3, 0.3), rep("X", "Y", 3, 0.3)}, {0.1, 0.2});
    };
    t["M10-11"] = [] {
      return make("M10-11", "toggle switch with positive self-loops", {"X", "Y"},
                  {act("X", "X", 3, 0.3), rep("Y", "X", 3, 0.3), act("Y", "Y", 3, 0.3),
                   rep("X", "Y", 3, 0.3)},
                  {0.6, 0.1});
    };
    t["M12-13"] = [] {
      return make("M12-13", "oscillator circuit with positive self-loops", {"X", "Y"},
                  {act("X", "X", 3, 0.2), act("Y", "X", 3, 0.3), act("Y", "Y", 3, 0.2),
                   rep("X", "Y", 3, 0.3)},
                  {0.1, 0.2});
    };
    t["M14-16"] = coherent_ffl;
    for (const char* v : {"X", "Y", "Z"}) {
      const std::string var = v;
      t["M14-16-sl" + var] = [var] {
        CatalogEntry e = with_self_loop(coherent_ffl(), var, 3, 0.3, "-sl" + var);
        e.initial = {0.5, 0.185, 0.19};
        return e;
      };
    }
    t["M17-19"] = incoherent_ffl;
    for (const char* v : {"X", "Y", "Z"}) {
      const std::string var = v;
      t["M17-19-sl" + var] = [var] {
        const double k = var == "Z" ? 0.15 : 0.3;
        CatalogEntry e = with_self_loop(incoherent_ffl(), var, 3, k, "-sl" + var);
        e.initial = {0.5, 0.185, 0.19};
        return e;
      };
    }
    t["M20-22"] = [] {
      return make("M20-22", "two oscillator circuits sharing Y (first combination)",
                  {"X", "Y", "Z"},
                  {act("X", "X", 3, 0.2), act("Y", "X", 3, 0.3), act("Y", "Y", 3, 0.2),
                   rep("X", "Y", 3, 0.3), act("Z", "Y", 3, 0.3), act("Z", "Z", 3, 0.2),
                   rep("Y", "Z", 3, 0.3)},
                  {0.1, 0.2, 0.2});
    };
    t["M22-24"] = [] {
      return make("M22-24", "two oscillator circuits sharing Y (second combination)",
                  {"X", "Y", "Z"},
                  {act("X", "X", 3, 0.2), act("Y", "X", 3, 0.3), act("Y", "Y", 3, 0.2),
                   rep("X", "Y", 3, 0.3), rep("Z", "Y", 3, 0.3), act("Z", "Z", 3, 0.2),
                   act("Y", "Z", 3, 0.3)},
                  {0.1, 0.2, 0.2});
    };
    t["M25-27"] = [] {
      return make("M25-27", "two oscillator circuits sharing Y (third combination)",
                  {"X", "Y", "Z"},
                  {act("X", "X", 3, 0.2), rep("Y", "X", 3, 0.3), act("Y", "Y", 3, 0.2),
                   act("X", "Y", 3, 0.3), act("Z", "Y", 3, 0.3), act("Z", "Z", 3, 0.2),
                   rep("Y", "Z", 3, 0.3)},
                  {0.1, 0.2, 0.2});
    };
    t["M27-30-coherent"] = [] { return oscillator_ffl(true); };
    t["M27-30-incoherent"] = [] { return oscillator_ffl(false); };
    t["M31-34"] = [] {
      return make("M31-34", "two oscillator circuits interacting as a toggle switch (option 1)",
                  {"X", "Y", "U", "V"},
                  {act("X", "X", 3, 0.2), rep("Y", "X", 3, 0.3), rep("V", "X", 1, 0.01),
                   act("Y", "Y", 3, 0.2), act("X", "Y", 3, 0.3),
                   act("U", "U", 3, 0.2), rep("Y", "U", 1, 0.01), rep("V", "U", 3, 0.3),
                   act("V", "V", 3, 0.2), act("U", "V", 3, 0.3)},
                  {0.5, 0.5, 0.1, 0.1});
    };
    t["M35-38"] = [] {
      return make("M35-38", "two oscillator circuits interacting as a toggle switch (option 2)",
                  {"X", "Y", "U", "V"},
                  {act("X", "X", 3, 0.2), rep("Y", "X", 3, 0.3),
                   act("Y", "Y", 3, 0.2), act("X", "Y", 3, 0.3), rep("U", "Y", 1, 0.01),
                   act("U", "U", 3, 0.2), rep("V", "U", 3, 0.3),
                   act("V", "V", 3, 0.2), act("U", "V", 3, 0.3), rep("X", "V", 1, 0.01)},
                  {0.5, 0.5, 0.1, 0.1});
    };
    t["M39-42"] = [] {
      return make("M39-42", "two oscillator circuits interacting as a lock-ON circuit (option 1)",
                  {"X", "Y", "U", "V"},
                  {act("X", "X", 3, 0.2), rep("Y", "X", 3, 0.3),
                   act("Y", "Y", 3, 0.2), act("X", "Y", 3, 0.3), act("U", "Y", 1, 0.01),
                   act("U", "U", 3, 0.2), rep("V", "U", 3, 0.3),
                   act("V", "V", 3, 0.2), act("U", "V", 3, 0.3), act("X", "V", 1, 0.01)},
                  {0.5, 0.5, 0.1, 0.1});
    };
    t["M43-46"] = [] {
      return make("M43-46", "two oscillator circuits interacting as a lock-ON circuit (option 2)",
                  {"X", "Y", "U", "V"},
                  {act("X", "X", 3, 0.2), rep("Y", "X", 3, 0.3), act("V", "X", 1, 0.01),
                   act("Y", "Y", 3, 0.2), act("X", "Y", 3, 0.3),
                   act("U", "U", 3, 0.2), act("Y", "U", 1, 0.01), rep("V", "U", 3, 0.3),
                   act("V", "V", 3, 0.2), act("U", "V", 3, 0.3)},
                  {0.5, 0.5, 0.1, 0.1});
    };
    t["M47-51"] = [] {
      return make("M47-51", "coherent FFL interacting with a toggle switch",
                  {"X", "Y", "Z", "U", "V"},
                  {act("V", "X", 1, 0.01), act("X", "Y", 1, 0.01), act("Y", "Z", 1, 0.01),
                   act("X", "Z", 1, 0.01), act("U", "U", 1, 0.3), act("Z", "U", 1, 0.01),
                   rep("V", "U", 3, 0.3), act("V", "V", 1, 0.3), rep("U", "V", 3, 0.3)},
                  {0.1, 0.1, 0.1, 0.1, 0.5});
    };
    t["M52-57"] = [] {
      return make("M52-57", "coherent and incoherent FFLs interacting", {"X", "Y", "Z", "W", "V", "U"},
                  {act("U", "X", 1, 0.01), act("X", "Y", 1, 0.01), rep("Y", "Z", 1, 0.01),
                   act("X", "Z", 1, 0.01), rep("Z", "W", 1, 0.01), act("W", "V", 1, 70.8),
                   act("V", "U", 1, 13.4), act("W", "U", 1, 55.9)},
                  {0.1, 0.1, 0.1, 0.1, 0.1, 0.1});
    };
    t["M58-61"] = [] {
      return make("M58-61", "two double mutual feedback circuits, all positive",
                  {"X", "Y", "Z", "W"},
                  {act("W", "X", 3, 0.01), act("Y", "X", 3, 0.01), act("Z", "Y", 3, 0.01),
                   act("X", "Y", 3, 0.01), act("X", "Z", 3, 0.01), act("Y", "Z", 3, 0.01),
                   act("W", "Z", 3, 3.38), act("X", "W", 3, 0.01), act("Z", "W", 3, 0.16)},
                  {0.5, 0.5, 0.5, 0.5});
    };
    t["M62-65"] = [] {
      return make("M62-65", "two double mutual feedback circuits, X inhibits Z",
                  {"X", "Y", "Z", "W"},
                  {act("W", "X", 3, 0.01), act("Y", "X", 3, 1.87), act("Z", "Y", 3, 0.01),
                   act("X", "Y", 3, 0.01), rep("X", "Z", 3, 0.01), act("Y", "Z", 3, 0.01),
                   act("W", "Z", 3, 0.01), act("X", "W", 3, 0.01), act("Z", "W", 3, 0.01)},
                  {0.5, 0.5, 0.5, 0.5});
    };
    // The two loops of M62-65 differ only in k_yx; the loop without it
    // (X, W, Z) is the one that does not oscillate on its own.
    t["M62-65-isolated"] = [] {
      return make("M62-65-isolated", "X, W, Z double mutual feedback of M62-65 without Y",
                  {"X", "W", "Z"},
                  {act("W", "X", 3, 0.01), rep("X", "Z", 3, 0.01), act("W", "Z", 3, 0.01),
                   act("X", "W", 3, 0.01), act("Z", "W", 3, 0.01)},
                  {0.5, 0.5, 0.5});
    };
    t["M62-65-isolated-XYZ"] = [] {
      return make("M62-65-isolated-XYZ", "X, Y, Z double mutual feedback of M62-65 without W",
                  {"X", "Y", "Z"},
                  {act("Y", "X", 3, 1.87), act("Z", "Y", 3, 0.01), act("X", "Y", 3, 0.01),
                   rep("X", "Z", 3, 0.01), act("Y", "Z", 3, 0.01)},
                  {0.5, 0.5, 0.5});
    };
    t["M66-69"] = [] {
      return make("M66-69", "two 3-node loops sharing X->Y, Y inhibits Z",
                  {"X", "Y", "Z", "W"},
                  {act("W", "X", 3, 0.01), act("Z", "X", 3, 4.7), act("X", "Y", 3, 0.01),
                   rep("Y", "Z", 3, 0.01), act("Y", "W", 3, 0.01)},
                  {0.5, 0.5, 0.5, 0.5});
    };
    t["M66-69-isolated"] = [] {
      return make("M66-69-isolated", "all-positive 3-node loop X->Y->W->X of M66-69",
                  {"X", "Y", "W"},
                  {act("W", "X", 3, 0.01), act("X", "Y", 3, 0.01), act("Y", "W", 3, 0.01)},
                  {0.5, 0.5, 0.5});
    };
    t["S1-S2"] = [] { return s_model(true); };
    t["S3-S4"] = [] { return s_model(false); };
    for (const char* v : {"Y", "Z"}) {
      const std::string var = v;
      t["S1-S2-sl" + var] = [var] { return with_self_loop(s_model(true), var, 3, 0.3, "-sl" + var); };
      t["S3-S4-sl" + var] = [var] { return with_self_loop(s_model(false), var, 3, 0.25, "-sl" + var); };
    }
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  static const std::vector<std::string> order = {
      "M3", "M4-5", "M6-7", "M8-9", "M10-11", "M12-13",
      "M14-16", "M14-16-slX", "M14-16-slY", "M14-16-slZ",
      "M17-19", "M17-19-slX", "M17-19-slY", "M17-19-slZ",
      "M20-22", "M22-24", "M25-27", "M27-30-coherent", "M27-30-incoherent",
      "M31-34", "M35-38", "M39-42", "M43-46", "M47-51", "M52-57",
      "M58-61", "M62-65", "M62-65-isolated", "M62-65-isolated-XYZ", "M66-69", "M66-69-isolated",
      "S1-S2", "S1-S2-slY", "S1-S2-slZ", "S3-S4", "S3-S4-slY", "S3-S4-slZ"};
  return order;
}

CatalogEntry catalog_entry(const std::string& id) {
  const auto& table = builders();
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown model id '" + id + "'");
  return it->second();
}

CircuitModel circuit_library(const std::string& id) { return catalog_entry(id).model; }

CircuitModel self_loop_circuit(double n, double k) {
  return build_circuit(Topology{{"X"}, {TopologyEdge{"X", "X", true, n, k}}, {}}, "M3");
}

CircuitModel with_uniform_hill(CircuitModel model, double n, double k) {
  if (n >= 0.0 && n < 1.0) throw std::invalid_argument("cooperativity n must be >= 1");
  if (k == 0.0) throw std::invalid_argument("half-max k must be positive");
  for (Production& p : model.production) {
    for (HillFactor& f : p.factors) {
      if (n >= 0.0) f.n = n;
      if (k > 0.0) f.k = k;
    }
  }
  return model;
}

}  // namespace hypermotif
