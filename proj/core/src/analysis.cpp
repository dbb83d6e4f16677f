#include "hypermotif/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace hypermotif {

std::string to_string(Stability s) {
  switch (s) {
    case Stability::kStable: return "stable";
    case Stability::kUnstable: return "unstable";
    case Stability::kSaddle: return "saddle";
    case Stability::kSpiralStable: return "spiral-stable";
    case Stability::kSpiralUnstable: return "spiral-unstable";
    case Stability::kNonHyperbolic: return "non-hyperbolic";
  }
  return "unknown";
}

bool is_stable(Stability s) { return s == Stability::kStable || s == Stability::kSpiralStable; }

std::string to_string(SteadyState s) {
  switch (s) {
    case SteadyState::kOff: return "OFF";
    case SteadyState::kOn: return "ON";
    case SteadyState::kIntermediate: return "INTERMEDIATE";
    case SteadyState::kDampedOscillation: return "DAMPED_OSCILLATION";
    case SteadyState::kSustainedOscillation: return "SUSTAINED_OSCILLATION";
  }
  return "unknown";
}

std::string to_string(PhaseKind k) {
  switch (k) {
    case PhaseKind::kNone: return "none";
    case PhaseKind::kInPhase: return "in-phase";
    case PhaseKind::kAntiPhase: return "anti-phase";
  }
  return "unknown";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

MatrixXd to_eigen(const DenseMatrix& m) {
  MatrixXd out(m.n, m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::optional<std::vector<double>> newton(const CircuitModel& model, std::vector<double> x,
                                          const FixedPointSearch& s) {
  const int d = model.dimension();
  std::vector<double> f = rhs(model, x), trial(static_cast<std::size_t>(d)), ft;
  double norm = max_norm(f);
  for (int it = 0; it < s.max_iterations && norm > s.tolerance; ++it) {
    const MatrixXd j = to_eigen(jacobian(model, x));
    Eigen::FullPivLU<MatrixXd> lu(j);
    if (!lu.isInvertible()) return std::nullopt;
    VectorXd rhs_vec(d);
    for (int i = 0; i < d; ++i) rhs_vec(i) = -f[static_cast<std::size_t>(i)];
    const VectorXd dx = lu.solve(rhs_vec);
    if (!dx.allFinite()) return std::nullopt;
    double alpha = 1.0;
    bool improved = false;
    while (alpha > 1e-8) {
      for (int i = 0; i < d; ++i) trial[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + alpha * dx(i);
      rhs(model, trial, ft);
      const double tn = max_norm(ft);
      if (std::isfinite(tn) && tn < (1.0 - 1e-4 * alpha) * norm) {
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!improved) break;
    x = trial;
    f = ft;
    norm = max_norm(f);
  }
  if (!(norm < s.accept_residual)) return std::nullopt;
  for (double& v : x) {
    if (v < -1e-9) return std::nullopt;
    v = std::max(v, 0.0);
  }
  if (!(max_norm(rhs(model, x)) < s.accept_residual)) return std::nullopt;
  return x;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const DenseMatrix& m) {
  if (m.n == 0) return {};
  Eigen::EigenSolver<MatrixXd> solver(to_eigen(m), false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < m.n; ++i) out.push_back(solver.eigenvalues()(i));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

Stability classify_stability(const std::vector<std::complex<double>>& eig, double zero_real_part) {
  bool neg = false, pos = false, complex = false;
  for (const auto& e : eig) {
    if (std::abs(e.real()) <= zero_real_part) return Stability::kNonHyperbolic;
    (e.real() < 0 ? neg : pos) = true;
    if (std::abs(e.imag()) > zero_real_part) complex = true;
  }
  if (neg && pos) return Stability::kSaddle;
  if (pos) return complex ? Stability::kSpiralUnstable : Stability::kUnstable;
  return complex ? Stability::kSpiralStable : Stability::kStable;
}

std::vector<FixedPoint> find_fixed_points(const CircuitModel& model, const FixedPointSearch& search) {
  const int d = model.dimension();
  if (d == 0) return {};
  std::vector<double> upper(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) upper[static_cast<std::size_t>(i)] = std::max(model.max_production(i), 1e-3);

  std::vector<std::vector<double>> starts;
  if (d <= search.max_grid_dimension) {
    const int g = std::max(search.grid_per_axis, 2);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<double> p(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        p[static_cast<std::size_t>(i)] = upper[static_cast<std::size_t>(i)] * idx[static_cast<std::size_t>(i)] / (g - 1);
      }
      starts.push_back(std::move(p));
      int k = 0;
      while (k < d && ++idx[static_cast<std::size_t>(k)] == g) idx[static_cast<std::size_t>(k++)] = 0;
      if (k == d) break;
    }
  } else {
    std::mt19937_64 rng(search.rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < search.random_starts; ++s) {
      std::vector<double> p(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = upper[static_cast<std::size_t>(i)] * unit(rng);
      starts.push_back(std::move(p));
    }
  }

  std::vector<FixedPoint> found;
  for (const auto& start : starts) {
    auto root = newton(model, start, search);
    if (!root) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const FixedPoint& fp) {
      double dist = 0.0;
      for (int i = 0; i < d; ++i) {
        dist = std::max(dist, std::abs(fp.point[static_cast<std::size_t>(i)] - (*root)[static_cast<std::size_t>(i)]));
      }
      return dist < search.dedup_distance;
    });
    if (duplicate) continue;
    FixedPoint fp;
    fp.point = std::move(*root);
    fp.residual = max_norm(rhs(model, fp.point));
    fp.eigenvalues = eigenvalues(jacobian(model, fp.point));
    fp.stability = classify_stability(fp.eigenvalues, search.zero_real_part);
    found.push_back(std::move(fp));
  }
  std::sort(found.begin(), found.end(),
            [](const FixedPoint& a, const FixedPoint& b) { return a.point < b.point; });
  return found;
}

std::vector<std::size_t> find_peaks(const std::vector<double>& values, std::size_t begin,
                                    double min_amplitude) {
  std::vector<std::size_t> peaks;
  if (values.size() < 3 || begin >= values.size()) return peaks;
  double trough = values[begin];
  std::size_t i = std::max<std::size_t>(begin, 1);
  while (i + 1 < values.size()) {
    trough = std::min(trough, values[i]);
    if (values[i] > values[i - 1]) {
      // Walk across a plateau before deciding.
      std::size_t j = i;
      while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
      if (j + 1 < values.size() && values[j + 1] < values[i] && values[i] - trough > min_amplitude) {
        peaks.push_back(i);
        trough = values[i];
      }
      i = j + 1;
      continue;
    }
    ++i;
  }
  return peaks;
}

namespace {

// Peak height above the lowest value since the previous peak (or `begin`).
std::vector<double> peak_amplitudes(const std::vector<double>& v, std::size_t begin,
                                    const std::vector<std::size_t>& peaks) {
  std::vector<double> out;
  std::size_t from = begin;
  for (std::size_t p : peaks) {
    const double lo = *std::min_element(v.begin() + static_cast<std::ptrdiff_t>(from),
                                        v.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    out.push_back(v[p] - lo);
    from = p;
  }
  return out;
}

std::size_t window_start(const Trajectory& traj, const ClassifyConfig& cfg) {
  if (traj.size() < 2) throw std::invalid_argument("trajectory is too short to classify");
  const double cut = traj.times.back() * cfg.transient_fraction;
  const auto it = std::lower_bound(traj.times.begin(), traj.times.end(), cut);
  const auto start = static_cast<std::size_t>(it - traj.times.begin());
  if (traj.size() - start < cfg.min_window_samples) {
    throw std::invalid_argument(fmt::format(
        "horizon too short: {} samples after the transient, need {}", traj.size() - start,
        cfg.min_window_samples));
  }
  return start;
}

}  // namespace

SteadyStateClass classify_steady_state(const Trajectory& traj, const std::vector<double>& max_production,
                                       const ClassifyConfig& cfg) {
  const std::size_t start = window_start(traj, cfg);
  SteadyStateClass out;
  bool any_sustained = false, any_damped = false, all_off = true, any_on = false;
  for (std::size_t v = 0; v < traj.variables.size(); ++v) {
    const std::vector<double> s = traj.series(static_cast<int>(v));
    VariableState vs;
    vs.variable = traj.variables[v];
    vs.final_value = s.back();

    const auto post = find_peaks(s, start, cfg.min_amplitude);
    const auto post_amp = peak_amplitudes(s, start, post);
    bool sustained = false;
    if (static_cast<int>(post.size()) >= cfg.min_peaks) {
      // The first window peak's trough is truncated by the window, so the
      // decay is measured from the second peak on.
      const double ref = post_amp[1];
      sustained = ref > 0.0 && post_amp.back() / ref >= cfg.decay_ratio;
    }
    if (sustained) {
      vs.state = SteadyState::kSustainedOscillation;
      vs.amplitude = post_amp.back();
      vs.peaks = static_cast<int>(post.size());
      any_sustained = true;
      all_off = false;
      out.variables.push_back(vs);
      continue;
    }
    const auto all = find_peaks(s, 0, cfg.min_amplitude);
    if (static_cast<int>(all.size()) >= cfg.min_peaks) {
      const auto amp = peak_amplitudes(s, 0, all);
      const double largest = *std::max_element(amp.begin(), amp.end());
      if (amp.back() < cfg.decay_ratio * largest) {
        vs.state = SteadyState::kDampedOscillation;
        vs.amplitude = post_amp.empty() ? 0.0 : post_amp.back();
        vs.peaks = static_cast<int>(all.size());
        any_damped = true;
        all_off = false;
        out.variables.push_back(vs);
        continue;
      }
    }
    const double post_max = *std::max_element(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    const double cap = v < max_production.size() ? max_production[v] : 1.0;
    if (post_max < cfg.off_threshold) {
      vs.state = SteadyState::kOff;
    } else if (vs.final_value >= cfg.on_fraction * cap) {
      vs.state = SteadyState::kOn;
      any_on = true;
      all_off = false;
    } else {
      vs.state = SteadyState::kIntermediate;
      all_off = false;
    }
    out.variables.push_back(vs);
  }
  if (any_sustained) {
    out.overall = SteadyState::kSustainedOscillation;
  } else if (any_damped) {
    out.overall = SteadyState::kDampedOscillation;
  } else if (all_off) {
    out.overall = SteadyState::kOff;
  } else if (any_on) {
    out.overall = SteadyState::kOn;
  } else {
    out.overall = SteadyState::kIntermediate;
  }
  return out;
}

SteadyStateClass classify_steady_state(const Trajectory& traj, const CircuitModel& model,
                                       const ClassifyConfig& cfg) {
  std::vector<double> cap;
  for (int i = 0; i < model.dimension(); ++i) cap.push_back(model.max_production(i));
  return classify_steady_state(traj, cap, cfg);
}

namespace {

struct CellSegment {
  int cell;
  Segment seg;
};

// Zero-level contour of f sampled on the grid (f[j * nx + i]).
std::vector<CellSegment> contour(const std::vector<double>& f, const PortraitGrid& g) {
  const double hx = (g.x_max - g.x_min) / (g.nx - 1);
  const double hy = (g.y_max - g.y_min) / (g.ny - 1);
  auto at = [&](int i, int j) { return f[static_cast<std::size_t>(j * g.nx + i)]; };
  std::vector<CellSegment> out;
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double x0 = g.x_min + i * hx, y0 = g.y_min + j * hy;
      // Corners counter-clockwise from the lower left.
      const std::array<double, 4> v = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const std::array<std::array<double, 2>, 4> c = {
          {{x0, y0}, {x0 + hx, y0}, {x0 + hx, y0 + hy}, {x0, y0 + hy}}};
      std::array<std::array<double, 2>, 4> cross{};
      std::array<bool, 4> has{};
      int count = 0;
      for (int e = 0; e < 4; ++e) {
        const int a = e, b = (e + 1) % 4;
        if ((v[a] >= 0.0) == (v[b] >= 0.0)) continue;
        const double t = v[a] / (v[a] - v[b]);
        cross[e] = {c[a][0] + t * (c[b][0] - c[a][0]), c[a][1] + t * (c[b][1] - c[a][1])};
        has[e] = true;
        ++count;
      }
      const int cell = j * (g.nx - 1) + i;
      auto emit = [&](int e1, int e2) {
        out.push_back({cell, Segment{cross[e1][0], cross[e1][1], cross[e2][0], cross[e2][1]}});
      };
      if (count == 2) {
        int first = -1;
        for (int e = 0; e < 4; ++e) {
          if (!has[e]) continue;
          if (first < 0) {
            first = e;
          } else {
            emit(first, e);
          }
        }
      } else if (count == 4) {
        const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        if ((centre >= 0.0) == (v[0] >= 0.0)) {
          emit(0, 1);  // around corner 1
          emit(2, 3);  // around corner 3
        } else {
          emit(3, 0);
          emit(1, 2);
        }
      }
    }
  }
  return out;
}

std::optional<std::array<double, 2>> intersect(const Segment& a, const Segment& b) {
  const double rx = a.x1 - a.x0, ry = a.y1 - a.y0;
  const double sx = b.x1 - b.x0, sy = b.y1 - b.y0;
  const double denom = rx * sy - ry * sx;
  const double scale = std::max({std::abs(rx), std::abs(ry), std::abs(sx), std::abs(sy), 1e-300});
  const double qx = b.x0 - a.x0, qy = b.y0 - a.y0;
  if (std::abs(denom) <= 1e-12 * scale * scale) {
    // Parallel; report a shared endpoint (contours meeting at a grid node).
    for (const auto& p : {std::array<double, 2>{b.x0, b.y0}, std::array<double, 2>{b.x1, b.y1}}) {
      for (const auto& q : {std::array<double, 2>{a.x0, a.y0}, std::array<double, 2>{a.x1, a.y1}}) {
        if (std::abs(p[0] - q[0]) <= 1e-12 * scale && std::abs(p[1] - q[1]) <= 1e-12 * scale) return p;
      }
    }
    return std::nullopt;
  }
  const double t = (qx * sy - qy * sx) / denom;
  const double u = (qx * ry - qy * rx) / denom;
  constexpr double eps = 1e-9;
  if (t < -eps || t > 1.0 + eps || u < -eps || u > 1.0 + eps) return std::nullopt;
  return std::array<double, 2>{a.x0 + t * rx, a.y0 + t * ry};
}

}  // namespace

PhasePortrait phase_portrait(const CircuitModel& model, const PortraitGrid& grid) {
  if (model.dimension() != 2) {
    throw std::invalid_argument(
        fmt::format("phase portrait needs a 2-variable model, '{}' has {}", model.id, model.dimension()));
  }
  if (grid.nx < 2 || grid.ny < 2 || !(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min) ||
      !std::isfinite(grid.x_max - grid.x_min) || !std::isfinite(grid.y_max - grid.y_min)) {
    throw std::invalid_argument("degenerate phase-portrait grid");
  }
  PhasePortrait p;
  p.x_variable = model.variables[0];
  p.y_variable = model.variables[1];
  p.grid = grid;
  const double hx = (grid.x_max - grid.x_min) / (grid.nx - 1);
  const double hy = (grid.y_max - grid.y_min) / (grid.ny - 1);
  std::vector<double> fx, fy, d;
  fx.reserve(static_cast<std::size_t>(grid.nx * grid.ny));
  fy.reserve(fx.capacity());
  for (int j = 0; j < grid.ny; ++j) {
    const double y = j + 1 == grid.ny ? grid.y_max : grid.y_min + j * hy;
    for (int i = 0; i < grid.nx; ++i) {
      const double x = i + 1 == grid.nx ? grid.x_max : grid.x_min + i * hx;
      rhs(model, {x, y}, d);
      p.samples.push_back({x, y, d[0], d[1]});
      fx.push_back(d[0]);
      fy.push_back(d[1]);
    }
  }
  const auto cx = contour(fx, grid);
  const auto cy = contour(fy, grid);
  for (const auto& s : cx) p.x_nullcline.push_back(s.seg);
  for (const auto& s : cy) p.y_nullcline.push_back(s.seg);

  // Only segments in the same cell can meet.
  const double tol = std::max(hx, hy);
  std::size_t b = 0;
  for (std::size_t a = 0; a < cx.size(); ++a) {
    while (b < cy.size() && cy[b].cell < cx[a].cell) ++b;
    for (std::size_t k = b; k < cy.size() && cy[k].cell == cx[a].cell; ++k) {
      const auto hit = intersect(cx[a].seg, cy[k].seg);
      if (!hit) continue;
      const bool dup = std::any_of(p.intersections.begin(), p.intersections.end(), [&](const auto& q) {
        return std::abs(q[0] - (*hit)[0]) <= tol && std::abs(q[1] - (*hit)[1]) <= tol;
      });
      if (!dup) p.intersections.push_back(*hit);
    }
  }
  std::sort(p.intersections.begin(), p.intersections.end());
  return p;
}

void write_portrait_csv(const PhasePortrait& p, std::ostream& out) {
  out << p.x_variable << ',' << p.y_variable << ",d" << p.x_variable << ",d" << p.y_variable << '\n';
  for (const auto& s : p.samples) out << fmt::format("{:.10g},{:.10g},{:.10g},{:.10g}\n", s[0], s[1], s[2], s[3]);
}

void write_nullclines_csv(const PhasePortrait& p, std::ostream& out) {
  out << "nullcline,x0,y0,x1,y1\n";
  auto dump = [&](const std::string& name, const std::vector<Segment>& segs) {
    for (const auto& s : segs) out << fmt::format("{},{:.10g},{:.10g},{:.10g},{:.10g}\n", name, s.x0, s.y0, s.x1, s.y1);
  };
  dump("d" + p.x_variable, p.x_nullcline);
  dump("d" + p.y_variable, p.y_nullcline);
}

PulseMetrics pulse_metrics(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size() || times.empty()) {
    throw std::invalid_argument("times and values must be non-empty and of equal length");
  }
  PulseMetrics m;
  const auto peak = std::max_element(values.begin(), values.end());
  m.peak_value = *peak;
  m.peak_time = times[static_cast<std::size_t>(peak - values.begin())];
  const double final_value = values.back();

  // Time at which the linear interpolant between samples i-1 and i crosses level.
  auto crossing = [&](std::size_t i, double level) {
    const double v0 = values[i - 1], v1 = values[i];
    const double t = (level - v0) / (v1 - v0);
    return times[i - 1] + t * (times[i] - times[i - 1]);
  };

  const double half_peak = 0.5 * m.peak_value;
  if (m.peak_value > 0.0 && final_value < half_peak) {
    double width = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      const bool a = values[i - 1] >= half_peak, b = values[i] >= half_peak;
      const double dt = times[i] - times[i - 1];
      if (a && b) {
        width += dt;
      } else if (a != b) {
        const double tc = crossing(i, half_peak);
        width += a ? tc - times[i - 1] : times[i] - tc;
      }
    }
    m.pulse_width = width;
  }
  const double half_final = 0.5 * final_value;
  if (final_value > values.front() && values.front() < half_final) {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] >= half_final) {
        m.response_delay = crossing(i, half_final);
        break;
      }
    }
  }
  return m;
}

PulseMetrics pulse_metrics(const Trajectory& traj, int variable) {
  return pulse_metrics(traj.times, traj.series(variable));
}

PhaseRelation phase_relation(const Trajectory& a, const Trajectory& b, int variable_a, int variable_b,
                             const ClassifyConfig& cfg) {
  if (a.size() != b.size() || a.step != b.step || a.times != b.times) {
    throw std::invalid_argument("phase_relation needs trajectories on the same time grid");
  }
  const std::size_t start = window_start(a, cfg);
  const auto sa = a.series(variable_a);
  const auto sb = b.series(variable_b);
  const auto pa = find_peaks(sa, start, cfg.min_amplitude);
  const auto pb = find_peaks(sb, start, cfg.min_amplitude);
  if (static_cast<int>(pa.size()) < cfg.min_peaks || static_cast<int>(pb.size()) < cfg.min_peaks) {
    throw std::invalid_argument("phase_relation needs oscillating inputs");
  }
  PhaseRelation r;
  r.period = (a.times[pa.back()] - a.times[pa.front()]) / static_cast<double>(pa.size() - 1);

  const std::size_t n = sa.size() - start;
  const double ma = std::accumulate(sa.begin() + static_cast<std::ptrdiff_t>(start), sa.end(), 0.0) / n;
  const double mb = std::accumulate(sb.begin() + static_cast<std::ptrdiff_t>(start), sb.end(), 0.0) / n;
  const double dt = a.times[start + 1] - a.times[start];
  const auto max_lag = static_cast<std::size_t>(std::floor(r.period / dt));
  if (max_lag >= n) throw std::invalid_argument("post-transient window shorter than one period");
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_lag = 0;
  for (std::size_t lag = 0; lag < max_lag; ++lag) {
    double c = 0.0;
    for (std::size_t i = start; i + lag < sa.size(); ++i) c += (sa[i] - ma) * (sb[i + lag] - mb);
    c /= static_cast<double>(n - lag);
    if (c > best) {
      best = c;
      best_lag = lag;
    }
  }
  r.lag = static_cast<double>(best_lag) * dt;
  const double wrapped = std::min(r.lag, r.period - r.lag);
  if (std::abs(r.lag - 0.5 * r.period) < 0.1 * r.period) {
    r.relation = PhaseKind::kAntiPhase;
  } else if (wrapped < 0.1 * r.period) {
    r.relation = PhaseKind::kInPhase;
  }
  return r;
}

}  // namespace hypermotif
