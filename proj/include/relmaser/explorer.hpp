// Parameter-space exploration: Monte Carlo clouds in the efficiency-power
// plane, their upper frontier, efficiency-power curves, and grid scans of
// power and operation mode. Evaluation is embarrassingly parallel and
// deterministic: every sample or cell depends only on its index.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relmaser/thermo.hpp"

namespace relmaser {

// One Monte Carlo ensemble: frequencies are drawn uniformly from the given
// ranges, everything else is held fixed.
struct SampleSpec {
    std::size_t n_samples = 100000;
    double omega_c_lo = 0.01, omega_c_hi = 5.0;
    double omega_h_lo = 0.01, omega_h_hi = 10.0;
    double beta_h = 0.4, beta_c = 0.8;
    double u_h = 0.0, u_c = 0.0;
    double gamma_h = 1.0, gamma_c = 1.0, xi = 1.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct CloudPoint {
    double omega_c;
    double omega_h;
    double power;
    double efficiency;  // 1 - omega_c/omega_h; equals power/q_hot off the inert set
    OpMode mode;
};

// Draws (omega_c, omega_h) keyed by (seed, sample index) and evaluates the
// steady-state performance of each configuration. Identical (spec, seed)
// give bitwise-identical clouds for any worker count.
std::vector<CloudPoint> sample_cloud(const SampleSpec& spec, unsigned n_threads = 1);

// Upper frontier of the engine-mode points in the (power, efficiency)
// plane: the upper chain of their convex hull, ordered by increasing
// power. The intercept estimate is the efficiency of the smallest-power
// chain vertex; the extrapolated variant continues the first chain segment
// linearly to power = 0.
struct Frontier {
    std::vector<std::pair<double, double>> chain;  // (power, efficiency)
    double eta_intercept;
    double eta_intercept_extrapolated;
};

// Throws std::invalid_argument when fewer than three engine-mode points
// are supplied.
Frontier upper_frontier(const std::vector<CloudPoint>& points);

// One point of an efficiency-power curve at fixed bath parameters.
struct CurvePoint {
    double omega_c;
    double efficiency;
    double power;
};

enum class CurveModel { Asymptotic, Full };

// Extra knobs used by the full-model curve; the asymptotic curve only
// needs (tau, u, gamma).
struct CurveConfig {
    double tau = 0.5;
    double u = 1.0;
    double omega_h = 1.0;
    double gamma = 1.0;
    CurveModel model = CurveModel::Asymptotic;
    std::size_t n_points = 400;
    double beta_h = 1e-4;  // full model: hot inverse temperature
    double xi = 1e3;       // full model: drive coupling
};

// Sweeps omega_c over (0, omega_h] on a uniform grid. The zero-power
// endpoint efficiency of the asymptotic curve approaches
// 1 - tau u / sinh(u) within one grid step.
std::vector<CurvePoint> eta_power_curve(const CurveConfig& cfg);

// Rectangular scan; cells are stored row-major over (y, x).
struct ScanGrid {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> power;  // ys.size() * xs.size()
    std::vector<OpMode> mode;

    std::size_t index(std::size_t iy, std::size_t ix) const { return iy * xs.size() + ix; }
};

// Power and mode over the (u_h, u_c) plane at fixed frequencies and
// temperatures. x axis is u_h, y axis is u_c.
ScanGrid power_grid(double u_h_lo, double u_h_hi, double u_c_lo, double u_c_hi,
                    std::size_t nx, std::size_t ny, const EngineConfig& base,
                    unsigned n_threads = 1);

// Mode map over the (omega_c, omega_h) plane at fixed baths. x axis is
// omega_c, y axis is omega_h.
ScanGrid mode_map(double omega_c_lo, double omega_c_hi,
                  double omega_h_lo, double omega_h_hi,
                  std::size_t nx, std::size_t ny, const EngineConfig& base,
                  unsigned n_threads = 1);

}  // namespace relmaser
