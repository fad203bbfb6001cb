#include "relmaser/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "relmaser/bounds.hpp"
#include "relmaser/rng.hpp"

namespace relmaser {

namespace {

// Runs fn(i) for i in [0, n) across n_threads workers in fixed chunks.
// fn must only write to slot i, which keeps the result order-independent.
void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t)>& fn) {
    if (n_threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = std::min<unsigned>(n_threads, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

void SampleSpec::validate() const {
    if (n_samples < 1) throw std::domain_error("SampleSpec: n_samples must be >= 1");
    if (!(omega_c_lo > 0.0) || !(omega_c_hi >= omega_c_lo))
        throw std::domain_error("SampleSpec: bad omega_c range");
    if (!(omega_h_lo > 0.0) || !(omega_h_hi >= omega_h_lo))
        throw std::domain_error("SampleSpec: bad omega_h range");
    EngineConfig probe{omega_h_lo, omega_c_lo, xi,
                       BathParams{beta_h, u_h, gamma_h},
                       BathParams{beta_c, u_c, gamma_c}};
    probe.validate();
}

std::vector<CloudPoint> sample_cloud(const SampleSpec& spec, unsigned n_threads) {
    spec.validate();
    std::vector<CloudPoint> cloud(spec.n_samples);
    parallel_for(spec.n_samples, n_threads, [&](std::size_t i) {
        EngineConfig cfg;
        cfg.omega_c = counter_uniform_in(spec.omega_c_lo, spec.omega_c_hi,
                                         spec.seed, 2 * i);
        cfg.omega_h = counter_uniform_in(spec.omega_h_lo, spec.omega_h_hi,
                                         spec.seed, 2 * i + 1);
        cfg.xi = spec.xi;
        cfg.hot = {spec.beta_h, spec.u_h, spec.gamma_h};
        cfg.cold = {spec.beta_c, spec.u_c, spec.gamma_c};
        const Performance perf = performance(cfg);
        cloud[i] = {cfg.omega_c, cfg.omega_h, perf.power,
                    1.0 - cfg.omega_c / cfg.omega_h, perf.mode};
    });
    return cloud;
}

Frontier upper_frontier(const std::vector<CloudPoint>& points) {
    std::vector<std::pair<double, double>> pts;  // (power, efficiency)
    for (const auto& p : points)
        if (p.mode == OpMode::Engine) pts.emplace_back(p.power, p.efficiency);
    if (pts.size() < 3)
        throw std::invalid_argument("upper_frontier: need at least 3 engine-mode points");

    std::sort(pts.begin(), pts.end());
    auto cross = [](const std::pair<double, double>& o,
                    const std::pair<double, double>& a,
                    const std::pair<double, double>& b) {
        return (a.first - o.first) * (b.second - o.second)
             - (a.second - o.second) * (b.first - o.first);
    };

    // Monotone chain, upper hull: walk left to right keeping right turns.
    std::vector<std::pair<double, double>> chain;
    for (const auto& p : pts) {
        while (chain.size() >= 2 &&
               cross(chain[chain.size() - 2], chain.back(), p) >= 0.0)
            chain.pop_back();
        chain.push_back(p);
    }

    Frontier out;
    out.chain = std::move(chain);
    // The chain may rise from a low-efficiency near-zero-power vertex before
    // reaching the trade-off branch; the P -> 0 intercept lives at the apex,
    // the smallest-power vertex of the non-increasing part.
    std::size_t apex = 0;
    for (std::size_t i = 1; i < out.chain.size(); ++i)
        if (out.chain[i].second > out.chain[apex].second) apex = i;
    out.eta_intercept = out.chain[apex].second;
    if (apex + 1 < out.chain.size()) {
        const auto& [p0, e0] = out.chain[apex];
        const auto& [p1, e1] = out.chain[apex + 1];
        out.eta_intercept_extrapolated =
            (p1 != p0) ? e0 - p0 * (e1 - e0) / (p1 - p0) : e0;
    } else {
        out.eta_intercept_extrapolated = out.eta_intercept;
    }
    return out;
}

std::vector<CurvePoint> eta_power_curve(const CurveConfig& cfg) {
    if (cfg.n_points < 2)
        throw std::domain_error("eta_power_curve: need at least 2 points");
    std::vector<CurvePoint> curve(cfg.n_points);
    for (std::size_t k = 0; k < cfg.n_points; ++k) {
        const double omega_c = cfg.omega_h * static_cast<double>(k + 1)
                             / static_cast<double>(cfg.n_points);
        double power;
        if (cfg.model == CurveModel::Asymptotic) {
            power = asymptotic_power(cfg.gamma, cfg.tau, cfg.u, cfg.omega_h, omega_c);
        } else {
            EngineConfig full;
            full.omega_h = cfg.omega_h;
            full.omega_c = omega_c;
            full.xi = cfg.xi;
            full.hot = {cfg.beta_h, 0.0, cfg.gamma};
            full.cold = {cfg.beta_h / cfg.tau, cfg.u, cfg.gamma};
            power = performance(full).power;
        }
        curve[k] = {omega_c, 1.0 - omega_c / cfg.omega_h, power};
    }
    return curve;
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

}  // namespace

ScanGrid power_grid(double u_h_lo, double u_h_hi, double u_c_lo, double u_c_hi,
                    std::size_t nx, std::size_t ny, const EngineConfig& base,
                    unsigned n_threads) {
    if (nx < 1 || ny < 1 || !(u_h_hi >= u_h_lo) || !(u_c_hi >= u_c_lo))
        throw std::domain_error("power_grid: bad grid spec");
    base.validate();
    ScanGrid grid;
    grid.xs = linspace(u_h_lo, u_h_hi, nx);
    grid.ys = linspace(u_c_lo, u_c_hi, ny);
    grid.power.resize(nx * ny);
    grid.mode.resize(nx * ny);
    parallel_for(ny, n_threads, [&](std::size_t iy) {
        EngineConfig cfg = base;
        cfg.cold.u = grid.ys[iy];
        for (std::size_t ix = 0; ix < nx; ++ix) {
            cfg.hot.u = grid.xs[ix];
            const Performance perf = performance(cfg);
            grid.power[grid.index(iy, ix)] = perf.power;
            grid.mode[grid.index(iy, ix)] = perf.mode;
        }
    });
    return grid;
}

ScanGrid mode_map(double omega_c_lo, double omega_c_hi,
                  double omega_h_lo, double omega_h_hi,
                  std::size_t nx, std::size_t ny, const EngineConfig& base,
                  unsigned n_threads) {
    if (nx < 1 || ny < 1 || !(omega_c_hi >= omega_c_lo) || !(omega_h_hi >= omega_h_lo)
        || !(omega_c_lo > 0.0) || !(omega_h_lo > 0.0))
        throw std::domain_error("mode_map: bad grid spec");
    base.validate();
    ScanGrid grid;
    grid.xs = linspace(omega_c_lo, omega_c_hi, nx);
    grid.ys = linspace(omega_h_lo, omega_h_hi, ny);
    grid.power.resize(nx * ny);
    grid.mode.resize(nx * ny);
    parallel_for(ny, n_threads, [&](std::size_t iy) {
        EngineConfig cfg = base;
        cfg.omega_h = grid.ys[iy];
        for (std::size_t ix = 0; ix < nx; ++ix) {
            cfg.omega_c = grid.xs[ix];
            const Performance perf = performance(cfg);
            grid.power[grid.index(iy, ix)] = perf.power;
            grid.mode[grid.index(iy, ix)] = perf.mode;
        }
    });
    return grid;
}

}  // namespace relmaser
