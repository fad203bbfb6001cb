#include "relmaser/thermo.hpp"

#include <algorithm>
#include <cmath>

namespace relmaser {

const char* to_string(OpMode mode) {
    switch (mode) {
        case OpMode::Engine: return "Engine";
        case OpMode::Refrigerator: return "Refrigerator";
        case OpMode::Dissipator: return "Dissipator";
    }
    return "Dissipator";
}

OpMode classify_mode(double power, double q_hot, double q_cold) {
    const double scale = std::max({std::abs(power), std::abs(q_hot), std::abs(q_cold)});
    const double tol = 1e-14 * scale;
    if (power > tol && q_hot > tol) return OpMode::Engine;
    if (power < -tol && q_cold < -tol) return OpMode::Refrigerator;
    return OpMode::Dissipator;
}

namespace {

Performance performance_from_coherence(const EngineConfig& cfg,
                                       const std::complex<double>& coh) {
    const double flux = 2.0 * cfg.xi * coh.imag();
    Performance perf;
    perf.power = flux * (cfg.omega_h - cfg.omega_c);
    perf.q_hot = flux * cfg.omega_h;
    perf.q_cold = flux * cfg.omega_c;
    if (perf.q_hot != 0.0) perf.efficiency = perf.power / perf.q_hot;
    perf.mode = classify_mode(perf.power, perf.q_hot, perf.q_cold);
    return perf;
}

}  // namespace

Performance performance(const EngineConfig& cfg) {
    return performance_from_coherence(cfg, closed_form_coherence(cfg));
}

Performance performance_from_state(const EngineConfig& cfg, const SteadyState& state) {
    cfg.validate();
    return performance_from_coherence(cfg, state.coherence);
}

double compact_power(const EngineConfig& cfg) {
    cfg.validate();
    const auto [nh, nc] = occupations(cfg);
    const double gh = cfg.hot.gamma, gc = cfg.cold.gamma, xi = cfg.xi;
    const double b = gh * (3.0 * nh + 1.0) + gc * (3.0 * nc + 1.0);
    const double c = 3.0 * nh * nc + 2.0 * nh + 2.0 * nc + 1.0;
    const double d = gh * (nh + 1.0) + gc * (nc + 1.0);
    return 4.0 * (nh - nc) * gh * gc * xi * xi * (cfg.omega_h - cfg.omega_c)
         / (4.0 * xi * xi * b + c * d * gc * gh);
}

}  // namespace relmaser
