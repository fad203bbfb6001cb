// Steady-state thermodynamics: heat fluxes, power, efficiency and the
// operation-mode classification.
//
// Sign convention: heat absorbed from the hot bath, heat released to the
// cold bath, and extracted power are all positive. All three fluxes share
// the factor 2 xi Im(rho_re), so
//
//   Q_hot  = 2 xi Im(coh) * omega_h
//   P      = 2 xi Im(coh) * (omega_h - omega_c)
//   Q_cold = 2 xi Im(coh) * omega_c = Q_hot - P
//
// and the engine efficiency P / Q_hot reduces to 1 - omega_c / omega_h
// whenever Q_hot is nonzero, independent of bath motion.
#pragma once

#include <optional>
#include <string>

#include "relmaser/dynamics.hpp"

namespace relmaser {

enum class OpMode { Engine, Refrigerator, Dissipator };

const char* to_string(OpMode mode);

struct Performance {
    double power;    // > 0 when work is extracted
    double q_hot;    // > 0 when heat flows out of the hot bath
    double q_cold;   // > 0 when heat flows into the cold bath
    std::optional<double> efficiency;  // power / q_hot, absent when q_hot == 0
    OpMode mode;
};

// Engine: power and hot influx both positive. Refrigerator: power negative
// and heat drawn out of the cold bath (q_cold negative under the sign
// convention above). Everything else, including the inert boundary, is a
// Dissipator. Tolerance 1e-14 relative to the largest flux guards against
// classifying rounding noise.
OpMode classify_mode(double power, double q_hot, double q_cold);

// Full observable set at the steady state, via the closed-form coherence.
Performance performance(const EngineConfig& cfg);

// Same observables from an externally supplied steady state (used to run
// the Liouvillian oracle end to end).
Performance performance_from_state(const EngineConfig& cfg, const SteadyState& state);

// Power in the compact form
//   4 (N_h - N_c) G_h G_c xi^2 (omega_h - omega_c) / (4 xi^2 B + C D G_c G_h),
//   B = G_h (3N_h+1) + G_c (3N_c+1),
//   C = 3 N_h N_c + 2 N_h + 2 N_c + 1,
//   D = G_h (N_h+1) + G_c (N_c+1).
// Algebraically identical to performance().power.
double compact_power(const EngineConfig& cfg);

}  // namespace relmaser
