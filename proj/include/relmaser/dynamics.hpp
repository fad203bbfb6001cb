// Steady state of the three-level maser in the rotating frame.
//
// Level scheme: ground |g>, intermediate |e>, excited |r>. The hot bath
// drives g <-> r at frequency omega_h, the cold bath g <-> e at omega_c,
// and a classical field of strength xi couples e <-> r. In the rotating
// frame the generator is
//
//   d rho/dt = -i [V, rho] + L_hot[rho] + L_cold[rho],
//   V = xi (|r><e| + |e><r|),
//
// with each bath contributing standard Lindblad dissipators
// Gamma (N+1) D[lower] + Gamma N D[raise], where N is the bath's
// relativistic occupation at its own transition frequency. With that
// normalization the stationary coherence has the closed form implemented
// in closed_form_coherence(); populations damp at Gamma (N+1) and the
// e-r coherence at half the summed rates.
//
// Three routes to the same state are provided: the closed form, a direct
// solve of the stationary linear system, and a vectorized-Liouvillian
// null-space computation that shares no algebra with the first two.
#pragma once

#include <complex>

#include "relmaser/occupation.hpp"

namespace relmaser {

// Full machine configuration: two transition frequencies, the drive
// coupling, and both reservoirs.
struct EngineConfig {
    double omega_h = 10.0;  // hot transition frequency, > 0
    double omega_c = 5.0;   // cold transition frequency, > 0
    double xi = 1.0;        // drive coupling, >= 0 (0 = undriven boundary case)
    BathParams hot;
    BathParams cold;

    void validate() const;
};

// Occupations of the two baths at their own transition frequencies.
struct Occupations {
    double n_hot;
    double n_cold;
};
Occupations occupations(const EngineConfig& cfg);

// Rotating-frame steady state. Populations sum to one; the e-r coherence
// is purely imaginary in this model (its sign follows n_hot - n_cold).
struct SteadyState {
    double p_g;                     // ground population
    double p_e;                     // intermediate population
    double p_r;                     // excited population
    std::complex<double> coherence; // rho_{re}; rho_{er} is its conjugate

    double trace() const { return p_g + p_e + p_r; }
};

// Stationary coherence rho_{re} in closed form:
//   2 i xi (N_h - N_c) G_c G_h / D,
//   D = 4 xi^2 [(1+3N_h) G_h + (1+3N_c) G_c]
//     + G_c G_h [1 + 2N_h + N_c (2+3N_h)] [(1+N_c) G_c + (1+N_h) G_h].
// The denominator is strictly positive for valid configs.
std::complex<double> closed_form_coherence(const EngineConfig& cfg);

// Steady state from the stationary linear system (population balance,
// coherence balance, trace). Direct dense solve in extended precision;
// the coherence agrees with closed_form_coherence to ~1e-14 relative at
// well-scaled configs.
SteadyState steady_state_linear(const EngineConfig& cfg);

// Independent oracle: builds the full 9x9 generator on the vectorized
// density matrix (drive commutator plus both dissipators) and returns the
// trace-one element of its null space. Throws numerical_error if the null
// space is not one-dimensional or the scaled residual ||L rho|| / ||L||
// exceeds 1e-10.
SteadyState liouvillian_steady_state(const EngineConfig& cfg);

}  // namespace relmaser
