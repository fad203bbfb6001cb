// Thermal occupation numbers of stationary and relativistically moving
// reservoirs, and the effective temperatures seen from the system frame.
//
// A reservoir moving at constant velocity v = tanh(u) no longer looks
// thermal from the rest frame of the working medium: the Doppler-reshaped
// spectrum replaces the Planck occupation n(Omega) = 1/(e^{beta Omega} - 1)
// with
//
//   N_u(Omega) = ln[ (1 - e^{-beta Omega e^{|u|}}) / (1 - e^{-beta Omega e^{-|u|}}) ]
//                / (2 beta Omega sinh|u|),
//
// which is even in u, reduces to the Planck value as u -> 0, and tends to
// u / (beta Omega sinh u) in the high-temperature regime. Natural units
// hbar = k_B = c = 1 throughout; beta is the canonical temperature field.
#pragma once

namespace relmaser {

// One thermal reservoir: inverse temperature, rapidity of its constant
// velocity worldline, and Weisskopf-Wigner decay rate of the transition
// it couples to.
struct BathParams {
    double beta = 1.0;   // inverse temperature, > 0
    double u = 0.0;      // rapidity, any real; v = tanh(u)
    double gamma = 1.0;  // decay rate, > 0

    // Throws std::domain_error when beta or gamma are out of range.
    void validate() const;
};

// Planck occupation 1/(e^{beta omega} - 1), stable for beta*omega from
// ~1e-300 up to overflow. Throws std::domain_error for omega or beta <= 0.
double planck_occupation(double omega, double beta);

// Doppler-reshaped occupation N_u(omega) of a moving bath. Falls back to
// the Planck value for |u| below the 1e-6 switchover where the exact
// expression turns into 0/0; the two branches agree to ~1e-10 relative
// at the seam. Throws std::domain_error on invalid omega or bath.
double relativistic_occupation(double omega, const BathParams& bath);

// Solid-angle averaged apparent temperature T * u / sinh(u) of a bath at
// temperature T moving with rapidity u. Equals T at u = 0, strictly
// decreasing in |u|.
double effective_temperature(double temperature, double u);

// Apparent temperature along the line of sight at angle theta from the
// motion axis: T * sech(u) / (1 - tanh(u) cos(theta)). Evaluated in the
// cancellation-free form 2T / ((1-cos theta) e^u + (1+cos theta) e^{-u}).
double directional_temperature(double temperature, double theta, double u);

// Solid-angle average of 1/(1 - v cos theta), computed by adaptive
// quadrature of (1/2) Int_0^pi sin(theta) dtheta / (1 - v cos theta).
// Serves as an independent check of the analytic value u/tanh(u).
// Throws numerical_error if the quadrature tolerance cannot be met.
double solid_angle_average_factor(double u);

}  // namespace relmaser
