// Efficiency bounds for the maser with a moving cold reservoir: the
// generalized Carnot bound, the zero-power efficiency it envelopes, and
// the efficiency at maximum power in the strong-driving high-temperature
// regime, with the Curzon-Ahlborn benchmark for comparison.
#pragma once

namespace relmaser {

// Temperature ratio tau = T_c/T_h = beta_h/beta_c and cold-bath rapidity.
// tau < 1 is the engine regime but any positive ratio is legal input.
struct BoundInputs {
    double tau;
    double u;

    void validate() const;
};

// eta_up = 1 - tau * u / sinh(u). Even in u, increasing in |u|, and equal
// to the Carnot value 1 - tau at u = 0.
double generalized_carnot_bound(const BoundInputs& b);

struct FrequencyOptimum {
    double omega_c_star;
    double efficiency;
};

// Cold frequency at which the coherence (and hence every flux) vanishes:
// root of planck(omega_h, beta_h) = N_u(omega_c) in (0, omega_h], located
// by bisection to 1e-12 in omega_c. The efficiency 1 - omega_c*/omega_h is
// the largest the engine window allows at this omega_h; it approaches
// eta_up from below as beta_h omega_h -> 0. Hot bath is stationary.
// Throws numerical_error when the hot occupation never exceeds the cold
// one (no engine window).
FrequencyOptimum zero_power_efficiency(double beta_h, double beta_c,
                                       double u_c, double omega_h);

// Power in the strong-driving, high-temperature regime:
//   Gamma (omega_c - omega_h)(tau u omega_h - omega_c sinh u)
//     / (3 (omega_c sinh u + tau u omega_h)),
// evaluated through u/sinh(u) so u = 0 is regular. Vanishes at
// omega_c = omega_h and at the zero-power endpoint omega_c = tau u omega_h / sinh u.
double asymptotic_power(double gamma, double tau, double u,
                        double omega_h, double omega_c);

// Closed-form efficiency at maximum power of the asymptotic expression:
//   eta_MP = 1 - (sqrt(2 m^2 + 2 m) - m),  m = tau u / sinh(u).
// At u = 0 this is 2 - eta_C - sqrt(2 (2 - 3 eta_C + eta_C^2)) with
// eta_C = 1 - tau, which meets Curzon-Ahlborn at linear order in eta_C.
double emp_analytic(const BoundInputs& b);

// Efficiency at maximum power by direct maximization of asymptotic_power
// over omega_c: coarse 101-point grid, golden-section refinement, then a
// bisection polish on the finite-difference slope. Matches emp_analytic
// to better than 1e-8. Throws numerical_error if no interior maximum with
// positive power exists.
FrequencyOptimum emp_numeric(double gamma, double tau, double u, double omega_h);

// Comparison mode: maximizes the full steady-state power (not its
// asymptotic limit) over omega_c at the given drive strength and hot
// temperature, with the cold bath at beta_h/tau and rapidity u. Its
// deviation from emp_analytic measures how far the configuration is from
// the strong-driving high-temperature regime.
FrequencyOptimum emp_numeric_full(double gamma, double tau, double u,
                                  double omega_h, double xi, double beta_h);

// Curzon-Ahlborn efficiency 1 - sqrt(1 - eta_c) for eta_c in [0, 1).
double curzon_ahlborn(double eta_c);

}  // namespace relmaser
