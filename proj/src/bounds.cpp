#include "relmaser/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "relmaser/numerics.hpp"
#include "relmaser/occupation.hpp"
#include "relmaser/thermo.hpp"

namespace relmaser {

void BoundInputs::validate() const {
    if (!(tau > 0.0)) throw std::domain_error("BoundInputs: tau must be > 0");
    if (!std::isfinite(u)) throw std::domain_error("BoundInputs: u must be finite");
}

double generalized_carnot_bound(const BoundInputs& b) {
    b.validate();
    return 1.0 - b.tau * u_over_sinh(b.u);
}

FrequencyOptimum zero_power_efficiency(double beta_h, double beta_c,
                                       double u_c, double omega_h) {
    if (!(beta_h > 0.0) || !(beta_c > 0.0))
        throw std::domain_error("zero_power_efficiency: betas must be > 0");
    if (!(omega_h > 0.0))
        throw std::domain_error("zero_power_efficiency: omega_h must be > 0");
    const double n_hot = planck_occupation(omega_h, beta_h);
    const BathParams cold{beta_c, u_c, 1.0};
    auto gap = [&](double omega_c) {
        return n_hot - relativistic_occupation(omega_c, cold);
    };
    if (gap(omega_h) < 0.0)
        throw numerical_error(
            "zero_power_efficiency: no engine window (cold occupation exceeds hot "
            "everywhere below omega_h)");
    // The cold occupation diverges as omega_c -> 0, so the bracket always
    // closes on the left.
    const double lo = omega_h * 1e-15;
    const double omega_c_star = (gap(omega_h) == 0.0)
        ? omega_h
        : bisect(gap, lo, omega_h, 1e-12, 200);
    return {omega_c_star, 1.0 - omega_c_star / omega_h};
}

double asymptotic_power(double gamma, double tau, double u,
                        double omega_h, double omega_c) {
    if (!(gamma > 0.0) || !(tau > 0.0) || !(omega_h > 0.0) || !(omega_c > 0.0))
        throw std::domain_error("asymptotic_power: inputs must be positive");
    const double m = tau * u_over_sinh(u);
    return gamma * (omega_c - omega_h) * (m * omega_h - omega_c)
         / (3.0 * (omega_c + m * omega_h));
}

double emp_analytic(const BoundInputs& b) {
    b.validate();
    const double m = b.tau * u_over_sinh(b.u);
    return 1.0 - (std::sqrt(2.0 * m * m + 2.0 * m) - m);
}

FrequencyOptimum emp_numeric(double gamma, double tau, double u, double omega_h) {
    if (!(gamma > 0.0) || !(tau > 0.0) || !(omega_h > 0.0))
        throw std::domain_error("emp_numeric: inputs must be positive");
    auto power = [&](double omega_c) {
        return asymptotic_power(gamma, tau, u, omega_h, omega_c);
    };

    // Coarse 101-point bracketing of the interior maximum.
    const int n_grid = 101;
    int best = -1;
    double best_val = 0.0;
    for (int k = 1; k <= n_grid; ++k) {
        const double x = omega_h * k / (n_grid + 1);
        const double p = power(x);
        if (p > best_val) {
            best_val = p;
            best = k;
        }
    }
    if (best < 0)
        throw numerical_error("emp_numeric: no interior maximum with positive power");

    const double lo = omega_h * (best - 1) / (n_grid + 1);
    const double hi = omega_h * (best + 1) / (n_grid + 1);
    double x_star = golden_section_max(power, std::max(lo, omega_h * 1e-12),
                                       std::min(hi, omega_h), 1e-12 * omega_h, 200);

    // The power surface is flat to machine precision near the optimum, so
    // golden section alone pins the argmax only to ~sqrt(eps). Polishing on
    // the sign of the centered difference recovers it to ~1e-11 without
    // using any closed-form knowledge of the optimum.
    const double h = 1e-6 * omega_h;
    const double delta = 1e-4 * omega_h;
    auto slope = [&](double x) { return power(x + h) - power(x - h); };
    const double a = std::max(x_star - delta, h * 2.0);
    const double b = std::min(x_star + delta, omega_h - h);
    if (a < b && slope(a) > 0.0 && slope(b) < 0.0)
        x_star = bisect(slope, a, b, 1e-12 * omega_h, 200);

    return {x_star, 1.0 - x_star / omega_h};
}

FrequencyOptimum emp_numeric_full(double gamma, double tau, double u,
                                  double omega_h, double xi, double beta_h) {
    if (!(gamma > 0.0) || !(tau > 0.0) || !(omega_h > 0.0) || !(xi > 0.0)
        || !(beta_h > 0.0))
        throw std::domain_error("emp_numeric_full: inputs must be positive");
    auto power = [&](double omega_c) {
        EngineConfig cfg;
        cfg.omega_h = omega_h;
        cfg.omega_c = omega_c;
        cfg.xi = xi;
        cfg.hot = {beta_h, 0.0, gamma};
        cfg.cold = {beta_h / tau, u, gamma};
        return performance(cfg).power;
    };
    const int n_grid = 101;
    int best = -1;
    double best_val = 0.0;
    for (int k = 1; k <= n_grid; ++k) {
        const double p = power(omega_h * k / (n_grid + 1));
        if (p > best_val) {
            best_val = p;
            best = k;
        }
    }
    if (best < 0)
        throw numerical_error("emp_numeric_full: no interior maximum with positive power");
    const double lo = omega_h * (best - 1) / (n_grid + 1);
    const double hi = omega_h * (best + 1) / (n_grid + 1);
    const double x_star = golden_section_max(power, std::max(lo, omega_h * 1e-12),
                                             std::min(hi, omega_h), 1e-10 * omega_h, 200);
    return {x_star, 1.0 - x_star / omega_h};
}

double curzon_ahlborn(double eta_c) {
    if (!(eta_c >= 0.0 && eta_c < 1.0))
        throw std::domain_error("curzon_ahlborn: eta_c must be in [0, 1)");
    return 1.0 - std::sqrt(1.0 - eta_c);
}

}  // namespace relmaser
