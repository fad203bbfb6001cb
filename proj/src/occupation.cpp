#include "relmaser/occupation.hpp"

#include <cmath>
#include <stdexcept>

#include "relmaser/numerics.hpp"

namespace relmaser {

namespace {
// Below this rapidity the exact formula is a 0/0 and we return the Planck
// value instead; the relative mismatch at the seam is ~1e-10.
constexpr double kRapidityEpsilon = 1e-6;
}  // namespace

void BathParams::validate() const {
    if (!(beta > 0.0)) throw std::domain_error("BathParams: beta must be > 0");
    if (!(gamma > 0.0)) throw std::domain_error("BathParams: gamma must be > 0");
    if (!std::isfinite(u)) throw std::domain_error("BathParams: u must be finite");
}

double planck_occupation(double omega, double beta) {
    if (!(omega > 0.0)) throw std::domain_error("planck_occupation: omega must be > 0");
    if (!(beta > 0.0)) throw std::domain_error("planck_occupation: beta must be > 0");
    return 1.0 / std::expm1(beta * omega);
}

double relativistic_occupation(double omega, const BathParams& bath) {
    if (!(omega > 0.0)) throw std::domain_error("relativistic_occupation: omega must be > 0");
    bath.validate();
    const double au = std::abs(bath.u);
    if (au < kRapidityEpsilon) return planck_occupation(omega, bath.beta);
    const double p = bath.beta * omega;
    const double num = log1mexp(p * std::exp(au)) - log1mexp(p * std::exp(-au));
    return num / (2.0 * p * std::sinh(au));
}

double effective_temperature(double temperature, double u) {
    if (!(temperature > 0.0))
        throw std::domain_error("effective_temperature: temperature must be > 0");
    return temperature * u_over_sinh(u);
}

double directional_temperature(double temperature, double theta, double u) {
    if (!(temperature > 0.0))
        throw std::domain_error("directional_temperature: temperature must be > 0");
    if (!(theta >= 0.0 && theta <= std::acos(-1.0)))
        throw std::domain_error("directional_temperature: theta must be in [0, pi]");
    const double c = std::cos(theta);
    // sech(u)/(1 - tanh(u) c) == 2 / ((1-c) e^u + (1+c) e^{-u}): both
    // denominator terms are nonnegative, so no cancellation at theta -> 0.
    return 2.0 * temperature / ((1.0 - c) * std::exp(u) + (1.0 + c) * std::exp(-u));
}

double solid_angle_average_factor(double u) {
    const double w = std::abs(u);  // average is even in u
    if (w == 0.0) return 1.0;
    // Integrand of (1/2) Int sin(theta)/(1 - v cos theta) with e^w factored
    // out of the denominator so large rapidities cannot overflow:
    //   (1 + q) sin(theta) / ((1 - cos theta) + (1 + cos theta) q),  q = e^{-2w}.
    // Half-angle form keeps full relative precision near theta = 0, where
    // 1 - cos(theta) would cancel:
    //   (1 + q) sin(t/2) cos(t/2) / (sin^2(t/2) + q cos^2(t/2)),  q = e^{-2w}.
    const double q = std::exp(-2.0 * w);
    auto integrand = [q](double theta) {
        const double s = std::sin(0.5 * theta);
        const double c = std::cos(0.5 * theta);
        return (1.0 + q) * s * c / (s * s + q * c * c);
    };
    const double pi = std::acos(-1.0);
    return 0.5 * adaptive_simpson(integrand, 0.0, pi, 1e-13);
}

}  // namespace relmaser
