// Small numerical kernels: stable special functions, adaptive quadrature,
// bracketing root finding and 1-d maximization.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace relmaser {

// Thrown when an iterative routine (quadrature, bisection, golden section,
// null-space extraction) cannot reach its requested tolerance.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// log(1 - exp(-x)) for x > 0, accurate over the whole range.
// Splits at log(2): small x goes through expm1, large x through log1p,
// so the result stays exact down to x ~ 1e-300 and degrades gracefully
// (-exp(-x) -> -0) once exp(-x) underflows.
double log1mexp(double x);

// u / sinh(u) with the u = 0 limit handled (returns 1). Even in u,
// strictly decreasing in |u|.
double u_over_sinh(double u);

// Recursive adaptive Simpson integration of f over [a, b].
// abs_tol is the requested absolute error of the total integral.
// Throws numerical_error if the depth budget is exhausted before the
// local error estimates meet the budget.
double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double abs_tol, int max_depth = 60);

// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite (or zero) sign.
// Stops when the bracket is narrower than xtol. Throws numerical_error on a
// bad bracket or iteration overrun.
double bisect(const std::function<double(double)>& f,
              double lo, double hi, double xtol, int max_iter = 200);

// Golden-section maximization of f on [lo, hi] down to bracket width xtol.
double golden_section_max(const std::function<double(double)>& f,
                          double lo, double hi, double xtol, int max_iter = 200);

}  // namespace relmaser
