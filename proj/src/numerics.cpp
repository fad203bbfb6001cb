#include "relmaser/numerics.hpp"

#include <cmath>
#include <limits>

namespace relmaser {

double log1mexp(double x) {
    // 1 - e^{-x} loses digits through the subtraction for small x and
    // through e^{-x} itself for large x; the two branches cover both ends.
    static const double kLn2 = 0.6931471805599453;
    if (x <= kLn2) return std::log(-std::expm1(-x));
    return std::log1p(-std::exp(-x));
}

double u_over_sinh(double u) {
    if (u == 0.0) return 1.0;
    return u / std::sinh(u);  // for |u| < ~1e-8 sinh(u) == u in doubles
}

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    int max_depth;
};

double simpson_rec(const SimpsonState& st, double a, double b,
                   double fa, double fm, double fb, double whole,
                   double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = st.f(lm), frm = st.f(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // Halving the budget per split eventually pushes it below the rounding
    // noise of the panel sums; the floor stops the recursion there.
    const double noise = 8.0 * std::numeric_limits<double>::epsilon()
                       * (std::abs(left) + std::abs(right) + std::abs(whole));
    if (std::abs(delta) <= std::max(15.0 * tol, noise))
        return left + right + delta / 15.0;  // one Richardson step
    if (m <= a || m >= b || lm <= a || rm >= b)  // interval no longer splittable
        return left + right;
    if (depth >= st.max_depth)
        throw numerical_error("adaptive_simpson: depth exhausted before tolerance met");
    return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
         + simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double abs_tol, int max_depth) {
    if (!(b > a)) throw numerical_error("adaptive_simpson: empty interval");
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    SimpsonState st{f, max_depth};
    return simpson_rec(st, a, b, fa, fm, fb, whole, abs_tol, 0);
}

double bisect(const std::function<double(double)>& f,
              double lo, double hi, double xtol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numerical_error("bisect: endpoints do not bracket a root");
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= xtol) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw numerical_error("bisect: iteration budget exhausted");
}

double golden_section_max(const std::function<double(double)>& f,
                          double lo, double hi, double xtol, int max_iter) {
    if (!(hi > lo)) throw numerical_error("golden_section_max: empty interval");
    static const double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace relmaser
