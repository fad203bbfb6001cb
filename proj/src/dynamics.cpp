#include "relmaser/dynamics.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "relmaser/numerics.hpp"

namespace relmaser {

namespace {

using Real = long double;
using Cplx = std::complex<Real>;
using Mat3 = Eigen::Matrix<Cplx, 3, 3>;
using Mat9 = Eigen::Matrix<Cplx, 9, 9>;
using Vec9 = Eigen::Matrix<Cplx, 9, 1>;

// Basis order |g> = 0, |e> = 1, |r> = 2; column-major vectorization.
enum : int { G = 0, E = 1, R = 2 };

// vec(A rho B) = (B^T kron A) vec(rho)
Mat9 kron_bt_a(const Mat3& b, const Mat3& a) {
    Mat9 out = Mat9::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.block<3, 3>(3 * i, 3 * j) = b(j, i) * a;
    return out;
}

void add_dissipator(Mat9& gen, const Mat3& jump, Real rate) {
    if (rate == 0.0L) return;
    const Mat3 jd = jump.adjoint();
    const Mat3 jdj = jd * jump;
    const Mat3 id = Mat3::Identity();
    gen += rate * (kron_bt_a(jd, jump)
                   - Real(0.5) * (kron_bt_a(id, jdj) + kron_bt_a(jdj, id)));
}

}  // namespace

void EngineConfig::validate() const {
    if (!(omega_h > 0.0)) throw std::domain_error("EngineConfig: omega_h must be > 0");
    if (!(omega_c > 0.0)) throw std::domain_error("EngineConfig: omega_c must be > 0");
    if (!(xi >= 0.0)) throw std::domain_error("EngineConfig: xi must be >= 0");
    hot.validate();
    cold.validate();
}

Occupations occupations(const EngineConfig& cfg) {
    return {relativistic_occupation(cfg.omega_h, cfg.hot),
            relativistic_occupation(cfg.omega_c, cfg.cold)};
}

std::complex<double> closed_form_coherence(const EngineConfig& cfg) {
    cfg.validate();
    const auto [nh, nc] = occupations(cfg);
    const double gh = cfg.hot.gamma, gc = cfg.cold.gamma, xi = cfg.xi;
    const double denom =
        4.0 * xi * xi * ((1.0 + 3.0 * nh) * gh + (1.0 + 3.0 * nc) * gc)
        + gc * gh * (1.0 + 2.0 * nh + nc * (2.0 + 3.0 * nh))
              * ((1.0 + nc) * gc + (1.0 + nh) * gh);
    return {0.0, 2.0 * xi * (nh - nc) * gc * gh / denom};
}

SteadyState steady_state_linear(const EngineConfig& cfg) {
    cfg.validate();
    const auto [nh, nc] = occupations(cfg);
    const Real gh = cfg.hot.gamma, gc = cfg.cold.gamma, xi = cfg.xi;
    const Real dh = gh * (Real(nh) + 1.0L);  // hot population damping
    const Real dc = gc * (Real(nc) + 1.0L);
    const Real ph = gh * Real(nh);           // hot pumping
    const Real pc = gc * Real(nc);
    const Real a_half = Real(0.5) * (dh + dc);  // coherence damping

    // Unknowns: [p_r, p_e, p_g, Re(coh), Im(coh)].
    Eigen::Matrix<Real, 5, 5> m = Eigen::Matrix<Real, 5, 5>::Zero();
    Eigen::Matrix<Real, 5, 1> rhs = Eigen::Matrix<Real, 5, 1>::Zero();
    m(0, 0) = -dh; m(0, 2) = ph; m(0, 4) = -2.0L * xi;   // d p_r / dt = 0
    m(1, 1) = -dc; m(1, 2) = pc; m(1, 4) = 2.0L * xi;    // d p_e / dt = 0
    m(2, 3) = -a_half;                                   // Re coherence
    m(3, 0) = xi; m(3, 1) = -xi; m(3, 4) = -a_half;      // Im coherence
    m(4, 0) = 1.0L; m(4, 1) = 1.0L; m(4, 2) = 1.0L;      // trace
    rhs(4) = 1.0L;

    // Equilibrate rows: rates can span many orders of magnitude.
    for (int i = 0; i < 5; ++i) {
        const Real s = m.row(i).cwiseAbs().maxCoeff();
        if (s > 0.0L) {
            m.row(i) /= s;
            rhs(i) /= s;
        }
    }
    Eigen::FullPivLU<Eigen::Matrix<Real, 5, 5>> lu(m);
    if (!lu.isInvertible())
        throw numerical_error("steady_state_linear: singular stationary system");
    const Eigen::Matrix<Real, 5, 1> sol = lu.solve(rhs);

    SteadyState ss;
    ss.p_r = static_cast<double>(sol(0));
    ss.p_e = static_cast<double>(sol(1));
    ss.p_g = static_cast<double>(sol(2));
    ss.coherence = {static_cast<double>(sol(3)), static_cast<double>(sol(4))};
    return ss;
}

SteadyState liouvillian_steady_state(const EngineConfig& cfg) {
    cfg.validate();
    const auto [nh, nc] = occupations(cfg);
    const Real gh = cfg.hot.gamma, gc = cfg.cold.gamma;

    Mat3 v = Mat3::Zero();
    v(R, E) = cfg.xi;
    v(E, R) = cfg.xi;

    Mat3 lower_h = Mat3::Zero(), raise_h = Mat3::Zero();
    lower_h(G, R) = 1.0L;
    raise_h(R, G) = 1.0L;
    Mat3 lower_c = Mat3::Zero(), raise_c = Mat3::Zero();
    lower_c(G, E) = 1.0L;
    raise_c(E, G) = 1.0L;

    const Mat3 id = Mat3::Identity();
    const Cplx im(0.0L, 1.0L);
    Mat9 gen = -im * (kron_bt_a(id, v) - kron_bt_a(v, id));
    add_dissipator(gen, lower_h, gh * (Real(nh) + 1.0L));
    add_dissipator(gen, raise_h, gh * Real(nh));
    add_dissipator(gen, lower_c, gc * (Real(nc) + 1.0L));
    add_dissipator(gen, raise_c, gc * Real(nc));

    Eigen::JacobiSVD<Mat9> svd(gen, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(7) <= 1e-13L * sv(0))
        throw numerical_error("liouvillian_steady_state: generator null space is degenerate");

    Vec9 kernel = svd.matrixV().col(8);
    const Cplx tr = kernel(0) + kernel(4) + kernel(8);
    if (std::abs(tr) < 1e-6L)
        throw numerical_error("liouvillian_steady_state: traceless kernel vector");
    kernel /= tr;

    const Real gen_scale = gen.cwiseAbs().maxCoeff();
    const Real residual = (gen * kernel).cwiseAbs().maxCoeff();
    if (residual > 1e-10L * std::max(Real(1), gen_scale))
        throw numerical_error("liouvillian_steady_state: stationarity residual too large");

    Mat3 rho;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r)
            rho(r, c) = kernel(r + 3 * c);
    rho = Real(0.5) * (rho + rho.adjoint()).eval();

    SteadyState ss;
    ss.p_g = static_cast<double>(rho(G, G).real());
    ss.p_e = static_cast<double>(rho(E, E).real());
    ss.p_r = static_cast<double>(rho(R, R).real());
    ss.coherence = {static_cast<double>(rho(R, E).real()),
                    static_cast<double>(rho(R, E).imag())};
    return ss;
}

}  // namespace relmaser
