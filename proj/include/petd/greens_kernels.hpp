#pragma once

#include <functional>

#include "petd/core_numerics.hpp"
#include "petd/geometry_profiles.hpp"

namespace petd {

// Cylindrical coordinates (x, r, phi) with the body axis along x.
struct SpacePoint {
    double x = 0.0;
    double r = 0.0;
    double phi = 0.0;
};

// Binds a profile and wave parameters for kernel evaluation. Immutable;
// evaluations are pure functions of the arguments.
struct KernelEvaluator {
    Profile profile;
    WaveParams wp;
};

// One-way parabolic Green's function. Zero for obs.x <= src.x; otherwise
//   k / (2 pi i dx) exp{ (ik/2) (dr)^2 / dx },
//   (dr)^2 = r^2 + r_s^2 - 2 r r_s cos(phi - phi_s),  dx = obs.x - src.x.
Complex greens(const SpacePoint& obs, const SpacePoint& src, const WaveParams& wp);

// Propagates a transverse field v(r, phi) given on the plane x = plane_x to a
// downstream target by the transverse integral of greens * v * r. Requires
// target.x > plane_x and either Im k > 0 or v decaying in r (the integral
// must converge). Throws AccuracyError if the quadrature stalls.
Complex continuation_apply(const std::function<Complex(double, double)>& v,
                           double plane_x, const SpacePoint& target,
                           const WaveParams& wp, const QuadratureSpec& spec = {});

// Boundary-integral kernel on the surface r = f(x):
//   (ik f(x)/2pi) [ f'(x)/dx + (f(x) - f(x*) cos dphi)/dx^2 ]
//     * exp{ (ik/2)(f(x*)^2 + f(x)^2 - 2 f(x*) f(x) cos dphi)/dx },
// dphi = phi - phi_star, dx = x_star - x > 0 (domain error otherwise).
Complex kernel_full(const KernelEvaluator& ke, double x_star, double phi_star,
                    double x, double phi);

// Angular Fourier coefficient of kernel_full,
//   K_n(x*, x) = \int_0^{2pi} K(x*, psi, x, 0) e^{-i n psi} dpsi,
// by trapezoid quadrature with node doubling (spectral for the periodic
// integrand). This is the reference path; kernel_modal_closed must agree
// with it. Throws AccuracyError when the integrand is too oscillatory to
// settle (remedy: larger Im k or larger x_star - x).
Complex kernel_modal(const KernelEvaluator& ke, int n, double x_star, double x,
                     double rel_tol = 1e-11);

// Closed form of the same coefficient,
//   K_n = (ik f(x)/dx^2) e^{(ik/2)(f*^2 + f^2)/dx} (-i)^|n|
//         [ (f + dx f') J_|n|(beta) - i f* J'_|n|(beta) ],   beta = k f* f/dx,
// where f* = f(x*), f = f(x), f' = f'(x). Even in n. For large |beta| the
// evaluation switches to the half-kernel split (see detail below) so the
// exponentials never overflow. Validated against kernel_modal by tests.
Complex kernel_modal_closed(const KernelEvaluator& ke, int n, double x_star, double x);

// Axially symmetric kernel specialized to the cone f = alpha x:
//   (ik alpha^2 x* x/dx^2) exp{(ik alpha^2/2)(x*^2 + x^2)/dx}
//     [ J_0(beta) + i J_1(beta) ],   beta = k alpha^2 x* x / dx.
// Independent code path from kernel_modal_closed; tests cross-validate.
Complex kernel_cone0(const WaveParams& wp, double alpha, double x_star, double x);

namespace detail {

// Profile values at complex axial coordinate via second-order continuation
// about a real base point; exact for the polynomial profiles built by the
// constructors.
struct ProfileSample {
    Complex f;
    Complex f_dot;
};
ProfileSample sample_profile(const Profile& p, Complex x, double base);

// Single-expression form of kernel_modal_closed built on the double-precision
// Bessel fast path, with no dispatch on |beta|. Intermediate values grow like
// e^{Im beta}, so the caller must keep Im beta ~< 600 (the solver's quadrature
// regions do); outside that use the h1 + h2 split below.
Complex kernel_modal_jform(const KernelEvaluator& ke, int n, double x_star, double x);

// Half-kernel pieces: kernel_modal_closed = h1 + h2 for large |beta|. Each
// piece carries its exponent in the combined form
//   h1: exp{(ik/2)(f* + f)^2/dx},   h2: exp{(ik/2)(f* - f)^2/dx},
// damped for Im k >= 0. The h1 piece accepts complex x (its exponent stays
// damped on the rotated contours used by the solver tails).
Complex kernel_modal_h1(const KernelEvaluator& ke, int n, double x_star, Complex x);
Complex kernel_modal_h2(const KernelEvaluator& ke, int n, double x_star, double x);

// J_n(z) and its derivative for moderate |z|, double-precision fast path used
// inside kernel evaluation (relative error ~1e-9, adequate for kernels that
// feed 1e-2-level solution tolerances).
void j_pair_fast(int n, Complex z, Complex& jn, Complex& jn_dot);

}  // namespace detail

}  // namespace petd
