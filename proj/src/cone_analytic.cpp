#include "petd/cone_analytic.hpp"

#include <algorithm>
#include <cmath>

namespace petd {

namespace {

constexpr Complex kImag{0.0, 1.0};

Complex ray_up() { return std::polar(1.0, kPi / 4.0); }

// e^{i(s^2/(2y) - s)} / h1e_1(s). The two exponential factors overflow
// separately on rotated rays; fused they stay bounded.
Complex recip_h1(Complex s, Complex y) {
    if (std::abs(s) < 1e-14) return {0.0, 0.0};
    return std::exp(kImag * (s * s / (2.0 * y) - s)) / hankel1_scaled(1, s);
}

// int_0^inf e^{i s^2/(2y)} / H1_1(s) ds. Small |y|: one rotated ray (the
// quadratic exponent is a Gaussian there). Large |y|: the phase s^2/(2y) - s
// is stationary at s = |y|, so stay on the real axis until the stationary
// region and rotate only past it.
Complex surface_recip_integral(Complex y) {
    double ym = std::abs(y);
    auto on_ray = [&y](Complex s) { return recip_h1(s, y); };
    if (ym <= 20.0) {
        double scale = std::clamp(std::sqrt(2.0 * ym), 0.01, 6.0);
        return ray_integral(on_ray, {0.0, 0.0}, ray_up(), scale).value;
    }
    double sj = ym - 4.0 * std::sqrt(ym);
    auto on_axis = [&y](double s) -> Complex {
        if (s < 1e-12) return {0.0, 0.0};
        return std::exp(kImag * s * s / (2.0 * y)) / hankel1(1, s);
    };
    Complex v = integrate_interval(on_axis, 0.0, sj).value;
    v += ray_integral(on_ray, {sj, 0.0}, ray_up(), std::sqrt(ym)).value;
    return v;
}

void check_cone_args(const char* who, double alpha, double x) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error(std::string(who) + ": alpha outside (0, 1)");
    if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": x must be > 0");
}

}  // namespace

namespace detail {

Complex surface_field_sc_c(Complex y) {
    if (std::abs(y) == 0.0) return {0.0, 0.0};
    Complex integral = surface_recip_integral(y);
    return -1.0 - 2.0 / (kPi * y) * std::exp(kImag * y / 2.0) * integral;
}

Complex surface_field_sc_damped(Complex y) {
    if (!(y.imag() < 0.0))
        throw std::domain_error("surface_field_sc_damped: requires Im y < 0");
    // |e^{i s^2/(2y)}| = e^{-d s^2} with d > 0 exactly when Im y < 0; the
    // radial spectrum then converges absolutely on the real axis.
    double d = -y.imag() / (2.0 * std::norm(y));
    double cut = std::sqrt(42.0 / d);
    auto f = [&y](double s) -> Complex {
        if (s < 1e-12) return Complex{0.0, 0.0};
        return bessel_j(1, s) * hankel1(0, s) / hankel1(1, s) * s *
               std::exp(kImag * s * s / (2.0 * y));
    };
    Complex integral = integrate_interval(f, 0.0, cut).value;
    return kImag / y * std::exp(kImag * y / 2.0) * integral;
}

Complex asympt_constant_p_at(double delta) {
    if (!(delta > 0.0) || !(delta < kPi / 2.0))
        throw std::domain_error("asympt_constant_p_at: delta outside (0, pi/2)");
    // 1/H1_1 decays like e^{-t sin(delta)} below the axis (where H1_1 grows);
    // the Hankel-one zeros all sit deeper in the lower half plane, so any
    // delta in (0, pi/2) sweeps a zero-free sector and gives the same value.
    Complex dir = std::polar(1.0, -delta);
    auto f = [](Complex s) -> Complex {
        if (std::abs(s) < 1e-14) return Complex{0.0, 0.0};
        return std::exp(-kImag * s) / hankel1_scaled(1, s);
    };
    Complex integral = ray_integral(f, {0.0, 0.0}, dir, 1.0 / std::sin(delta), 1e-11).value;
    return -2.0 / kPi * integral;
}

Complex pipeline_surface_total(const WaveParams& wp, double alpha, double x_star) {
    validate(wp);
    check_cone_args("pipeline_surface_total", alpha, x_star);
    Complex k = wp.k;
    Complex ka2 = k * alpha * alpha;
    double tau = 1.0 / x_star;
    // Solve the transform-domain equation as V^ = zeta^ / (1 - G^) and invert
    // in the scaled variable s = sqrt(2 k alpha^2 lambda); the numerator and
    // denominator are formed separately so the division really exercises the
    // two transform pieces.
    auto f = [&](Complex s) -> Complex {
        if (std::abs(s) < 1e-150) return Complex{0.0, 0.0};
        Complex zh = -4.0 * kPi * kImag * k * bessel_j(0, s);
        Complex dh = kPi * kImag * s * bessel_j(0, s) * hankel1(1, s);
        return zh / dh * s * std::exp(kImag * s * s * tau / (2.0 * ka2));
    };
    double width = std::sqrt(2.0 * std::abs(ka2) * x_star);
    Complex v = ray_integral(f, {0.0, 0.0}, ray_up(), width).value / (2.0 * kPi * ka2);
    return std::exp(kImag * ka2 * x_star / 2.0) / (k * x_star) * v;
}

Complex zeta_hat_numeric(const WaveParams& wp, double alpha, double lambda) {
    validate(wp);
    if (!(lambda > 0.0))
        throw std::domain_error("zeta_hat_numeric: lambda must be > 0");
    if (!(wp.k.real() > wp.k.imag()))
        throw std::domain_error("zeta_hat_numeric: contour requires Re k > Im k");
    double a2 = alpha * alpha;
    // One phase sign reaches the transform through a bent contour: up-ray to
    // R (damps the essential singularity at tau = 0), arc down to the lower
    // ray, then out along e^{-i pi/4} where the phase decays. That alone
    // carries only the outgoing half of the transform; the returning half is
    // its reflection, the same contour at conj(k) conjugated back.
    auto bare = [&](Complex k) -> Complex {
        auto term = [&](Complex t) -> Complex {
            return k / t * std::exp(-kImag * (k * a2 / (2.0 * t) + lambda * t));
        };
        const double radius = 2.0;
        Complex up = std::polar(1.0, kPi / 4.0);
        Complex dn = std::polar(1.0, -kPi / 4.0);
        Complex v = integrate_interval(
                        [&](double t) -> Complex {
                            if (t < 1e-12) return {0.0, 0.0};
                            return term(t * up) * up;
                        },
                        0.0, radius)
                        .value;
        v -= integrate_interval(
                 [&](double th) -> Complex {
                     Complex t = std::polar(radius, th);
                     return term(t) * kImag * t;
                 },
                 -kPi / 4.0, kPi / 4.0)
                 .value;
        v += ray_integral(term, radius * dn, dn, 1.4 / lambda).value;
        return v;
    };
    return 2.0 * (bare(wp.k) - std::conj(bare(std::conj(wp.k))));
}

Complex zeta_hat_inverse(const WaveParams& wp, double alpha, double tau) {
    validate(wp);
    if (!(tau > 0.0)) throw std::domain_error("zeta_hat_inverse: tau must be > 0");
    Complex k = wp.k;
    Complex ka2 = k * alpha * alpha;
    auto f = [&](Complex s) -> Complex {
        return bessel_j(0, s) * s * std::exp(kImag * s * s * tau / (2.0 * ka2));
    };
    double width = std::sqrt(2.0 * std::abs(ka2) / tau);
    Complex integral = ray_integral(f, {0.0, 0.0}, ray_up(), width).value;
    return -2.0 * kImag * k / ka2 * integral;
}

}  // namespace detail

Complex surface_field_sc(double y) {
    if (!(y >= 0.0)) throw std::domain_error("surface_field_sc: y must be >= 0");
    return detail::surface_field_sc_c({y, 0.0});
}

Complex offsurface_field(const WaveParams& wp, double alpha, double x, double r) {
    validate(wp);
    check_cone_args("offsurface_field", alpha, x);
    double rho = r / (alpha * x);
    if (!(rho >= 1.0 - 1e-12))
        throw std::domain_error("offsurface_field: r below the body surface");
    rho = std::max(rho, 1.0);
    Complex y = wp.k * alpha * alpha * x;
    double ym = std::abs(y);

    // Outgoing half of the radial spectrum: H1_0(rho s) decays upward, so the
    // whole half rotates from the origin.
    auto half_out = [&](Complex s) -> Complex {
        if (std::abs(s) < 1e-150) return Complex{0.0, 0.0};
        return 0.5 * hankel1_scaled(0, rho * s) * s *
               std::exp(kImag * (s * s / (2.0 * y) + rho * s));
    };
    double out_scale = std::min(1.4 / rho, std::sqrt(2.0 * ym) + 0.5);
    Complex integral =
        ray_integral(half_out, {0.0, 0.0}, ray_up(), out_scale).value;

    // Returning half: its phase s^2/(2y) + (rho - 2)s is stationary at
    // s = (2 - rho)|y| for rho < 2; stay real through that region, then
    // rotate.
    double sm = 2.0;
    if (rho < 2.0) sm = std::max(sm, (2.0 - rho) * ym + 4.0 * std::sqrt(ym));
    auto half_ret = [&](Complex s) -> Complex {
        if (std::abs(s) < 1e-12) return Complex{0.0, 0.0};
        return 0.5 * hankel2_scaled(1, s) / hankel1_scaled(1, s) *
               hankel1_scaled(0, rho * s) * s *
               std::exp(kImag * (s * s / (2.0 * y) + (rho - 2.0) * s));
    };
    integral += integrate_interval([&](double s) { return half_ret({s, 0.0}); },
                                   0.0, sm)
                    .value;
    double slope = sm / ym + (rho - 2.0);
    double ret_scale =
        std::min(1.4 / std::max(slope, 1e-6), std::sqrt(2.0 * ym) + 0.5);
    integral += ray_integral(half_ret, {sm, 0.0}, ray_up(), ret_scale).value;

    return kImag / y * std::exp(kImag * y / 2.0) * integral;
}

Complex asympt_constant_P() { return detail::asympt_constant_p_at(kPi / 8.0); }

Complex penumbra_field(const WaveParams& wp, double alpha, double x, double r) {
    validate(wp);
    check_cone_args("penumbra_field", alpha, x);
    if (!(r > 0.0)) throw std::domain_error("penumbra_field: r must be > 0");
    Complex kx = wp.k * x;
    Complex y = kx * alpha * alpha;
    double gamma = 2.0 * alpha - r / x;
    double rho = r / (alpha * x);
    Complex z = std::sqrt(kx) * gamma * std::polar(1.0, 3.0 * kPi / 4.0);
    double ta = std::tan(alpha);
    Complex phase =
        std::exp(kImag * (kx * ta * ta / 2.0 - kx * gamma * gamma / 2.0));
    Complex dp = parabolic_cylinder_D_neg32(z);
    // next-order term: the ratio of adjacent parabolic cylinder values is
    // convention independent
    Complex dratio = 0.5 * detail::pc_bare_12(z) / detail::pc_bare_32(z);
    double c = 0.75 + 1.0 / (8.0 * rho);
    Complex corr =
        1.0 - 2.0 * kImag * c * std::polar(1.0, -kPi / 4.0) * dratio / std::sqrt(y);
    return std::sqrt(2.0) / 4.0 * std::polar(1.0, kPi / 8.0) * std::pow(kx, -0.25) *
           std::sqrt(x / r) * phase * dp * corr;
}

ConvolutionPieces convolution_pieces(const WaveParams& wp, double alpha) {
    validate(wp);
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("convolution_pieces: alpha outside (0, 1)");
    Complex k = wp.k;
    double a2 = alpha * alpha;
    ConvolutionPieces p;
    p.zeta = [k, a2](double tau) -> Complex {
        if (!(tau > 0.0)) throw std::domain_error("zeta: tau must be > 0");
        return k / tau * std::exp(-kImag * k * a2 / (2.0 * tau));
    };
    p.G = [k, a2](double xi) -> Complex {
        if (!(xi > 0.0)) return {0.0, 0.0};
        Complex z = k * a2 / xi;
        Complex pref = kImag * k * a2 / (xi * xi);
        if (std::abs(z) <= 30.0)
            return pref * std::exp(kImag * z) *
                   (bessel_j(0, z) + kImag * bessel_j(1, z));
        Complex h1 = hankel1_scaled(0, z) + kImag * hankel1_scaled(1, z);
        Complex h2 = hankel2_scaled(0, z) + kImag * hankel2_scaled(1, z);
        return pref * 0.5 * (h1 * std::exp(2.0 * kImag * z) + h2);
    };
    p.zeta_hat = [k, a2](double lam) -> Complex {
        if (lam < 0.0) return {0.0, 0.0};
        Complex s = std::sqrt(2.0 * k * a2 * lam);
        return -4.0 * kPi * kImag * k * bessel_j(0, s);
    };
    p.G_hat = [k, a2](double lam) -> Complex {
        Complex s = std::sqrt(2.0 * k * a2 * Complex(lam, 0.0));
        if (std::abs(s) < 1e-9) return {-1.0, 0.0};
        return 1.0 - kImag * kPi * s * bessel_j(0, s) * hankel1(1, s);
    };
    return p;
}

}  // namespace petd
