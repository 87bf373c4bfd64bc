#pragma once

#include <functional>

#include "petd/core_numerics.hpp"
#include "petd/geometry_profiles.hpp"

namespace petd {

// Closed-form pieces of the axial kernel trace for a cone of half-angle
// alpha: the trace zeta in the reciprocal coordinate tau = 1/x, the
// difference-kernel factor G, and their one-sided Fourier transforms in the
// conjugate variable lambda. zeta_hat vanishes for lambda < 0; G vanishes
// for xi <= 0.
struct ConvolutionPieces {
    std::function<Complex(double)> zeta;      // tau > 0
    std::function<Complex(double)> G;         // any xi; zero for xi <= 0
    std::function<Complex(double)> zeta_hat;  // any lambda; zero for lambda < 0
    std::function<Complex(double)> G_hat;     // any lambda
};

// Scattered surface field on a cone in the self-similar coordinate
// y = Re(k) alpha^2 x. The total surface field is 1 + surface_field_sc(y).
// y = 0 returns 0 (tip limit); y < 0 throws std::domain_error.
Complex surface_field_sc(double y);

// Scattered field off the cone surface at axial distance x and radius
// r >= alpha*x (throws std::domain_error below the surface). Axial plane-wave
// incidence; wp.theta is ignored. At r = alpha*x this reduces to
// surface_field_sc(k alpha^2 x).
Complex offsurface_field(const WaveParams& wp, double alpha, double x, double r);

// Constant P in the large-y surface asymptote
//   U_total(y) = 2 + (P e^{iy/2} - i)/y + o(1/y).
Complex asympt_constant_P();

// Parabolic-cylinder approximation of the field near the shadow boundary
// r = 2 alpha x (the reflected-ray cone). Accurate for kx >> 1 and
// |2 alpha - r/x| sqrt(kx) = O(1).
Complex penumbra_field(const WaveParams& wp, double alpha, double x, double r);

// Closed forms for the convolution pieces at the given wavenumber and cone
// half-angle.
ConvolutionPieces convolution_pieces(const WaveParams& wp, double alpha);

namespace detail {

// Surface field at complex self-similar coordinate (Im y >= 0), evaluated on
// rotated contours. surface_field_sc is the real-y restriction.
Complex surface_field_sc_c(Complex y);

// Same value from a plain real-axis quadrature; converges only for
// Im y < 0, where the quadratic exponential damps the tail. Reference
// implementation for contour cross-checks.
Complex surface_field_sc_damped(Complex y);

// Asymptotic constant computed along the ray t e^{-i delta}, delta in
// (0, pi/2). The value is delta-independent; asympt_constant_P uses pi/8.
Complex asympt_constant_p_at(double delta);

// Total surface field at x_star recovered from the transform-domain solve
//   V_hat = zeta_hat / (1 - G_hat)
// followed by the inverse transform. Validation path for the convolution
// pieces; quadrature tolerance is looser than the direct contours.
Complex pipeline_surface_total(const WaveParams& wp, double alpha, double x_star);

// One-sided transform of the kernel trace computed by direct quadrature on a
// bent contour (up-ray, arc, down-ray). Requires Re k > Im k so the
// essential singularity at tau = 0 is damped on the first leg.
Complex zeta_hat_numeric(const WaveParams& wp, double alpha, double lambda);

// Inverse transform of the closed-form zeta_hat; recovers 2 zeta(tau).
Complex zeta_hat_inverse(const WaveParams& wp, double alpha, double tau);

}  // namespace detail

}  // namespace petd
