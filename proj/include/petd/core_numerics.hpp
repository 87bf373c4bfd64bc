#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace petd {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Plain-old-data mirror of Complex for serialization (CSV/JSON rows).
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
};

inline ComplexValue to_value(Complex z) { return {z.real(), z.imag()}; }
inline Complex from_value(ComplexValue v) { return {v.re, v.im}; }

// Controls for the oscillatory / adaptive quadratures.
//   relative_tolerance    in (0, 1)
//   max_subdivisions      >= 1, recursion depth cap per panel
//   contour_rotation_angle in [0, pi/2); 0 disables rotation (integrand must
//   then decay on the real axis by itself).
struct QuadratureSpec {
    double relative_tolerance = 1e-8;
    int max_subdivisions = 24;
    double contour_rotation_angle = kPi / 6.0;
};

// Throws std::domain_error if the spec fields are outside their ranges.
void validate(const QuadratureSpec& spec);

// Raised when a quadrature cannot reach the requested tolerance. Carries the
// best estimate so far and its estimated absolute error.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, Complex best, double error)
        : std::runtime_error(what), best_estimate(best), error_estimate(error) {}

    Complex best_estimate;
    double error_estimate;
};

struct QuadResult {
    Complex value;
    double error_estimate;  // absolute
};

// Bessel function J_n(z) of integer order for complex argument, |z| <= 1e4.
// Negative orders use J_{-n} = (-1)^n J_n. Throws std::domain_error outside
// the supported range (|order| <= 64).
Complex bessel_j(int order, Complex z);

// d/dz J_n(z) via the two-sided recurrence.
Complex bessel_j_derivative(int order, Complex z);

// Bessel function of the second kind, same domain as bessel_j.
Complex bessel_y(int order, Complex z);

// Hankel function H^(1)_n(z) = J_n + i Y_n. z = 0 is a singularity
// (std::domain_error). Supported for Im z >= 0 and a sector below the real
// axis (arg z > -pi/2), |z| <= 1e4.
Complex hankel1(int order, Complex z);

// d/dz H^(1)_n(z).
Complex hankel1_derivative(int order, Complex z);

// Scaled Hankel functions: hankel1_scaled = e^{-iz} H^(1)_n(z) and
// hankel2_scaled = e^{+iz} H^(2)_n(z). These stay O(1) where the plain
// functions overflow; no |z| cap (any nonzero z with the phase exponent
// handled by the caller).
Complex hankel1_scaled(int order, Complex z);
Complex hankel2_scaled(int order, Complex z);

// Parabolic cylinder value in the integral convention
//   D(z) = (2/sqrt(pi)) e^{-z^2/2} \int_0^inf e^{-z s - s^2/2} sqrt(s) ds,
// equal to e^{-z^2/4} times the standard D_{-3/2}(z).
Complex parabolic_cylinder_D_neg32(Complex z);

// Semi-infinite oscillatory integral \int_0^inf f(lambda) dlambda. The
// contour is rotated to lambda = t e^{i delta} (delta from the spec); the
// integrand must be analytic in the swept sector and must not grow there.
// With delta = 0 the integrand itself must decay along the real axis.
// Throws AccuracyError when the panel sequence fails to converge.
QuadResult oscillatory_integral(const std::function<Complex(Complex)>& integrand,
                                const QuadratureSpec& spec = {});

// Adaptive Gauss quadrature of f over the real interval [a, b].
QuadResult integrate_interval(const std::function<Complex(double)>& f, double a,
                              double b, double rel_tol = 1e-10, int max_depth = 24);

// Integral of f along the ray base + t*dir, t in [0, inf). decay_scale sets
// the initial panel width (roughly the e-folding length of |f| along the
// ray). Used for the contour pieces where oscillatory_integral's fixed
// upward rotation does not fit.
QuadResult ray_integral(const std::function<Complex(Complex)>& f, Complex base,
                        Complex dir, double decay_scale, double rel_tol = 1e-10,
                        int max_depth = 24);

namespace detail {

// Bare integrals behind the parabolic cylinder values:
//   B32(z) = \int_0^inf sqrt(s) e^{-z s - s^2/2} ds
//   B12(z) = \int_0^inf s^{-1/2} e^{-z s - s^2/2} ds
// computed through the substitution s = t^2, which removes the endpoint
// singularity. Ratio of the standard-convention D functions:
//   D_{-1/2}(z) / D_{-3/2}(z) = (B12 / B32) / 2.
Complex pc_bare_32(Complex z);
Complex pc_bare_12(Complex z);

// Fixed 8-point Gauss-Legendre rule on [0, 1]: nodes and weights.
inline constexpr double kGauss8Node[8] = {
    0.01985507175123191193, 0.10166676129318663602, 0.23723379504183550459,
    0.40828267875217510996, 0.59171732124782483453, 0.76276620495816449541,
    0.89833323870681336398, 0.98014492824876808807};
inline constexpr double kGauss8Weight[8] = {
    0.05061426814518834444, 0.11119051722668717164, 0.15685332293894352351,
    0.18134189168918088408, 0.18134189168918088408, 0.15685332293894352351,
    0.11119051722668717164, 0.05061426814518834444};

}  // namespace detail

}  // namespace petd
