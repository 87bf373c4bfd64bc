#pragma once

#include <functional>
#include <limits>

#include "petd/core_numerics.hpp"

namespace petd {

// Body of revolution r = f(x) on x in [x_start, x_end], with analytic first
// and second derivatives. f > 0 on the open interior; f may vanish at the
// ends (conical tip at x_start, closing tip at x_end).
struct Profile {
    double x_start = 0.0;
    double x_end = std::numeric_limits<double>::infinity();
    std::function<double(double)> f;
    std::function<double(double)> f_dot;
    std::function<double(double)> f_ddot;
};

// Incident-wave parameters: complex wavenumber (Re k > 0, Im k >= 0) and
// incidence angle theta >= 0 measured from the body axis.
struct WaveParams {
    Complex k;
    double theta = 0.0;
};

// Throws std::domain_error if the wave parameters violate their ranges.
void validate(const WaveParams& wp);

// Elongation diagnostics: the three smallness quantities and a pass flag for
// each against the same threshold. The report never blocks a computation.
struct ParaxialityReport {
    double theta = 0.0;           // incidence angle
    double max_slope = 0.0;       // sup |f'|
    double max_fock_angle = 0.0;  // sup (|f''| / Re k)^{1/3}
    double threshold = 0.3;
    bool theta_ok = true;
    bool slope_ok = true;
    bool fock_ok = true;
};

// Half-infinite cone f = alpha x starting at the tip x = 0.
// Requires 0 < alpha < 1.
Profile make_cone(double alpha);

// Compact smooth body on [x1, x2]:
//   f(x) = 4 alpha (x - x1)(x2 - x) / (x2 - x1),
// zero at both ends, midpoint radius alpha (x2 - x1), end slopes +-4 alpha.
Profile make_spindle(double alpha, double x1, double x2);

// Scans the profile and reports the three smallness conditions. An infinite
// body is scanned over [x_start, x_start + 1000] (slope and curvature of the
// supported constructors are monotone or constant, so the window suffices).
ParaxialityReport validate_paraxial(const Profile& profile, const WaveParams& wp,
                                    double threshold = 0.3);

}  // namespace petd
