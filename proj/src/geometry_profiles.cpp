#include "petd/geometry_profiles.hpp"

#include <algorithm>
#include <cmath>

namespace petd {

void validate(const WaveParams& wp) {
    if (!(wp.k.real() > 0.0)) throw std::domain_error("WaveParams: Re k must be > 0");
    if (!(wp.k.imag() >= 0.0)) throw std::domain_error("WaveParams: Im k must be >= 0");
    if (!(wp.theta >= 0.0)) throw std::domain_error("WaveParams: theta must be >= 0");
}

Profile make_cone(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("make_cone: alpha outside (0, 1)");
    Profile p;
    p.x_start = 0.0;
    p.x_end = std::numeric_limits<double>::infinity();
    p.f = [alpha](double x) { return alpha * x; };
    p.f_dot = [alpha](double) { return alpha; };
    p.f_ddot = [](double) { return 0.0; };
    return p;
}

Profile make_spindle(double alpha, double x1, double x2) {
    if (!(alpha > 0.0)) throw std::domain_error("make_spindle: alpha must be > 0");
    if (!(x1 < x2)) throw std::domain_error("make_spindle: degenerate interval");
    double len = x2 - x1;
    Profile p;
    p.x_start = x1;
    p.x_end = x2;
    p.f = [alpha, x1, x2, len](double x) { return 4.0 * alpha * (x - x1) * (x2 - x) / len; };
    p.f_dot = [alpha, x1, x2, len](double x) { return 4.0 * alpha * (x1 + x2 - 2.0 * x) / len; };
    p.f_ddot = [alpha, len](double) { return -8.0 * alpha / len; };
    return p;
}

ParaxialityReport validate_paraxial(const Profile& profile, const WaveParams& wp,
                                    double threshold) {
    validate(wp);
    ParaxialityReport rep;
    rep.theta = wp.theta;
    rep.threshold = threshold;

    double hi = std::isfinite(profile.x_end) ? profile.x_end : profile.x_start + 1000.0;
    double lo = profile.x_start;
    const int samples = 4097;
    double max_slope = 0.0, max_curv = 0.0;
    for (int i = 0; i < samples; ++i) {
        double x = lo + (hi - lo) * i / (samples - 1);
        max_slope = std::max(max_slope, std::abs(profile.f_dot(x)));
        max_curv = std::max(max_curv, std::abs(profile.f_ddot(x)));
    }
    rep.max_slope = max_slope;
    rep.max_fock_angle = std::cbrt(max_curv / wp.k.real());
    rep.theta_ok = rep.theta <= threshold;
    rep.slope_ok = rep.max_slope <= threshold;
    rep.fock_ok = rep.max_fock_angle <= threshold;
    return rep;
}

}  // namespace petd
