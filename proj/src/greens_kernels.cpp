#include "petd/greens_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace petd {

namespace {

const Complex kI(0.0, 1.0);

// (-i)^n for n >= 0
Complex ipow_minus_i(int n) {
    switch (n & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

// one-sided asymptotic sum for the scaled Hankel functions in double
// precision; caller guarantees |z| >= ~12 where truncation error ~ e^{-2|z|}
Complex asym_scaled_fast(int n, Complex z, int kind) {
    double mu = 4.0 * n * n;
    Complex rot = (kind == 1) ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    Complex sum = 1.0, term = 1.0;
    double prev = 1e300;
    for (int m = 1; m <= 40; ++m) {
        double odd = 2.0 * m - 1.0;
        term *= rot * (mu - odd * odd) / (8.0 * m * z);
        double a = std::abs(term);
        if (a >= prev) break;
        sum += term;
        if (a < 1e-15 * std::abs(sum)) break;
        prev = a;
    }
    double phase = n * kPi / 2.0 + kPi / 4.0;
    Complex pref = std::sqrt(2.0 / (kPi * z)) *
                   Complex(std::cos(phase), (kind == 1) ? -std::sin(phase) : std::sin(phase));
    return pref * sum;
}

// scaled Hankel of orders 0..nmax by upward recurrence from the asymptotic
// base; valid for |z| >= ~12
void scaled_hankel_ladder(int nmax, Complex z, int kind, std::vector<Complex>& out) {
    out.resize(nmax + 1);
    out[0] = asym_scaled_fast(0, z, kind);
    if (nmax == 0) return;
    out[1] = asym_scaled_fast(1, z, kind);
    for (int m = 1; m < nmax; ++m) out[m + 1] = (2.0 * m / z) * out[m] - out[m - 1];
}

// J_n and J_{n+1}, double precision, |z| modest (the kernel fast path)
void j_two_orders(int n, Complex z, Complex& jn, Complex& jn1) {
    double az = std::abs(z);
    if (az == 0.0) {
        jn = (n == 0) ? 1.0 : 0.0;
        jn1 = 0.0;
        return;
    }
    if (z.real() < 0.0) {
        // keep the asymptotic branches away from arg z ~ +-pi, where the
        // one-sided Hankel sums drop the subdominant exponential
        j_two_orders(n, -z, jn, jn1);
        if (n % 2) jn = -jn; else jn1 = -jn1;
        return;
    }
    if (az <= 12.0) {
        Complex q = -0.25 * z * z;
        for (int ord = n; ord <= n + 1; ++ord) {
            Complex half = 0.5 * z;
            Complex term = 1.0;
            for (int m = 1; m <= ord; ++m) term *= half / static_cast<double>(m);
            Complex sum = term;
            for (int m = 1; m < 60; ++m) {
                term *= q / static_cast<double>(m * (m + ord));
                sum += term;
                if (std::norm(term) < 1e-30 * std::norm(sum)) break;
            }
            (ord == n ? jn : jn1) = sum;
        }
        return;
    }
    int top = n + 1;
    if (2.0 * az >= static_cast<double>(top) * top) {
        std::vector<Complex> h1, h2;
        scaled_hankel_ladder(top, z, 1, h1);
        scaled_hankel_ladder(top, z, 2, h2);
        Complex eiz = std::exp(kI * z);
        jn = 0.5 * (h1[n] * eiz + h2[n] / eiz);
        jn1 = 0.5 * (h1[top] * eiz + h2[top] / eiz);
        return;
    }
    // backward recurrence, normalized by J_0 + 2 sum J_{2m} = 1
    int m0 = top + static_cast<int>(az) + 32;
    if (m0 % 2) ++m0;
    Complex jp = 0.0, jc = 1e-280, sum = 0.0, tn = 0.0, tn1 = 0.0;
    for (int m = m0; m >= 1; --m) {
        Complex jm = (2.0 * m / z) * jc - jp;
        jp = jc;
        jc = jm;
        int idx = m - 1;
        if (idx == n) tn = jc;
        if (idx == top) tn1 = jc;
        if ((idx & 1) == 0) sum += (idx == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            sum *= 1e-250;
            tn *= 1e-250;
            tn1 *= 1e-250;
        }
    }
    jn = tn / sum;
    jn1 = tn1 / sum;
}

}  // namespace

namespace detail {

void j_pair_fast(int n, Complex z, Complex& jn, Complex& jn_dot) {
    Complex a, b;
    if (n == 0) {
        j_two_orders(0, z, a, b);
        jn = a;
        jn_dot = -b;
        return;
    }
    j_two_orders(n, z, a, b);
    jn = a;
    if (z == Complex(0.0, 0.0)) {
        jn_dot = (n == 1) ? Complex(0.5, 0.0) : Complex(0.0, 0.0);
    } else {
        jn_dot = (static_cast<double>(n) / z) * a - b;
    }
}

Complex kernel_modal_jform(const KernelEvaluator& ke, int n, double x_star, double x) {
    int an = n < 0 ? -n : n;
    Complex k = ke.wp.k;
    double f = ke.profile.f(x);
    double fd = ke.profile.f_dot(x);
    double fs = ke.profile.f(x_star);
    double dx = x_star - x;
    Complex beta = k * fs * f / dx;
    Complex jn, jd;
    j_pair_fast(an, beta, jn, jd);
    Complex expo = std::exp(0.5 * kI * k * (fs * fs + f * f) / dx);
    Complex pref = kI * k * f / (dx * dx) * ipow_minus_i(an) * expo;
    return pref * ((f + dx * fd) * jn - kI * fs * jd);
}

ProfileSample sample_profile(const Profile& p, Complex x, double base) {
    double f0 = p.f(base), f1 = p.f_dot(base), f2 = p.f_ddot(base);
    Complex d = x - base;
    return {f0 + f1 * d + 0.5 * f2 * d * d, f1 + f2 * d};
}

Complex kernel_modal_h1(const KernelEvaluator& ke, int n, double x_star, Complex x) {
    n = n < 0 ? -n : n;
    Complex k = ke.wp.k;
    double base = std::clamp(x.real(), ke.profile.x_start, x_star);
    ProfileSample s = sample_profile(ke.profile, x, base);
    double fs = ke.profile.f(x_star);
    Complex dx = x_star - x;
    Complex beta = k * fs * s.f / dx;
    Complex h_lo = (n == 0) ? -hankel1_scaled(1, beta) : hankel1_scaled(n - 1, beta);
    Complex h_n = hankel1_scaled(n, beta);
    Complex h_hi = hankel1_scaled(n + 1, beta);
    Complex h_dot = 0.5 * (h_lo - h_hi);
    Complex sum_sq = fs + s.f;
    Complex expo = std::exp(0.5 * kI * k * sum_sq * sum_sq / dx);
    Complex pref = 0.5 * kI * k * s.f / (dx * dx) * ipow_minus_i(n) * expo;
    return pref * ((s.f + dx * s.f_dot) * h_n - kI * fs * h_dot);
}

Complex kernel_modal_h2(const KernelEvaluator& ke, int n, double x_star, double x) {
    n = n < 0 ? -n : n;
    Complex k = ke.wp.k;
    double f = ke.profile.f(x);
    double fd = ke.profile.f_dot(x);
    double fs = ke.profile.f(x_star);
    double dx = x_star - x;
    Complex beta = k * fs * f / dx;
    Complex h_lo = (n == 0) ? -hankel2_scaled(1, beta) : hankel2_scaled(n - 1, beta);
    Complex h_n = hankel2_scaled(n, beta);
    Complex h_hi = hankel2_scaled(n + 1, beta);
    Complex h_dot = 0.5 * (h_lo - h_hi);
    double dif_sq = (fs - f) * (fs - f);
    Complex expo = std::exp(0.5 * kI * k * dif_sq / dx);
    Complex pref = 0.5 * kI * k * f / (dx * dx) * ipow_minus_i(n) * expo;
    return pref * ((f + dx * fd) * h_n - kI * fs * h_dot);
}

}  // namespace detail

Complex greens(const SpacePoint& obs, const SpacePoint& src, const WaveParams& wp) {
    if (obs.x <= src.x) return {0.0, 0.0};
    double dx = obs.x - src.x;
    double dr2 = obs.r * obs.r + src.r * src.r -
                 2.0 * obs.r * src.r * std::cos(obs.phi - src.phi);
    Complex k = wp.k;
    return k / (2.0 * kPi * kI * dx) * std::exp(0.5 * kI * k * dr2 / dx);
}

Complex continuation_apply(const std::function<Complex(double, double)>& v,
                           double plane_x, const SpacePoint& target,
                           const WaveParams& wp, const QuadratureSpec& spec) {
    validate(spec);
    if (!(target.x > plane_x))
        throw std::domain_error("continuation_apply: target must lie downstream");
    double dx = target.x - plane_x;
    double imk = wp.k.imag();
    double scale = imk > 0.0 ? std::sqrt(2.0 * dx / imk) : 1.0 + std::abs(target.r);
    double inner_tol = 0.2 * spec.relative_tolerance;

    // noise_sum tracks the error estimates of the radial integrals; the
    // angular sum cannot be trusted below their average
    double noise_sum = 0.0;
    auto radial = [&](double phi) {
        auto f = [&](Complex rc) {
            double r = rc.real();
            SpacePoint src{plane_x, r, phi};
            return greens(target, src, wp) * v(r, phi) * r;
        };
        QuadResult q = ray_integral(f, Complex(0.0, 0.0), Complex(1.0, 0.0), scale, inner_tol,
                                    spec.max_subdivisions);
        noise_sum += q.error_estimate;
        return q.value;
    };

    int nodes = 8;
    std::vector<Complex> vals(nodes);
    for (int j = 0; j < nodes; ++j) vals[j] = radial(2.0 * kPi * j / nodes);
    Complex prev = 0.0;
    for (const Complex& c : vals) prev += c;
    prev *= 2.0 * kPi / nodes;
    double prev_change = 1e300;
    int total_evals = nodes;

    for (int round = 0; round < 10; ++round) {
        int twice = 2 * nodes;
        std::vector<Complex> next(twice);
        for (int j = 0; j < nodes; ++j) next[2 * j] = vals[j];
        for (int j = 0; j < nodes; ++j)
            next[2 * j + 1] = radial(2.0 * kPi * (2 * j + 1) / twice);
        total_evals += nodes;
        vals.swap(next);
        nodes = twice;
        Complex cur = 0.0;
        for (const Complex& c : vals) cur += c;
        cur *= 2.0 * kPi / nodes;
        double change = std::abs(cur - prev);
        if (change <= spec.relative_tolerance * std::abs(cur)) return cur;
        // when the angular sum cancels to below the accuracy the radial
        // integrals were resolved at, the change plateaus and further
        // doubling cannot help; two consecutive sub-floor rounds guard
        // against an aliasing fluke on a coarse grid
        double floor = 2.0 * kPi * noise_sum / total_evals;
        if (change <= floor && prev_change <= floor) return cur;
        prev_change = change;
        prev = cur;
    }
    throw AccuracyError("continuation_apply: angular quadrature did not settle", prev, 0.0);
}

Complex kernel_full(const KernelEvaluator& ke, double x_star, double phi_star,
                    double x, double phi) {
    if (!(x_star > x)) throw std::domain_error("kernel_full: requires x_star > x");
    Complex k = ke.wp.k;
    double f = ke.profile.f(x);
    double fd = ke.profile.f_dot(x);
    double fs = ke.profile.f(x_star);
    double dx = x_star - x;
    double c = std::cos(phi - phi_star);
    Complex expo = std::exp(0.5 * kI * k * (fs * fs + f * f - 2.0 * fs * f * c) / dx);
    return kI * k * f / (2.0 * kPi) * (fd / dx + (f - fs * c) / (dx * dx)) * expo;
}

Complex kernel_modal(const KernelEvaluator& ke, int n, double x_star, double x,
                     double rel_tol) {
    if (!(x_star > x)) throw std::domain_error("kernel_modal: requires x_star > x");
    double f = ke.profile.f(x);
    double fs = ke.profile.f(x_star);
    double dx = x_star - x;
    double beta_mag = std::abs(ke.wp.k) * fs * f / dx;
    int an = n < 0 ? -n : n;

    int nodes = 64;
    double need = 3.0 * (beta_mag + an) + 32.0;
    while (nodes < need && nodes < (1 << 22)) nodes *= 2;

    auto value_at = [&](int j, int total) {
        double psi = 2.0 * kPi * j / total;
        return kernel_full(ke, x_star, psi, x, 0.0) * std::polar(1.0, -n * psi);
    };

    std::vector<Complex> vals(nodes);
    double peak = 0.0;
    for (int j = 0; j < nodes; ++j) {
        vals[j] = value_at(j, nodes);
        peak = std::max(peak, std::abs(vals[j]));
    }
    Complex prev = 0.0;
    for (const Complex& c : vals) prev += c;
    prev *= 2.0 * kPi / nodes;

    for (int round = 0; round < 14; ++round) {
        int twice = 2 * nodes;
        if (twice > (1 << 23))
            throw AccuracyError(
                "kernel_modal: angular quadrature did not settle; increase Im k or "
                "the axial separation",
                prev, 0.0);
        std::vector<Complex> next(twice);
        for (int j = 0; j < nodes; ++j) next[2 * j] = vals[j];
        for (int j = 0; j < nodes; ++j) {
            next[2 * j + 1] = value_at(2 * j + 1, twice);
            peak = std::max(peak, std::abs(next[2 * j + 1]));
        }
        vals.swap(next);
        nodes = twice;
        Complex cur = 0.0;
        for (const Complex& c : vals) cur += c;
        cur *= 2.0 * kPi / nodes;
        double floor = 1e-13 * peak * 2.0 * kPi;
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), floor)) return cur;
        prev = cur;
    }
    throw AccuracyError(
        "kernel_modal: angular quadrature did not settle; increase Im k or the "
        "axial separation",
        prev, 0.0);
}

Complex kernel_modal_closed(const KernelEvaluator& ke, int n, double x_star, double x) {
    if (!(x_star > x)) throw std::domain_error("kernel_modal_closed: requires x_star > x");
    int an = n < 0 ? -n : n;
    double f = ke.profile.f(x);
    double fs = ke.profile.f(x_star);
    double dx = x_star - x;
    Complex beta = ke.wp.k * fs * f / dx;
    if (std::abs(beta) > 30.0)
        return detail::kernel_modal_h1(ke, an, x_star, Complex(x, 0.0)) +
               detail::kernel_modal_h2(ke, an, x_star, x);
    return detail::kernel_modal_jform(ke, an, x_star, x);
}

Complex kernel_cone0(const WaveParams& wp, double alpha, double x_star, double x) {
    if (!(x_star > x) || !(x > 0.0))
        throw std::domain_error("kernel_cone0: requires x_star > x > 0");
    Complex k = wp.k;
    double a2 = alpha * alpha;
    double dx = x_star - x;
    Complex beta = k * a2 * x_star * x / dx;
    Complex pref = kI * k * a2 * x_star * x / (dx * dx);
    if (std::abs(beta) <= 30.0) {
        Complex j0, j0d;
        detail::j_pair_fast(0, beta, j0, j0d);
        Complex expo = std::exp(0.5 * kI * k * a2 * (x_star * x_star + x * x) / dx);
        return pref * expo * (j0 - kI * j0d);  // J0 + i J1
    }
    double sp = x_star + x, sm = x_star - x;
    Complex e1 = std::exp(0.5 * kI * k * a2 * sp * sp / dx);
    Complex e2 = std::exp(0.5 * kI * k * a2 * sm * sm / dx);
    Complex b1 = hankel1_scaled(0, beta) + kI * hankel1_scaled(1, beta);
    Complex b2 = hankel2_scaled(0, beta) + kI * hankel2_scaled(1, beta);
    return 0.5 * pref * (e1 * b1 + e2 * b2);
}

}  // namespace petd
