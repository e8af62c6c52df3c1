#pragma once

// Special-function and quadrature kernels shared by the physics modules:
// sinc, Bessel J1 with its zeros, semi-infinite adaptive quadrature,
// alternating series summation and a cancellation-safe sinh kernel.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace zpd {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

struct ComplexQuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

struct SeriesResult {
    double value = 0.0;
    double last_term_magnitude = 0.0;
    std::int64_t terms_used = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::int64_t max_evaluations = 100000;
};

inline double sinc(double x) {
    const double x2 = x * x;
    if (x2 < 1e-8) {
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1].
inline constexpr double kGkNode[8] = {
    0.0,
    0.207784955007898,
    0.405845151377397,
    0.586087235467691,
    0.741531185599394,
    0.864864423359769,
    0.949107912342759,
    0.991455371120813,
};
inline constexpr double kKronrodWeight[8] = {
    0.209482141084728,
    0.204432940075298,
    0.190350578064785,
    0.169004726639267,
    0.140653259715525,
    0.104790010322250,
    0.063092092629979,
    0.022935322010529,
};
// Nonzero only on the Gauss subset (even node indices).
inline constexpr double kGaussWeight[8] = {
    0.417959183673469,
    0.0,
    0.381830050505119,
    0.0,
    0.279705391489277,
    0.0,
    0.129484966168870,
    0.0,
};

template <class T>
inline double value_norm(const T& v) {
    if constexpr (std::is_same_v<T, std::complex<double>>) {
        return std::abs(v);
    } else {
        return std::abs(static_cast<double>(v));
    }
}

template <class T, class F>
inline void gk15(F&& f, double a, double b, T& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T samples[15];
    samples[0] = f(mid);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGkNode[i];
        samples[2 * i - 1] = f(mid + dx);
        samples[2 * i] = f(mid - dx);
    }
    T g7{};
    T k15{};
    g7 += kGaussWeight[0] * samples[0];
    k15 += kKronrodWeight[0] * samples[0];
    for (int i = 1; i < 8; ++i) {
        const T yi = samples[2 * i - 1] + samples[2 * i];
        g7 += kGaussWeight[i] * yi;
        k15 += kKronrodWeight[i] * yi;
    }
    // Mean value of f over the panel (Kronrod weights sum to 2).
    const T mean = 0.5 * k15;
    double resasc = kKronrodWeight[0] * value_norm<T>(samples[0] - mean);
    for (int i = 1; i < 8; ++i) {
        resasc += kKronrodWeight[i] * (value_norm<T>(samples[2 * i - 1] - mean) +
                                       value_norm<T>(samples[2 * i] - mean));
    }
    resasc *= std::abs(half);
    value = half * k15;
    double err = std::abs(half) * value_norm<T>(k15 - g7);
    // QUADPACK-style rescaling: the raw Kronrod/Gauss difference
    // underestimates the true error on rough panels; inflate it against the
    // integrated deviation from the mean.
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    error = err;
}

template <class T>
struct AdaptiveOutcome {
    T value{};
    double error = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
};

// Globally adaptive bisection: repeatedly split the worst segment until the
// summed error estimate meets max(abs_tol, rel_tol * |value|).
template <class T, class F>
AdaptiveOutcome<T> integrate_adaptive(F&& f,
                                      const std::vector<std::pair<double, double>>& seeds,
                                      const QuadratureOptions& opt) {
    AdaptiveOutcome<T> out;
    std::vector<Segment<T>> segs;
    segs.reserve(64);
    T total{};
    double total_err = 0.0;
    for (auto [a, b] : seeds) {
        Segment<T> s{a, b, T{}, 0.0};
        gk15<T>(f, a, b, s.value, s.error);
        out.evaluations += 15;
        total += s.value;
        total_err += s.error;
        segs.push_back(s);
    }
    auto tolerance = [&] {
        return std::max(opt.abs_tol, opt.rel_tol * value_norm<T>(total));
    };
    while (total_err > tolerance()) {
        if (out.evaluations + 30 > opt.max_evaluations) {
            break;
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i) {
            if (segs[i].error > segs[worst].error) worst = i;
        }
        Segment<T> parent = segs[worst];
        const double mid = 0.5 * (parent.a + parent.b);
        if (!(mid > parent.a && mid < parent.b)) {
            break;  // interval exhausted at machine resolution
        }
        Segment<T> left{parent.a, mid, T{}, 0.0};
        Segment<T> right{mid, parent.b, T{}, 0.0};
        gk15<T>(f, left.a, left.b, left.value, left.error);
        gk15<T>(f, right.a, right.b, right.value, right.error);
        out.evaluations += 30;
        total += left.value + right.value - parent.value;
        total_err += left.error + right.error - parent.error;
        segs[worst] = left;
        segs.push_back(right);
    }
    out.value = total;
    out.error = total_err;
    out.converged = total_err <= tolerance();
    return out;
}

}  // namespace detail

template <class F>
QuadratureResult integrate_finite(F&& f, double a, double b,
                                  const QuadratureOptions& opt = {}) {
    auto res = detail::integrate_adaptive<double>(std::forward<F>(f), {{a, b}}, opt);
    if (!res.converged) {
        throw NonConvergence("integrate_finite: refinement budget exhausted");
    }
    return {res.value, res.error, res.evaluations};
}

template <class F>
ComplexQuadratureResult integrate_finite_complex(F&& f, double a, double b,
                                                 const QuadratureOptions& opt = {}) {
    auto res = detail::integrate_adaptive<std::complex<double>>(std::forward<F>(f),
                                                                {{a, b}}, opt);
    if (!res.converged) {
        throw NonConvergence("integrate_finite_complex: refinement budget exhausted");
    }
    return {res.value, res.error, res.evaluations};
}

namespace detail {

// Semi-infinite integrand mapped onto (0, 2): identity on (0, 1], then the
// reciprocal substitution s = 1/v, v = 2 - t on (1, 2). The reciprocal map
// turns (super-)exponential decay of g into an integrand that is flat near
// t = 2, which the panel error estimator handles reliably.
template <class G>
auto semiinfinite_mapped(G&& g, double singular_power) {
    return [g = std::forward<G>(g), singular_power](double t) -> double {
        if (t <= 1.0) {
            return g(t) * std::pow(t, -singular_power);
        }
        const double v = 2.0 - t;
        const double s = 1.0 / v;
        const double gv = g(s);
        if (gv == 0.0) return 0.0;  // decayed below underflow: no s^p overflow
        return gv * std::pow(s, -singular_power) / (v * v);
    };
}

}  // namespace detail

// Evaluates integral_0^inf g(s) ds / s^p for integrands decaying at least
// exponentially at infinity and integrable (after the caller's subtraction)
// at the origin.
template <class G>
QuadratureResult integrate_semiinfinite(G&& g, double singular_power,
                                        const QuadratureOptions& opt = {}) {
    auto f = detail::semiinfinite_mapped(std::forward<G>(g), singular_power);
    auto res = detail::integrate_adaptive<double>(f, {{0.0, 1.0}, {1.0, 2.0}}, opt);
    if (!res.converged) {
        throw NonConvergence("integrate_semiinfinite: refinement budget exhausted");
    }
    return {res.value, res.error, res.evaluations};
}

// Same as integrate_semiinfinite but reports failure instead of throwing;
// used by the integrability probe on deliberately divergent integrands.
template <class G>
detail::AdaptiveOutcome<double> integrate_semiinfinite_outcome(
    G&& g, double singular_power, const QuadratureOptions& opt = {}) {
    auto f = detail::semiinfinite_mapped(std::forward<G>(g), singular_power);
    return detail::integrate_adaptive<double>(f, {{0.0, 1.0}, {1.0, 2.0}}, opt);
}

// Sums term(1) + term(2) + ... until the last term magnitude drops below
// rel_tol * |partial sum| (or below the 1e-300 underflow floor). For strictly
// alternating decreasing terms the truncation error is bounded by the first
// omitted term.
inline SeriesResult sum_alternating(const std::function<double(std::int64_t)>& term,
                                    double rel_tol) {
    constexpr std::int64_t kMaxTerms = 1000000;
    constexpr double kFloor = 1e-300;
    double partial = 0.0;
    double last = 0.0;
    for (std::int64_t n = 1; n <= kMaxTerms; ++n) {
        const double t = term(n);
        partial += t;
        last = std::abs(t);
        if (last <= kFloor || last <= rel_tol * std::abs(partial)) {
            return {partial, last, n};
        }
    }
    throw NonConvergence("sum_alternating: tolerance not reached within 1e6 terms");
}

namespace detail {

inline double bessel_j1_series(double x) {
    const double q = -0.25 * x * x;
    double term = 0.5 * x;
    double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= q / (static_cast<double>(m) * (m + 1));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

inline double bessel_j1_asymptotic(double x) {
    // Hankel expansion, mu = 4 nu^2 = 4.
    constexpr double mu = 4.0;
    double p = 1.0, q = 0.0;
    double am = 1.0;
    double xpow = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int m = 1; m <= 40; ++m) {
        const double odd = 2.0 * m - 1.0;
        am *= (mu - odd * odd) / (8.0 * m);
        xpow /= x;
        const double t = am * xpow;
        if (std::abs(t) >= prev) break;  // divergent tail reached
        prev = std::abs(t);
        const int k = m / 2;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        if (m % 2 == 1) {
            q += sign * t;
        } else {
            p += sign * t;
        }
        if (std::abs(t) < 1e-18) break;
    }
    const double chi = x - 2.356194490192344929;  // 3*pi/4
    return std::sqrt(2.0 / (3.141592653589793238 * x)) *
           (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

inline double bessel_j1(double x) {
    const double ax = std::abs(x);
    double v = (ax <= 12.0) ? detail::bessel_j1_series(ax)
                            : detail::bessel_j1_asymptotic(ax);
    return x < 0.0 ? -v : v;
}

// First k positive zeros of J1, each located by bisection to machine width.
inline std::vector<double> bessel_j1_zeros(int k) {
    if (k < 1) throw DomainError("bessel_j1_zeros: k must be >= 1");
    constexpr double pi = 3.141592653589793238;
    std::vector<double> zeros;
    zeros.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        // McMahon estimate for j_{1,i}.
        const double approx = (i + 0.25) * pi;
        double a = approx - 0.6;
        double b = approx + 0.6;
        double fa = bessel_j1(a);
        double fb = bessel_j1(b);
        int widen = 0;
        while (fa * fb > 0.0 && widen++ < 8) {
            a -= 0.2;
            b += 0.2;
            fa = bessel_j1(a);
            fb = bessel_j1(b);
        }
        if (fa * fb > 0.0) throw NonConvergence("bessel_j1_zeros: bracketing failed");
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (!(mid > a && mid < b)) break;
            const double fm = bessel_j1(mid);
            if (fa * fm <= 0.0) {
                b = mid;
                fb = fm;
            } else {
                a = mid;
                fa = fm;
            }
        }
        zeros.push_back(0.5 * (a + b));
    }
    return zeros;
}

// 1 - x/sinh(x) without cancellation near the origin.
inline double one_minus_x_over_sinh(double x) {
    if (x < 0.0) throw DomainError("one_minus_x_over_sinh: requires x >= 0");
    if (x < 1e-3) {
        const double x2 = x * x;
        return x2 / 6.0 - 7.0 * x2 * x2 / 360.0;
    }
    if (x > 350.0) return 1.0;  // x/sinh(x) below double underflow
    return 1.0 - x / std::sinh(x);
}

// 1 - x/sinh(x) - x^2/6: the doubly subtracted proper-time kernel. The
// quadratic piece is removed in series form below the crossover so the
// leading -7x^4/360 behaviour survives in floating point.
inline double subtracted_sinh_bracket(double x) {
    if (x < 0.0) throw DomainError("subtracted_sinh_bracket: requires x >= 0");
    if (x < 0.05) {
        const double x2 = x * x;
        const double x4 = x2 * x2;
        return -7.0 * x4 / 360.0 + 31.0 * x4 * x2 / 15120.0 -
               127.0 * x4 * x4 / 604800.0;
    }
    return one_minus_x_over_sinh(x) - x * x / 6.0;
}

}  // namespace zpd
