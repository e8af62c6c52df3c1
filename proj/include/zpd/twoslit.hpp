#pragma once

// Two-slit diffraction engine: the Young x Fraunhofer closed form, its
// interference limit, fringe positions, single-slit and circular-aperture
// patterns, the top-hat density matrix, and the brute-force forward/backward
// integral oracle in quadratic and exact phase modes.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zpd/specfun.hpp"

namespace zpd::twoslit {

inline constexpr double kPi = 3.141592653589793238462643383;

struct SlitGeometry {
    double slit_width;       // w
    double half_separation;  // d (slit centers at +/- d)
    double screen_distance;  // D
    double wavelength;       // lambda

    SlitGeometry(double w, double d, double D, double lambda)
        : slit_width(w), half_separation(d), screen_distance(D), wavelength(lambda) {
        if (!(w > 0.0) || !(d > 0.0) || !(D > 0.0) || !(lambda > 0.0)) {
            throw DomainError("SlitGeometry: all lengths must be positive");
        }
        if (!(w < d)) throw DomainError("SlitGeometry: requires w < d");
        if (!(d < D)) throw DomainError("SlitGeometry: requires d < D");
    }

    // Soft flags, never errors.
    bool fraunhofer_warning() const {
        return screen_distance < 100.0 * half_separation ||
               half_separation < 10.0 * slit_width;
    }
    bool subwavelength() const { return slit_width < wavelength; }
    bool ground_state_confined() const { return slit_width < wavelength / kPi; }

    double aspect_ratio() const { return slit_width / half_separation; }  // beta
    double fringe_spacing() const {
        return 0.5 * wavelength * screen_distance / half_separation;
    }
};

// K = (2 pi / lambda)(d / D); hbar-free by construction.
inline double wavenumber(const SlitGeometry& g) {
    return 2.0 * kPi / g.wavelength * g.half_separation / g.screen_distance;
}

// P(x; D) = (4 beta K / pi) cos^2(Kx) sinc^2(beta K x), 1/length.
inline double intensity(double x, const SlitGeometry& g) {
    const double k = wavenumber(g);
    const double beta = g.aspect_ratio();
    const double young = std::cos(k * x);
    const double envelope = sinc(beta * k * x);
    return 4.0 * beta * k / kPi * young * young * envelope * envelope;
}

// beta -> 0 limit of intensity/(beta K): (4/pi) cos^2(Kx).
inline double interference_limit(double x, double k) {
    if (!(k > 0.0)) throw DomainError("interference_limit: requires K > 0");
    const double c = std::cos(k * x);
    return 4.0 / kPi * c * c;
}

struct FringePositions {
    std::vector<double> maxima;  // x = (lambda/2)(D/d) n
    std::vector<double> minima;  // x = (lambda/2)(D/d)(n + 1/2)
};

inline FringePositions fringe_positions(const SlitGeometry& g, int n_max) {
    if (n_max < 0) throw DomainError("fringe_positions: requires n_max >= 0");
    FringePositions fp;
    const double spacing = g.fringe_spacing();
    for (int n = 0; n <= n_max; ++n) {
        fp.maxima.push_back(spacing * n);
        fp.minima.push_back(spacing * (n + 0.5));
    }
    return fp;
}

// Single-slit diffractive factor S(x) = sinc^2(eta), eta = 2 pi x w/(lambda D);
// first minimum at x1 = lambda D/(2w).
inline double single_slit(double x, double w, double lambda, double D) {
    if (!(w > 0.0) || !(lambda > 0.0) || !(D > 0.0)) {
        throw DomainError("single_slit: parameters must be positive");
    }
    const double eta = 2.0 * kPi * x * w / (lambda * D);
    const double s = sinc(eta);
    return s * s;
}

// Circular-aperture factor [2 J1(eta)/eta]^2, eta = (2 pi/lambda)(w/D) R;
// central maximum 1, dark rings at the zeros of J1.
inline double circular_pattern(double R, double w, double lambda, double D) {
    if (!(w > 0.0) || !(lambda > 0.0) || !(D > 0.0)) {
        throw DomainError("circular_pattern: parameters must be positive");
    }
    const double eta = 2.0 * kPi / lambda * w / D * R;
    if (std::abs(eta) < 1e-4) {
        // 2 J1(eta)/eta = 1 - eta^2/8 + eta^4/192
        const double e2 = eta * eta;
        const double f = 1.0 - e2 / 8.0 + e2 * e2 / 192.0;
        return f * f;
    }
    const double f = 2.0 * bessel_j1(eta) / eta;
    return f * f;
}

namespace detail {

// Top-hat slit amplitude, phi = 1/sqrt(w) on |x| < w/2.
inline double top_hat(double x, double w) {
    return std::abs(x) < 0.5 * w ? 1.0 / std::sqrt(w) : 0.0;
}

}  // namespace detail

// (x+|rho0|x-) = psi0*(x-) psi0(x+) with psi0 the symmetric two-slit top-hat
// state; four products of phi(x -+ d).
inline double density_matrix(double x_plus, double x_minus, const SlitGeometry& g) {
    const double d = g.half_separation;
    const double w = g.slit_width;
    auto psi0 = [&](double x) {
        return (detail::top_hat(x - d, w) + detail::top_hat(x + d, w)) /
               std::sqrt(2.0);
    };
    return psi0(x_minus) * psi0(x_plus);
}

enum class PhaseMode { quadratic, exact };

namespace detail {

// The brute-force oracle uses aperture amplitudes of half-width w (so the
// Fraunhofer factor comes out as sinc^2(beta K x), matching the closed form),
// normalized to the closed-form prefactor 4 beta K/pi at x = 0.
struct OracleGeometry {
    double d, w, D, lambda;
    double normalization;

    explicit OracleGeometry(const SlitGeometry& g)
        : d(g.half_separation),
          w(g.slit_width),
          D(g.screen_distance),
          lambda(g.wavelength),
          normalization(g.aspect_ratio() * wavenumber(g) / (kPi * g.slit_width)) {}

    double amp_norm() const { return 1.0 / std::sqrt(2.0 * (2.0 * w)); }
};

// Phase of the exact propagation kernel relative to the on-axis path:
// (2 pi / lambda)(sqrt(D^2 + u^2) - D), evaluated cancellation-free.
inline double exact_phase(double u, double D, double lambda) {
    const double excess = u * u / (std::sqrt(D * D + u * u) + D);
    return 2.0 * kPi / lambda * excess;
}

template <class Phase>
ComplexQuadratureResult slit_amplitude(const OracleGeometry& og, double center,
                                       Phase&& phase, const QuadratureOptions& opt) {
    const double n = og.amp_norm();
    return integrate_finite_complex(
        [&](double xp) {
            return n * std::exp(std::complex<double>{0.0, -phase(xp)});
        },
        center - og.w, center + og.w, opt);
}

}  // namespace detail

// Brute-force evaluation of the forward/backward double integral. The density
// matrix factorizes, so the default path computes one complex amplitude per
// slit pair and squares it; see brute_force_intensity_2d for the generic
// non-factorized route.
inline QuadratureResult brute_force_intensity(double x, const SlitGeometry& g,
                                              PhaseMode mode,
                                              const QuadratureOptions& opt = {}) {
    const detail::OracleGeometry og(g);
    auto phase = [&](double xp) {
        if (mode == PhaseMode::quadratic) {
            return 2.0 * kPi * x / (og.lambda * og.D) * xp;
        }
        return detail::exact_phase(x - xp, og.D, og.lambda);
    };
    const auto a_plus = detail::slit_amplitude(og, og.d, phase, opt);
    const auto a_minus = detail::slit_amplitude(og, -og.d, phase, opt);
    const std::complex<double> amp = a_plus.value + a_minus.value;
    const double amp_err = a_plus.abs_error_estimate + a_minus.abs_error_estimate;
    QuadratureResult out;
    out.value = og.normalization * std::norm(amp);
    out.abs_error_estimate = og.normalization * 2.0 * std::abs(amp) * amp_err;
    out.evaluations = a_plus.evaluations + a_minus.evaluations;
    return out;
}

// Generic iterated 2D quadrature over the (x+, x-) support rectangles, with
// no use of the factorized structure; cross-validation path only.
inline QuadratureResult brute_force_intensity_2d(double x, const SlitGeometry& g,
                                                 PhaseMode mode,
                                                 const QuadratureOptions& opt = {}) {
    const detail::OracleGeometry og(g);
    auto phase = [&](double xp) {
        if (mode == PhaseMode::quadratic) {
            return 2.0 * kPi * x / (og.lambda * og.D) * xp;
        }
        return detail::exact_phase(x - xp, og.D, og.lambda);
    };
    const double n2 = og.amp_norm() * og.amp_norm();
    std::int64_t evals = 0;
    double err = 0.0;
    std::complex<double> total{};
    const double centers[2] = {og.d, -og.d};
    for (double cp : centers) {
        for (double cm : centers) {
            auto inner = [&](double xp) {
                auto res = integrate_finite_complex(
                    [&](double xm) {
                        return std::exp(
                            std::complex<double>{0.0, phase(xp) - phase(xm)});
                    },
                    cm - og.w, cm + og.w, opt);
                evals += res.evaluations;
                return res.value;
            };
            auto outer = ::zpd::detail::integrate_adaptive<std::complex<double>>(
                [&](double xp) { return inner(xp); }, {{cp - og.w, cp + og.w}},
                opt);
            if (!outer.converged) {
                throw NonConvergence("brute_force_intensity_2d: outer integral");
            }
            total += n2 * outer.value;
            err += n2 * outer.error;
            evals += outer.evaluations;
        }
    }
    QuadratureResult out;
    out.value = og.normalization * total.real();
    out.abs_error_estimate = og.normalization * (err + std::abs(total.imag()));
    out.evaluations = evals;
    return out;
}

struct Pattern {
    std::vector<double> positions;
    std::vector<double> values;
    std::string mode;
};

// Screen pattern on a uniform grid; defaults cover +/- 5 fringe spacings with
// 1001 points.
inline Pattern compute_pattern(const SlitGeometry& g, PhaseMode mode,
                               bool closed_form, int points = 1001,
                               double span_fringes = 5.0) {
    if (points < 2) throw DomainError("compute_pattern: requires points >= 2");
    Pattern p;
    p.mode = closed_form ? "closed"
                         : (mode == PhaseMode::quadratic ? "quadratic" : "exact");
    const double half_span = span_fringes * g.fringe_spacing();
    p.positions.reserve(points);
    p.values.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double x = -half_span + 2.0 * half_span * i / (points - 1);
        p.positions.push_back(x);
        p.values.push_back(closed_form ? intensity(x, g)
                                       : brute_force_intensity(x, g, mode).value);
    }
    return p;
}

}  // namespace zpd::twoslit
