#pragma once

// Self-check suites behind the `verify` CLI subcommand: each module's
// invariants re-measured at runtime, reported as pass/fail with the observed
// deviation against its threshold.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "zpd/blackbody.hpp"
#include "zpd/maxwell.hpp"
#include "zpd/specfun.hpp"
#include "zpd/twoslit.hpp"
#include "zpd/vacuum.hpp"

namespace zpd::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // deviation or fitted quantity
    double threshold = 0.0;  // limit it is compared against
};

namespace detail {

inline constexpr unsigned kSeed = 20240817u;

// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(std::abs(ys[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Golden-section minimum of f on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double rel_tol = 1e-13) {
    constexpr double phi = 0.6180339887498949;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > rel_tol * (std::abs(a) + std::abs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

inline CheckResult bounded(std::string name, double measured, double threshold) {
    return {std::move(name), measured <= threshold, measured, threshold};
}

}  // namespace detail

inline std::vector<CheckResult> verify_blackbody() {
    using namespace blackbody;
    std::vector<CheckResult> out;
    std::mt19937 rng(detail::kSeed);
    std::uniform_real_distribution<double> ux(-30.0, 30.0);

    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
        double x = ux(rng);
        if (std::abs(x) < 1e-3) x = 1e-3;
        const double lhs = symmetrize(x);
        const double rhs = 0.5 / std::tanh(0.5 * std::abs(x));
        dev = std::max(dev, std::abs(lhs - rhs) / std::abs(rhs));
    }
    out.push_back(detail::bounded("symmetrization identity", dev, 1e-13));

    bool monotone = true;
    double prev = energy_with_zpe(0.05);
    for (double x = 0.1; x <= 30.0; x += 0.1) {
        const double cur = energy_with_zpe(x);
        if (!(cur < prev)) monotone = false;
        prev = cur;
    }
    out.push_back({"coth form strictly decreasing", monotone, monotone ? 0.0 : 1.0, 0.0});

    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        const double x = 1e-4 * std::pow(100.0, i / 19.0);
        xs.push_back(x);
        ys.push_back(einstein_stern_excess(x));
    }
    const double slope = detail::loglog_slope(xs, ys);
    out.push_back(detail::bounded("excess quadratic scaling", std::abs(slope - 2.0), 0.01));

    bool floor_ok = true;
    std::uniform_real_distribution<double> up(1e-3, 60.0);
    for (int i = 0; i < 100; ++i) {
        if (energy_with_zpe(up(rng)) < 1.0) floor_ok = false;
    }
    out.push_back({"zero-point floor E_T >= hw/2", floor_ok, floor_ok ? 0.0 : 1.0, 0.0});
    return out;
}

inline std::vector<CheckResult> verify_vacuum() {
    using namespace vacuum;
    std::vector<CheckResult> out;
    std::mt19937 rng(detail::kSeed + 1);
    const auto boson = ChargedFieldSpec::boson();

    double dev = 0.0;
    for (double eps : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double log_form = pair_rate_1d(eps, boson);
        const double series = pair_rate_1d_series(eps, boson).value;
        dev = std::max(dev, std::abs(log_form - series) / std::abs(log_form));
    }
    out.push_back(detail::bounded("1d rate: log vs series", dev, 1e-12));

    dev = 0.0;
    for (double eps : {0.5, 1.0, 2.0}) {
        const double oracle = pair_rate_transverse_oracle(eps, boson, 20);
        const double closed = pair_rate_boson(eps, boson).value;
        dev = std::max(dev, std::abs(oracle - closed) / std::abs(closed));
    }
    out.push_back(detail::bounded("transverse integral vs closed series", dev, 1e-8));

    std::vector<double> bs, us;
    for (int i = 0; i < 12; ++i) {
        const double b = 1e-3 * std::pow(10.0, i / 11.0);
        bs.push_back(b);
        us.push_back(vacuum_energy_density(b, boson));
    }
    const double slope = detail::loglog_slope(bs, us);
    out.push_back(detail::bounded("U(b) quartic slope", std::abs(slope - 4.0), 0.05));
    const double coeff = 7.0 / (5760.0 * kPi * kPi);
    const double b_mid = 3e-3;
    const double measured_coeff =
        std::abs(vacuum_energy_density(b_mid, boson)) / std::pow(b_mid, 4);
    out.push_back(detail::bounded("U(b) quartic coefficient",
                                  std::abs(measured_coeff / coeff - 1.0), 0.01));

    bool exact = true;
    for (double eps : {0.3, 1.0, 3.0}) {
        if (pair_rate_spin(eps, boson).value != pair_rate_boson(eps, boson).value) {
            exact = false;
        }
    }
    out.push_back({"spin-0 reduction exact", exact, exact ? 0.0 : 1.0, 0.0});

    std::uniform_real_distribution<double> ut(-5.0, 5.0);
    std::uniform_real_distribution<double> ua(0.2, 5.0);
    dev = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = ut(rng);
        const double a = ua(rng);
        const double x = classical_path(t, {a, PathBranch::forward});
        const double inv = x * x - t * t;
        const double expect = 1.0 / (a * a);
        dev = std::max(dev, std::abs(inv - expect) / expect);
    }
    out.push_back(detail::bounded("hyperbola invariant", dev, 1e-12));

    bool monotone = true;
    for (int n = 0; n < 5; ++n) {
        for (int ik = 0; ik < 5; ++ik) {
            for (int ib = 0; ib < 5; ++ib) {
                const double k = 0.5 * ik;
                const double b = 0.25 * (ib + 1);
                const double w = landau_frequency(n, k, b, boson);
                if (landau_frequency(n + 1, k, b, boson) <= w) monotone = false;
                if (landau_frequency(n, k + 0.5, b, boson) <= w) monotone = false;
                if (landau_frequency(n, k, b + 0.25, boson) <= w) monotone = false;
            }
        }
    }
    out.push_back({"Landau frequency monotone", monotone, monotone ? 0.0 : 1.0, 0.0});

    std::uniform_real_distribution<double> uab(0.1, 10.0);
    dev = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = uab(rng);
        const double b = uab(rng);
        // e^{-bs} - e^{-as} in the cancellation-free expm1 form: the naive
        // difference carries O(eps) absolute noise that the s^{-3/2} weight
        // amplifies beyond the 1e-9 target.  The slow exponential must carry
        // the prefactor, or the tail evaluates underflow times overflow (NaN).
        const double lo = std::min(a, b), hi = std::max(a, b);
        const double sign = (b <= a) ? 1.0 : -1.0;
        auto integrand = [lo, hi, sign](double s) {
            return -sign * std::exp(-lo * s) * std::expm1(-(hi - lo) * s);
        };
        QuadratureOptions opt;
        opt.rel_tol = 1e-9;            // estimate floor of the machine-width
                                       // panel at the singular endpoint
        opt.max_evaluations = 500000;  // deep cascade at the s -> 0 endpoint
        const double numeric = integrate_semiinfinite(integrand, 1.5, opt).value;
        const double closed = 2.0 * std::sqrt(kPi) * (std::sqrt(a) - std::sqrt(b));
        if (std::abs(closed) > 1e-6) {
            dev = std::max(dev, std::abs(numeric - closed) / std::abs(closed));
        }
    }
    out.push_back(detail::bounded("subtraction theorem", dev, 1e-9));
    return out;
}

inline std::vector<CheckResult> verify_maxwell() {
    using namespace maxwell;
    std::vector<CheckResult> out;
    std::mt19937 rng(detail::kSeed + 2);

    const auto s = spin_matrices();
    double alg = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        alg = std::max(alg,
                       (commutator(s[i], s[j]) - Complex{0.0, 1.0} * s[k]).max_abs());
    }
    alg = std::max(alg, (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] -
                         Complex{2.0, 0.0} * Mat3::identity())
                            .max_abs());
    out.push_back({"spin algebra exact", alg == 0.0, alg, 0.0});

    std::uniform_real_distribution<double> up(-2.0, 2.0);
    double spec_dev = 0.0;
    bool hermitian = true;
    for (int trial = 0; trial < 50; ++trial) {
        Vec3 p{up(rng), up(rng), up(rng)};
        const double pn = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        if (pn < 1e-3) continue;
        const Mat6 h = hamiltonian(p);
        if (!h.is_hermitian(1e-13)) hermitian = false;
        auto es = eigen_hermitian<6>(h);
        const double expected[6] = {-pn, -pn, 0.0, 0.0, pn, pn};
        for (int i = 0; i < 6; ++i) {
            spec_dev = std::max(spec_dev, std::abs(es.values[i] - expected[i]) / pn);
        }
    }
    out.push_back({"H hermitian", hermitian, hermitian ? 0.0 : 1.0, 0.0});
    out.push_back(detail::bounded("H spectrum {+-|p|,0} x2", spec_dev, 1e-12));

    const Mat6 pp = forward_projector();
    const Mat6 pm = backward_projector();
    double proj = (pp * pp - pp).max_abs();
    proj = std::max(proj, (pm * pm - pm).max_abs());
    proj = std::max(proj, (pp * pm).max_abs());
    proj = std::max(proj, (pp + pm - Mat6::identity()).max_abs());
    const Mat6 h1 = hamiltonian({0.3, -0.4, 0.8});
    proj = std::max(proj, commutator(h1, beta_matrix()).max_abs());
    out.push_back({"projector algebra & [H,beta]=0", proj == 0.0, proj, 0.0});

    std::normal_distribution<double> un(0.0, 1.0);
    double comm_dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Vec3 n{un(rng), un(rng), un(rng)};
        const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        if (nn < 1e-3) continue;
        for (auto& c : n) c /= nn;
        for (int lam : {+1, -1}) {
            for (auto pair :
                 {BranchPair::forward_forward, BranchPair::backward_backward}) {
                const Complex val = velocity_commutator(n, lam, pair);
                comm_dev = std::max(comm_dev,
                                    std::abs(val - Complex{0.0, double(lam)}));
            }
        }
    }
    out.push_back(detail::bounded("velocity commutator ic^2*Lambda", comm_dev, 1e-12));

    const double lam = 2.0 * kPi;
    double ladder = 0.0;
    for (int n = 0; n <= 10; ++n) {
        const double r0 = quantized_radius(n, lam);
        const double r1 = quantized_radius(n + 1, lam);
        ladder = std::max(ladder, std::abs(r1 * r1 - r0 * r0 - 2.0));
    }
    out.push_back(detail::bounded("radius ladder", ladder, 4e-15));
    return out;
}

inline std::vector<CheckResult> verify_twoslit() {
    using namespace twoslit;
    std::vector<CheckResult> out;
    std::mt19937 rng(detail::kSeed + 3);
    const SlitGeometry g(5e-6, 50e-6, 1.0, 0.58e-6);
    const double k = wavenumber(g);
    const double beta = g.aspect_ratio();

    // Product form vs the quotient form of the same closed pattern.
    std::uniform_real_distribution<double> uxr(1e-5, 0.05);
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = uxr(rng);
        const double product = intensity(x, g);
        const double c = std::cos(k * x);
        const double sn = std::sin(beta * k * x);
        const double quotient = 4.0 / (kPi * beta * k * x * x) * c * c * sn * sn;
        if (std::abs(quotient) > 1e-30) {
            dev = std::max(dev, std::abs(product - quotient) / std::abs(quotient));
        }
    }
    out.push_back(detail::bounded("product form identity", dev, 1e-12));

    dev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = -0.02 + 0.04 * i / 100.0;
        dev = std::max(dev, std::abs(intensity(x, g) - intensity(-x, g)));
    }
    out.push_back(detail::bounded("parity", dev, 0.0));

    dev = 0.0;
    const double span = 2.5 * g.fringe_spacing();
    double peak = 0.0;
    std::vector<double> xs(200), closed(200);
    for (int i = 0; i < 200; ++i) {
        xs[i] = -span + 2.0 * span * i / 199.0;
        closed[i] = intensity(xs[i], g);
        peak = std::max(peak, closed[i]);
    }
    for (int i = 0; i < 200; ++i) {
        const double oracle = brute_force_intensity(xs[i], g, PhaseMode::quadratic).value;
        dev = std::max(dev, std::abs(oracle - closed[i]) / peak);
    }
    out.push_back(detail::bounded("oracle equivalence (quadratic)", dev, 1e-6));

    auto limit_err = [&](double beta_small) {
        const SlitGeometry gs(beta_small * 50e-6, 50e-6, 1.0, 0.58e-6);
        const double ks = wavenumber(gs);
        double e = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double x = -span + 2.0 * span * i / 200.0;
            e = std::max(e, std::abs(intensity(x, gs) / (beta_small * ks) -
                                     interference_limit(x, ks)));
        }
        return e;
    };
    const double ratio = limit_err(1e-2) / limit_err(1e-3);
    out.push_back({"interference limit O(beta^2)", ratio >= 99.0 && ratio <= 110.0,
                   ratio, 99.0});

    // Numeric minima against analytic placements.
    const double x1 = g.wavelength * g.screen_distance / (2.0 * g.slit_width);
    const double found = detail::golden_min(
        [&](double x) {
            return single_slit(x, g.slit_width, g.wavelength, g.screen_distance);
        },
        0.6 * x1, 1.4 * x1);
    dev = std::abs(found - x1) / x1;
    const auto j1z = bessel_j1_zeros(2);
    for (int i = 0; i < 2; ++i) {
        const double r_pred = j1z[i] * g.wavelength * g.screen_distance /
                              (2.0 * kPi * g.slit_width);
        const double r_found = detail::golden_min(
            [&](double r) {
                return circular_pattern(r, g.slit_width, g.wavelength,
                                        g.screen_distance);
            },
            0.8 * r_pred, 1.2 * r_pred);
        dev = std::max(dev, std::abs(r_found - r_pred) / r_pred);
    }
    out.push_back(detail::bounded("minima placement", dev, 1e-9));

    // Screen integral characterization: expect 2 within 1e-3.
    const double kbeta = beta * k;
    const double big_x = 3000.0 / kbeta;
    double integral = 0.0;
    const double period = kPi / k;
    const auto n_periods = static_cast<std::int64_t>(std::ceil(big_x / period));
    for (std::int64_t i = -n_periods; i < n_periods; ++i) {
        integral += integrate_finite([&](double x) { return intensity(x, g); },
                                     i * period, (i + 1) * period,
                                     {1e-9, 1e-12, 100000})
                        .value;
    }
    integral += 2.0 / (kPi * kbeta * (n_periods * period));  // averaged tail
    out.push_back(detail::bounded("screen integral = 2", std::abs(integral - 2.0),
                                  1e-3));
    return out;
}

inline std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out;
    for (auto* fn : {&verify_blackbody, &verify_vacuum, &verify_maxwell,
                     &verify_twoslit}) {
        auto part = fn();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace zpd::verify
