#pragma once

// Single-mode Planck energetics in dimensionless form, x = hbar*omega/kT with
// the sign of omega carried by the sign of x. Dimensional dressing happens at
// the CLI boundary only.

#include <cmath>
#include <cstdint>

#include "zpd/specfun.hpp"

namespace zpd::blackbody {

namespace detail {

inline void require_nonzero(double x, const char* who) {
    if (x == 0.0 || !std::isfinite(x)) {
        throw DomainError(std::string(who) + ": x must be finite and nonzero");
    }
}

}  // namespace detail

// Mean occupation 1/(e^x - 1). Negative (below -1) on the backward-in-time
// branch x < 0; that analytic continuation is what makes the symmetrization
// identity hold.
inline double mean_occupation(double x) {
    detail::require_nonzero(x, "mean_occupation");
    return 1.0 / std::expm1(x);
}

// Mean thermal energy in units of hbar*omega (a pure number equal to the
// occupation). x * mean_energy(x) -> 1 as x -> 0 (equipartition).
inline double mean_energy(double x) {
    detail::require_nonzero(x, "mean_energy");
    return mean_occupation(x);
}

// Thermal energy including zero point, in units of hbar*|omega|/2:
// E_T / (hbar|omega|/2) = coth(|x|/2). Both closed forms are evaluated and
// required to agree.
inline double energy_with_zpe(double x) {
    detail::require_nonzero(x, "energy_with_zpe");
    const double ax = std::abs(x);
    const double coth_form = 1.0 / std::tanh(0.5 * ax);
    const double occ_form = 2.0 * (mean_occupation(ax) + 0.5);
    if (std::abs(coth_form - occ_form) > 1e-13 * std::abs(coth_form)) {
        throw NonConvergence("energy_with_zpe: closed forms disagree");
    }
    return coth_form;
}

// (1/2)[E(omega) + E(-omega)] in units of hbar*|omega|. Built from the two
// signed-frequency branches, independently of the coth route.
inline double symmetrize(double x) {
    detail::require_nonzero(x, "symmetrize");
    auto signed_energy = [](double xi) {
        const double sign = xi > 0.0 ? 1.0 : -1.0;
        return sign * mean_occupation(xi);
    };
    return 0.5 * (signed_energy(x) + signed_energy(-x));
}

// Excess over equipartition, (E + hbar*omega/2 - kT)/kT = x(n + 1/2) - 1,
// tending to x^2/12 as x -> 0+.
inline double einstein_stern_excess(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("einstein_stern_excess: requires x > 0");
    }
    return x / std::expm1(x) + 0.5 * x - 1.0;
}

// Symmetrized-product oscillator energy hbar*|omega|*(n + 1/2), hbar = 1.
inline double number_operator_energy(std::int64_t n, double omega_abs) {
    if (n < 0) throw DomainError("number_operator_energy: requires n >= 0");
    if (omega_abs < 0.0) {
        throw DomainError("number_operator_energy: requires omega_abs >= 0");
    }
    return omega_abs * (static_cast<double>(n) + 0.5);
}

}  // namespace zpd::blackbody
