#pragma once

// Spin-1 operator formalism for the free Maxwell field: Riemann-Silberstein
// invariants, the 3x3 spin matrices, the 6-component Hamiltonian with its
// forward/backward projectors, transversal velocity commutators, quantized
// transversal radii and slit state counting.
//
// c is kept as 1 internally; quantities carrying c^2 state so in their
// contracts. Matrices are fixed-size value types with a cyclic-Jacobi
// Hermitian eigensolver.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "zpd/specfun.hpp"

namespace zpd::maxwell {

using Complex = std::complex<double>;
inline constexpr double kPi = 3.141592653589793238462643383;

template <int N>
class CMatrix {
  public:
    CMatrix() = default;

    Complex& operator()(int i, int j) { return a_[i * N + j]; }
    const Complex& operator()(int i, int j) const { return a_[i * N + j]; }

    static CMatrix identity() {
        CMatrix m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    CMatrix& operator+=(const CMatrix& o) {
        for (int i = 0; i < N * N; ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        for (int i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
        return *this;
    }
    CMatrix& operator*=(Complex c) {
        for (auto& v : a_) v *= c;
        return *this;
    }

    friend CMatrix operator+(CMatrix x, const CMatrix& y) { return x += y; }
    friend CMatrix operator-(CMatrix x, const CMatrix& y) { return x -= y; }
    friend CMatrix operator*(Complex c, CMatrix x) { return x *= c; }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        CMatrix r;
        for (int i = 0; i < N; ++i) {
            for (int k = 0; k < N; ++k) {
                const Complex xik = x(i, k);
                if (xik == Complex{}) continue;
                for (int j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
            }
        }
        return r;
    }

    CMatrix adjoint() const {
        CMatrix r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_hermitian(double tol = 1e-13) const {
        return (*this - adjoint()).max_abs() <= tol;
    }

    std::array<Complex, N> apply(const std::array<Complex, N>& v) const {
        std::array<Complex, N> r{};
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

  private:
    std::array<Complex, N * N> a_{};
};

using Mat3 = CMatrix<3>;
using Mat6 = CMatrix<6>;
using Vec3c = std::array<Complex, 3>;
using Vec3 = std::array<double, 3>;

template <int N>
CMatrix<N> commutator(const CMatrix<N>& x, const CMatrix<N>& y) {
    return x * y - y * x;
}

template <int N>
struct EigenSystem {
    std::array<double, N> values{};   // ascending
    CMatrix<N> vectors;               // columns are orthonormal eigenvectors
};

// Cyclic Jacobi for Hermitian matrices of tiny fixed dimension.
template <int N>
EigenSystem<N> eigen_hermitian(CMatrix<N> a) {
    CMatrix<N> v = CMatrix<N>::identity();
    const double scale = std::max(a.max_abs(), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= 1e-16 * scale) break;
        for (int p = 0; p < N; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale) continue;
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Columns: col_p' = c*col_p - s*conj(phase)*col_q,
                //          col_q' = s*phase*col_p + c*col_q.
                for (int i = 0; i < N; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * phase * aip + c * aiq;
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * phase * vip + c * viq;
                }
                for (int j = 0; j < N; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * std::conj(phase) * apj + c * aqj;
                }
            }
        }
    }
    EigenSystem<N> es;
    std::array<int, N> order{};
    for (int i = 0; i < N; ++i) order[i] = i;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (a(order[j], order[j]).real() < a(order[i], order[i]).real())
                std::swap(order[i], order[j]);
    for (int i = 0; i < N; ++i) {
        es.values[i] = a(order[i], order[i]).real();
        for (int r = 0; r < N; ++r) es.vectors(r, i) = v(r, order[i]);
    }
    return es;
}

struct FieldPair {
    Vec3 e_field{};
    Vec3 b_field{};
};

// Lorentz scalar |E|^2 - |B|^2 and pseudo-scalar E.B, extracted as the real
// and half-imaginary parts of F.F with F = E + iB, and cross-checked against
// the directly computed dot products.
inline std::pair<double, double> field_invariants(const FieldPair& fp) {
    Complex ff{};
    double ee = 0.0, bb = 0.0, eb = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Complex fi{fp.e_field[i], fp.b_field[i]};
        ff += fi * fi;
        ee += fp.e_field[i] * fp.e_field[i];
        bb += fp.b_field[i] * fp.b_field[i];
        eb += fp.e_field[i] * fp.b_field[i];
    }
    const double scalar = ff.real();
    const double pseudo = 0.5 * ff.imag();
    const double norm = std::max({std::abs(ee), std::abs(bb), 1.0});
    if (std::abs(scalar - (ee - bb)) > 1e-13 * norm ||
        std::abs(pseudo - eb) > 1e-13 * norm) {
        throw NonConvergence("field_invariants: complex and direct routes disagree");
    }
    return {scalar, pseudo};
}

// (S_j)_{kl} = -i eps_{jkl}; Hermitian, [S_i,S_j] = i eps_{ijk} S_k, S^2 = 2.
inline std::array<Mat3, 3> spin_matrices() {
    std::array<Mat3, 3> s;
    const Complex mi{0.0, -1.0};
    auto eps = [](int j, int k, int l) -> double {
        return ((j - k) * (k - l) * (l - j)) / 2.0;
    };
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) s[j](k, l) = mi * eps(j + 1, k + 1, l + 1);
    return s;
}

inline Mat3 spin_dot(const Vec3& v) {
    const auto s = spin_matrices();
    Mat3 r;
    for (int j = 0; j < 3; ++j) r += Complex{v[j], 0.0} * s[j];
    return r;
}

// beta = diag(+1,+1,+1,-1,-1,-1): forward/backward branch label.
inline Mat6 beta_matrix() {
    Mat6 b;
    for (int i = 0; i < 3; ++i) b(i, i) = 1.0;
    for (int i = 3; i < 6; ++i) b(i, i) = -1.0;
    return b;
}

// beta (x) m: block diag(m, -m) when signed, diag(m, m) otherwise.
inline Mat6 block_embed(const Mat3& m, bool with_beta) {
    Mat6 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = m(i, j);
            r(i + 3, j + 3) = with_beta ? -m(i, j) : m(i, j);
        }
    }
    return r;
}

// 6x6 Hamiltonian H = c beta (x) (p.S), c = 1. Spectrum {+|p|, -|p|, 0} each
// with multiplicity 2.
inline Mat6 hamiltonian(const Vec3& p) {
    const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (!(p2 > 0.0)) throw DomainError("hamiltonian: requires |p| > 0");
    return block_embed(spin_dot(p), /*with_beta=*/true);
}

inline Mat6 forward_projector() {
    Mat6 r;
    for (int i = 0; i < 3; ++i) r(i, i) = 1.0;
    return r;
}

inline Mat6 backward_projector() {
    Mat6 r;
    for (int i = 3; i < 6; ++i) r(i, i) = 1.0;
    return r;
}

namespace detail {

inline Vec3 normalized(const Vec3& v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (!(n > 0.0)) throw DomainError("direction must be nonzero");
    return {v[0] / n, v[1] / n, v[2] / n};
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// Deterministic transverse pair (e1, e2) with e1 x e2 = n.
inline std::pair<Vec3, Vec3> transverse_frame(const Vec3& n) {
    int least = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(n[i]) < std::abs(n[least])) least = i;
    Vec3 axis{};
    axis[least] = 1.0;
    const double proj = axis[0] * n[0] + axis[1] * n[1] + axis[2] * n[2];
    Vec3 e1{axis[0] - proj * n[0], axis[1] - proj * n[1], axis[2] - proj * n[2]};
    e1 = normalized(e1);
    return {e1, cross(n, e1)};
}

inline void require_unit(const Vec3& n, const char* who) {
    const double m = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    if (std::abs(m - 1.0) > 1e-12) {
        throw DomainError(std::string(who) + ": direction must be a unit vector");
    }
}

}  // namespace detail

// Transverse eigenvector of (p_hat . S) with eigenvalue Lambda, normalized,
// phase fixed so the first nonvanishing component is real positive.
inline Vec3c helicity_eigenstate(const Vec3& direction, int helicity) {
    detail::require_unit(direction, "helicity_eigenstate");
    if (helicity != 1 && helicity != -1) {
        throw DomainError("helicity_eigenstate: helicity must be +1 or -1");
    }
    const auto es = eigen_hermitian<3>(spin_dot(direction));
    int col = -1;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(es.values[i] - helicity) < 1e-8) {
            col = i;
            break;
        }
    }
    if (col < 0) throw NonConvergence("helicity_eigenstate: eigenvalue not found");
    Vec3c v{es.vectors(0, col), es.vectors(1, col), es.vectors(2, col)};
    double norm2 = 0.0;
    for (const auto& c : v) norm2 += std::norm(c);
    Complex phase{1.0, 0.0};
    for (const auto& c : v) {
        if (std::abs(c) > 1e-8) {
            phase = std::conj(c) / std::abs(c);
            break;
        }
    }
    for (auto& c : v) c *= phase / std::sqrt(norm2);
    return v;
}

enum class BranchPair { forward_forward, backward_backward, mixed };

// Commutator matrix of the transverse 6x6 velocity components V = c beta(x)S.
// [V.e1, V.e2] = i c^2 I (x) (S.n): branch independent.
inline Mat6 velocity_commutator_matrix(const Vec3& direction) {
    detail::require_unit(direction, "velocity_commutator_matrix");
    const auto [e1, e2] = detail::transverse_frame(direction);
    const Mat6 v1 = block_embed(spin_dot(e1), true);
    const Mat6 v2 = block_embed(spin_dot(e2), true);
    return commutator(v1, v2);
}

// Mixed-branch commutator matrix [V(+).e1, V(-).e2] = i c^2 beta (x) (S.n);
// kept as an operator identity only.
inline Mat6 mixed_velocity_commutator_matrix(const Vec3& direction) {
    detail::require_unit(direction, "mixed_velocity_commutator_matrix");
    const auto [e1, e2] = detail::transverse_frame(direction);
    const Mat6 v1 = block_embed(spin_dot(e1), false);
    const Mat6 v2 = block_embed(spin_dot(e2), true);
    return commutator(v1, v2);
}

// Expectation of the transverse velocity commutator on the (branch, helicity)
// eigenstate. Same-branch pairs give i c^2 Lambda for both branches; the
// mixed pair carries the extra beta and is evaluated on the forward state.
inline Complex velocity_commutator(const Vec3& direction, int helicity,
                                   BranchPair pair) {
    const Vec3c v = helicity_eigenstate(direction, helicity);
    std::array<Complex, 6> psi{};
    const int offset = (pair == BranchPair::backward_backward) ? 3 : 0;
    for (int i = 0; i < 3; ++i) psi[offset + i] = v[i];
    const Mat6 m = (pair == BranchPair::mixed)
                       ? mixed_velocity_commutator_matrix(direction)
                       : velocity_commutator_matrix(direction);
    const auto mv = m.apply(psi);
    Complex expect{};
    for (int i = 0; i < 6; ++i) expect += std::conj(psi[i]) * mv[i];
    return expect;
}

// Quantized transversal radius R_n = (lambda/2 pi) sqrt(2n + 1).
inline double quantized_radius(std::int64_t n, double wavelength) {
    if (n < 0) throw DomainError("quantized_radius: requires n >= 0");
    if (!(wavelength > 0.0)) throw DomainError("quantized_radius: lambda > 0");
    return wavelength / (2.0 * kPi) * std::sqrt(2.0 * static_cast<double>(n) + 1.0);
}

// Density of transversal states 2 pi / lambda^2 (per unit area).
inline double transversal_state_density(double wavelength) {
    if (!(wavelength > 0.0)) {
        throw DomainError("transversal_state_density: lambda > 0");
    }
    return 2.0 * kPi / (wavelength * wavelength);
}

struct SlitStates {
    double count = 0.0;
    bool ground_state_confined = false;  // w < lambda/pi
};

// Semi-classical transversal state count N = (pi^2/2)(w/lambda)^2 for a slit
// treated as a circle of diameter w.
inline SlitStates slit_state_count(double slit_width, double wavelength) {
    if (!(slit_width > 0.0) || !(wavelength > 0.0)) {
        throw DomainError("slit_state_count: requires w > 0 and lambda > 0");
    }
    const double ratio = slit_width / wavelength;
    return {kPi * kPi / 2.0 * ratio * ratio, slit_width < wavelength / kPi};
}

}  // namespace zpd::maxwell
