#ifndef FPL_BASIS_HPP
#define FPL_BASIS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

#include <Eigen/Dense>

#include "fpl/index_space.hpp"

namespace fpl {

using Point3 = Eigen::Vector3d;
using Complex = std::complex<double>;

/// Direction on the unit sphere, theta in [0, pi], phi in [0, 2 pi).
struct SphericalDirection {
    double theta = 0.0;
    double phi = 0.0;

    Point3 unit() const {
        return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    }
};

/// Standard Maxwellian (2 pi)^{-3/2} exp(-|v|^2 / 2).
inline double maxwellian(const Point3& v) {
    return std::exp(-0.5 * v.squaredNorm()) / std::pow(2.0 * std::numbers::pi, 1.5);
}

/// One-dimensional probabilists' Hermite polynomial He_n(x).
template <typename Scalar>
Scalar hermite_1d(int n, Scalar x) {
    if (n <= 0) return Scalar(1);
    Scalar prev(1), cur = x;
    for (int k = 1; k < n; ++k) {
        Scalar next = x * cur - Scalar(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// He_0(x), ..., He_{out.size()-1}(x).
template <typename Scalar>
void hermite_1d_all(Scalar x, std::span<Scalar> out) {
    if (out.empty()) return;
    out[0] = Scalar(1);
    if (out.size() > 1) out[1] = x;
    for (std::size_t k = 2; k < out.size(); ++k)
        out[k] = x * out[k - 1] - Scalar(static_cast<double>(k - 1)) * out[k - 2];
}

/// H^alpha(v) = He_{a1}(v1) He_{a2}(v2) He_{a3}(v3).
template <typename Derived>
typename Derived::Scalar hermite_eval(const MultiIndex& alpha, const Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    return hermite_1d<Scalar>(alpha[0], v(0)) * hermite_1d<Scalar>(alpha[1], v(1)) *
           hermite_1d<Scalar>(alpha[2], v(2));
}

/// Generalized Laguerre polynomial L_n^{(beta)}(x) by the three-term recurrence.
template <typename Scalar>
Scalar laguerre_eval(int n, Scalar beta, Scalar x) {
    if (n <= 0) return Scalar(1);
    Scalar prev(1), cur = Scalar(1) + beta - x;
    for (int k = 1; k < n; ++k) {
        const Scalar kk(k);
        Scalar next = ((Scalar(2) * kk + Scalar(1) + beta - x) * cur - (kk + beta) * prev) / (kk + Scalar(1));
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Associated Legendre function P_l^m(x) including the Condon-Shortley phase,
/// extended to negative m by P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double associated_legendre(int l, int m, double x);

/// Y_l^m(n) with Condon-Shortley phase; DomainError when |m| > l.
Complex spherical_harmonic(int l, int m, const SphericalDirection& dir);

/// Same as above for an arbitrary unit vector.
Complex spherical_harmonic(int l, int m, const Point3& unit_direction);

/// Solid harmonic |v|^l Y_l^m(v/|v|), evaluated as a polynomial (finite at v = 0).
Complex solid_harmonic(int l, int m, const Point3& v);

/// Normalization constant sqrt(2^{1-l} pi^{3/2} n! / Gamma(n + l + 3/2)).
double burnett_normalization(int l, int n);

/// Orthonormal Burnett polynomial B_{(l,m,n)}(v) against the Maxwellian weight.
Complex burnett_eval(const BurnettIndex& index, const Point3& v);

}  // namespace fpl

#endif  // FPL_BASIS_HPP
