#include "fpl/basis.hpp"

#include <string>
#include <vector>

#include "fpl/errors.hpp"

namespace fpl {

namespace {

void check_harmonic_index(int l, int m) {
    if (l < 0 || m < -l || m > l)
        throw DomainError("spherical harmonic index requires |m| <= l, got l=" + std::to_string(l) +
                          ", m=" + std::to_string(m));
}

}  // namespace

double associated_legendre(int l, int m, double x) {
    check_harmonic_index(l, m);
    const int am = std::abs(m);
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    double pmm = 1.0;
    for (int k = 1; k <= am; ++k) pmm *= -static_cast<double>(2 * k - 1) * s;
    double value = pmm;
    if (l > am) {
        double prev = pmm;
        double cur = x * static_cast<double>(2 * am + 1) * pmm;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double next =
                (x * static_cast<double>(2 * ll - 1) * cur - static_cast<double>(ll + am - 1) * prev) /
                static_cast<double>(ll - am);
            prev = cur;
            cur = next;
        }
        value = cur;
    }
    if (m < 0) {
        // (l-|m|)!/(l+|m|)! as a running product
        double ratio = 1.0;
        for (int k = l - am + 1; k <= l + am; ++k) ratio /= static_cast<double>(k);
        value *= ((am % 2) ? -1.0 : 1.0) * ratio;
    }
    return value;
}

Complex solid_harmonic(int l, int m, const Point3& v) {
    check_harmonic_index(l, m);
    const int am = std::abs(m);
    const Complex xy(v(0), v(1));
    const double z = v(2);
    const double r2 = v.squaredNorm();

    // Sectoral term S_m^m, then upward in l at fixed order.
    Complex smm(1.0 / std::sqrt(4.0 * std::numbers::pi), 0.0);
    for (int k = 1; k <= am; ++k) smm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * xy;

    Complex value = smm;
    if (l > am) {
        Complex prev = smm;
        Complex cur = std::sqrt(2.0 * am + 3.0) * z * smm;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double l2 = static_cast<double>(ll) * ll;
            const double m2 = static_cast<double>(am) * am;
            const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
            const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - m2) * (2.0 * ll + 1.0) / ((2.0 * ll - 3.0) * (l2 - m2)));
            const Complex next = a * z * cur - b * r2 * prev;
            prev = cur;
            cur = next;
        }
        value = cur;
    }
    if (m < 0) value = ((am % 2) ? -1.0 : 1.0) * std::conj(value);
    return value;
}

Complex spherical_harmonic(int l, int m, const Point3& unit_direction) {
    return solid_harmonic(l, m, unit_direction);
}

Complex spherical_harmonic(int l, int m, const SphericalDirection& dir) {
    return solid_harmonic(l, m, dir.unit());
}

double burnett_normalization(int l, int n) {
    const double log_value = (1.0 - l) * std::log(2.0) + 1.5 * std::log(std::numbers::pi) + std::lgamma(n + 1.0) -
                             std::lgamma(n + l + 1.5);
    return std::exp(0.5 * log_value);
}

Complex burnett_eval(const BurnettIndex& index, const Point3& v) {
    check_harmonic_index(index.l, index.m);
    if (index.n < 0) throw DomainError("Burnett index requires n >= 0");
    const double radial = laguerre_eval<double>(index.n, index.l + 0.5, 0.5 * v.squaredNorm());
    return burnett_normalization(index.l, index.n) * radial * solid_harmonic(index.l, index.m, v);
}

}  // namespace fpl
