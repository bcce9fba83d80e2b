#include <doctest.h>

#include <numbers>
#include <random>

#include "fpl/basis.hpp"
#include "fpl/errors.hpp"
#include "oracles.hpp"

using namespace fpl;
using doctest::Approx;

TEST_CASE("maxwellian") {
    CHECK(maxwellian(Point3::Zero()) == Approx(std::pow(2 * std::numbers::pi, -1.5)).epsilon(1e-15));
    CHECK(maxwellian({1, 0, 0}) == maxwellian({0, 1, 0}));
    CHECK(test::maxwellian_integral(20, [](const Point3&) { return 1.0; }) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermite values") {
    CHECK(hermite_eval({0, 0, 0}, Point3(0.3, -2.0, 5.0)) == 1.0);
    CHECK(hermite_eval({2, 0, 0}, Point3(1.0, 0.0, 0.0)) == 0.0);
    CHECK(hermite_1d(3, 2.0) == Approx(8.0 - 6.0));
    // templated scalar
    CHECK(hermite_1d<float>(2, 3.0f) == Approx(8.0f));
}

TEST_CASE("hermite orthogonality against the Maxwellian") {
    const auto set = build_index_set(6);
    double worst = 0.0;
    for (const auto& a : set)
        for (const auto& b : set) {
            const double value =
                test::maxwellian_integral(7, [&](const Point3& v) { return hermite_eval(a, v) * hermite_eval(b, v); });
            const double expected = (a == b) ? test::factorial(a) : 0.0;
            worst = std::max(worst, std::abs(value - expected) / std::sqrt(test::factorial(a) * test::factorial(b)));
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("laguerre") {
    CHECK(laguerre_eval(0, 0.5, 3.0) == 1.0);
    CHECK(laguerre_eval(1, 0.7, 2.0) == Approx(1.0 + 0.7 - 2.0));
    // integral_0^inf L_2^{(1/2)}^2 x^{1/2} e^{-x} dx = Gamma(2 + 3/2) / 2!
    const auto radial = radial_panel_rule(2.0, 1.0);  // r^2 e^{-r^2/2}: x = r^2/2
    // x^{1/2} e^{-x} dx with x = r^2/2 equals 2^{-1/2} r^2 e^{-r^2/2} dr
    const double value = radial.integrate([](double r) {
        const double l = laguerre_eval(2, 0.5, 0.5 * r * r);
        return std::sqrt(0.5) * l * l;
    });
    CHECK(value == Approx(std::tgamma(3.5) / 2.0).epsilon(1e-12));
}

TEST_CASE("spherical harmonics") {
    const SphericalDirection dir{0.7, 1.9};
    CHECK(std::abs(spherical_harmonic(0, 0, dir) - 1.0 / std::sqrt(4 * std::numbers::pi)) < 1e-15);
    CHECK(std::abs(spherical_harmonic(1, 0, dir) - std::sqrt(3 / (4 * std::numbers::pi)) * std::cos(0.7)) < 1e-15);
    CHECK_THROWS_AS(spherical_harmonic(1, 2, dir), DomainError);

    // agreement with the associated Legendre definition, and conj(Y_l^m) = (-1)^m Y_l^{-m}
    for (int l = 0; l <= 8; ++l)
        for (int m = -l; m <= l; ++m) {
            double ratio = 1.0;
            for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
            for (int k = l + m + 1; k <= l - m; ++k) ratio *= k;
            const double norm = std::sqrt((2 * l + 1) / (4 * std::numbers::pi) * ratio);
            const Complex expected =
                norm * associated_legendre(l, m, std::cos(dir.theta)) * std::polar(1.0, m * dir.phi);
            CHECK(std::abs(spherical_harmonic(l, m, dir) - expected) < 1e-12);
            const Complex lhs = std::conj(spherical_harmonic(l, m, dir));
            const Complex rhs = ((m % 2) ? -1.0 : 1.0) * spherical_harmonic(l, -m, dir);
            CHECK(std::abs(lhs - rhs) < 1e-14);
        }

    const auto sphere = sphere_rule(4);
    const Complex norm11 = sphere.integrate([](const Point3& n) {
        const auto y = spherical_harmonic(1, 1, n);
        return y * std::conj(y);
    });
    CHECK(std::abs(norm11 - 1.0) < 1e-14);
}

TEST_CASE("Burnett polynomials") {
    const Point3 v(0.3, -0.4, 1.1);
    CHECK(std::abs(burnett_eval({0, 0, 0}, v) - 1.0) < 1e-14);
    CHECK(std::abs(burnett_eval({1, 0, 0}, v) - v(2)) < 1e-14);
    CHECK(std::abs(burnett_eval({3, 2, 1}, Point3::Zero())) == 0.0);

    std::vector<BurnettIndex> all;
    for (int d = 0; d <= 6; ++d)
        for (const auto& b : burnett_indices_of_degree(d)) all.push_back(b);
    double worst = 0.0;
    for (const auto& a : all)
        for (const auto& b : all) {
            const Complex value = test::maxwellian_integral(
                8, [&](const Point3& x) { return std::conj(burnett_eval(a, x)) * burnett_eval(b, x); });
            worst = std::max(worst, std::abs(value - ((a == b) ? 1.0 : 0.0)));
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("Burnett polynomial has total degree l + 2n") {
    // Along a ray v = s u, a degree-d polynomial has vanishing (d+1)-th finite difference.
    std::mt19937 rng(7);
    std::normal_distribution<double> normal;
    for (int d = 1; d <= 6; ++d)
        for (const auto& b : burnett_indices_of_degree(d)) {
            const Point3 u(normal(rng), normal(rng), normal(rng));
            const Point3 w(normal(rng), normal(rng), normal(rng));
            Complex diff = 0.0;
            double binom = 1.0;
            double scale = 0.0;
            for (int k = 0; k <= d + 1; ++k) {
                const Complex value = burnett_eval(b, w + 0.5 * k * u);
                diff += (((d + 1 - k) % 2) ? -1.0 : 1.0) * binom * value;
                scale = std::max(scale, std::abs(value));
                binom = binom * (d + 1 - k) / (k + 1);
            }
            CHECK(std::abs(diff) < 1e-9 * std::max(1.0, scale));
        }
}
