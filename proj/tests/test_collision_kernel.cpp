#include <doctest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "fpl/collision_kernel.hpp"
#include "fpl/errors.hpp"
#include "oracles.hpp"

using namespace fpl;
using doctest::Approx;

namespace {

const ConversionTable& conv(int degree) {
    static const ConversionTable table = build_conversion(11);
    if (degree > table.max_degree()) throw CapacityError("test table too small");
    return table;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); }

constexpr double kGammas[] = {0.0, -1.0, -2.5, -3.0, -4.5};

}  // namespace

TEST_CASE("coeff_a") {
    CHECK(coeff_a(0, 0, 0, 0) == 1.0);
    CHECK(coeff_a(1, 0, 1, 0) == Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(coeff_a(2, 0, 1, 0) == 0.0);
    CHECK(coeff_a(MultiIndex(1, 0, 0), MultiIndex(0, 0, 0), MultiIndex(1, 0, 0), MultiIndex(0, 0, 0)) ==
          Approx(1 / std::sqrt(2.0)));

    // H_l(h + g/2) H_k(h - g/2) = sum_{p+q=l+k} a_pq^{lk} H_p(sqrt2 h) H_q(g/sqrt2)
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int l = 0; l <= 5; ++l)
        for (int k = 0; k <= 5; ++k)
            for (int trial = 0; trial < 3; ++trial) {
                const double h = u(rng), g = u(rng);
                const double lhs = hermite_1d(l, h + g / 2) * hermite_1d(k, h - g / 2);
                double rhs = 0.0;
                for (int p = 0; p <= l + k; ++p)
                    rhs += coeff_a(p, l + k - p, l, k) * hermite_1d(p, std::sqrt(2.0) * h) *
                           hermite_1d(l + k - p, g / std::sqrt(2.0));
                CHECK(rhs == Approx(lhs).epsilon(1e-11).scale(1.0));
            }
}

TEST_CASE("coeff_K") {
    CHECK(coeff_K(1.3, 0.5, 2.5, 0, 0) == Approx(std::tgamma(2.3)).epsilon(1e-15));
    CHECK(coeff_K(1, 0.5, 0.5, 1, 0) == Approx(-0.5).epsilon(1e-15));
    // x = r^2/2 turns r^{2mu+1} e^{-r^2/2} dr into 2^mu x^mu e^{-x} dx
    for (const double mu : {2.0, -0.45, 0.3, 3.7})
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const auto rule = radial_panel_rule(2 * mu + 1);
                const double quad = rule.integrate([&](double r) {
                    const double x = 0.5 * r * r;
                    return laguerre_eval(m, 0.5, x) * laguerre_eval(n, 2.5, x);
                }) / std::pow(2.0, mu);
                CHECK(coeff_K(mu, 0.5, 2.5, m, n) == Approx(quad).epsilon(1e-10));
            }
    CHECK_THROWS_AS(coeff_K(-1.0, 0.5, 0.5, 0, 0), DomainError);
}

TEST_CASE("coeff_F against sphere quadrature") {
    CHECK(coeff_F(2, 2, 0, 0, 0, 0) == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(coeff_F(0, 2, 0, 0, 0, 0) == 0.0);
    CHECK(std::abs(coeff_F(2, 2, 1, 0, 1, 0) - 3.0 / 5) < 1e-14);
    const auto sphere = sphere_rule(12);
    double worst = 0.0;
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int m1 = -l1; m1 <= l1; ++m1)
            for (int l2 = 0; l2 <= 3; ++l2)
                for (int m2 = -l2; m2 <= l2; ++m2)
                    for (const int s : {0, 2}) {
                        const Complex quad = sphere.integrate([&](const Point3& n) {
                            return n(s) * n(2) * spherical_harmonic(l1, m1, n) * spherical_harmonic(l2, m2, n);
                        });
                        const double f = coeff_F(s, 2, l1, m1, l2, m2);
                        worst = std::max(worst, std::abs(quad - f));
                        if (s == 2 && m1 != -m2) CHECK(f == 0.0);
                        if (s == 0 && m1 + m2 != 1 && m1 + m2 != -1) CHECK(f == 0.0);
                    }
    CHECK(worst < 1e-10);
    CHECK_THROWS_AS(coeff_F(2, 2, 1, 2, 0, 0), DomainError);
    CHECK_THROWS_AS(coeff_F(1, 2, 0, 0, 0, 0), DomainError);
}

TEST_CASE("coeff_G closed cases") {
    const auto& table = conv(4);
    const MultiIndex zero;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t)
            CHECK(coeff_G({0.0, 1.0}, s, t, zero, zero, table) == Approx(s == t ? 1.0 : 0.0).scale(1.0).epsilon(1e-14));
    CHECK(coeff_G({-2.0, 1.0}, 2, 2, zero, zero, table) == Approx(1.0 / 3).epsilon(1e-14));
    CHECK(coeff_B_gamma({0.0, 1.0}, 2, 2, zero, zero, table) == Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(coeff_B_gamma({0.0, 1.0}, 0, 2, zero, zero, table)) < 1e-15);
    CHECK(coeff_B_gamma({-3.0, 1.0}, 0, 2, {1, 0, 1}, {2, 1, 1}, table) ==
          Approx(coeff_B_gamma({-3.0, 1.0}, 2, 0, {1, 0, 1}, {2, 1, 1}, table)).epsilon(1e-14));
    CHECK_THROWS_AS(coeff_G({-5.0, 1.0}, 2, 2, zero, zero, table), DomainError);
    CHECK_THROWS_AS(coeff_G({0.0, 1.0}, 2, 2, {12, 0, 0}, zero, table), CapacityError);
}

TEST_CASE("G against the singular quadrature oracle") {
    const auto& table = conv(4);
    const IndexSet set(4);
    for (const double gamma : kGammas) {
        const GTable gt(gamma, 4, 4, table);
        CHECK(gt.imaginary_residue() < 1e-10);
        for (const auto [s, t] : {std::pair{2, 2}, std::pair{0, 2}, std::pair{0, 0}, std::pair{1, 2}}) {
            const Eigen::MatrixXd oracle = test::g_oracle(gamma, s, t, 4);
            double worst = 0.0;
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = 0; j < set.size(); ++j) {
                    const double g = gt.matrix(s, t)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                    worst = std::max(worst, rel_err(g, oracle(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
                }
            INFO("gamma=" << gamma << " s=" << s << " t=" << t);
            CHECK(worst < 1e-6);
        }
        // single-entry path agrees with the table path
        CHECK(coeff_G({gamma, 1.0}, 0, 1, {1, 1, 2}, {2, 2, 0}, table) ==
              Approx(gt(0, 1, {1, 1, 2}, {2, 2, 0})).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("G symmetries") {
    const auto& table = conv(4);
    const GTable gt(-3.0, 4, 4, table);
    const IndexSet set(4);
    double worst = 0.0;
    for (const auto& p : set)
        for (const auto& q : set) {
            for (int s = 0; s < 3; ++s)
                for (int t = 0; t < 3; ++t) {
                    worst = std::max(worst, std::abs(gt(s, t, p, q) - gt(t, s, p, q)));
                    worst = std::max(worst, std::abs(gt(s, t, p, q) - gt(s, t, q, p)));
                }
            CHECK(gt(0, 0, p, q) == gt(2, 2, swapped(p, 0, 2), swapped(q, 0, 2)));
            CHECK(gt(1, 1, p, q) == gt(2, 2, swapped(p, 1, 2), swapped(q, 1, 2)));
            CHECK(gt(0, 1, p, q) == gt(0, 2, swapped(p, 1, 2), swapped(q, 1, 2)));
            CHECK(gt(1, 2, p, q) == gt(0, 2, swapped(p, 0, 1), swapped(q, 0, 1)));
        }
    CHECK(worst < 1e-10);
    CHECK_THROWS_AS(gt(2, 2, {5, 0, 0}, {0, 0, 0}), CapacityError);
}

TEST_CASE("A against the 6-D quadrature oracle") {
    const IndexSet set(2);
    const std::size_t n = set.size();
    for (const double gamma : {0.0, -1.0}) {
        const KernelParams params{gamma, 1.0};
        const GTable gt(gamma, 1, 5, conv(5));
        const auto oracle = test::a_oracle(gamma, 1.0, 2);
        double worst = 0.0;
        for (std::size_t ia = 0; ia < n; ++ia)
            for (std::size_t il = 0; il < n; ++il)
                for (std::size_t ik = 0; ik < n; ++ik) {
                    const double a = coeff_A(params, set[ia], set[il], set[ik], gt);
                    worst = std::max(worst, std::abs(a - oracle[(ia * n + il) * n + ik]));
                }
        INFO("gamma=" << gamma);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("tensor invariants") {
    for (const double gamma : kGammas)
        for (const int M0 : {2, 3, 5}) {
            const auto tensor = build_tensor({gamma, 1.0}, M0, conv(11));
            const IndexSet set(M0);
            const auto n = set.size();
            double worst = 0.0;
            for (std::size_t a = 0; a < n; ++a) worst = std::max(worst, std::abs(tensor.at(a, 0, 0)));
            const std::size_t conserved[] = {0, 1, 2, 3};
            const std::size_t energy[] = {set.rank({2, 0, 0}), set.rank({0, 2, 0}), set.rank({0, 0, 2})};
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k) {
                    for (const auto a : conserved)
                        worst = std::max(worst, std::abs(tensor.at(a, l, k) + tensor.at(a, k, l)));
                    double e = 0.0;
                    for (const auto a : energy) e += tensor.at(a, l, k) + tensor.at(a, k, l);
                    worst = std::max(worst, std::abs(e));
                }
            INFO("gamma=" << gamma << " M0=" << M0);
            CHECK(worst < 1e-10);
            CHECK(std::is_sorted(tensor.entries.begin(), tensor.entries.end(), [](const auto& x, const auto& y) {
                return std::tie(x.alpha, x.lambda, x.kappa) < std::tie(y.alpha, y.lambda, y.kappa);
            }));
        }
}

TEST_CASE("tensor entries match coeff_A") {
    const KernelParams params{-2.5, 1.7};
    const int M0 = 3;
    const auto tensor = build_tensor(params, M0, conv(11));
    const GTable gt(params.gamma, M0 - 1, 2 * M0 + 1, conv(11));
    const IndexSet set(M0);
    double worst = 0.0;
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t l = 0; l < set.size(); ++l)
            for (std::size_t k = 0; k < set.size(); ++k)
                worst = std::max(worst, std::abs(tensor.at(a, l, k) - coeff_A(params, set[a], set[l], set[k], gt)));
    CHECK(worst < 1e-12);
    CHECK(build_tensor(params, M0, conv(11)) == tensor);
}

TEST_CASE("BKW derivative at t = 0 for Maxwell molecules") {
    const int M0 = 3;
    const auto tensor = build_tensor({0.0, 1.0}, 4, conv(11));
    (void)M0;
    const IndexSet set(4);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(set.size()));
    // f_alpha(0) = (-0.2)^{|alpha|/2} (1 - |alpha|/2) / prod (alpha_i/2)!
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& a = set[i];
        if (a[0] % 2 || a[1] % 2 || a[2] % 2) continue;
        const int d = a.degree();
        f(static_cast<Eigen::Index>(i)) = std::pow(-0.2, d / 2) * (1 - d / 2.0) /
                                          (test::factorial(a[0] / 2) * test::factorial(a[1] / 2) * test::factorial(a[2] / 2));
    }
    double q400 = 0.0, q220 = 0.0;
    for (const auto& e : tensor.entries) {
        const double c = e.value * f(e.lambda) * f(e.kappa);
        if (e.alpha == set.rank({4, 0, 0})) q400 += c;
        if (e.alpha == set.rank({2, 2, 0})) q220 += c;
    }
    // d/dt of -0.02 e^{-8t} and -0.04 e^{-8t}; central differences of the law agree
    const double h = 1e-5;
    auto law = [](double t, double c) { return c * std::exp(-8 * t); };
    CHECK(q400 == Approx((law(h, -0.02) - law(-h, -0.02)) / (2 * h)).epsilon(1e-8));
    CHECK(q220 == Approx((law(h, -0.04) - law(-h, -0.04)) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("cache round-trip and header guards") {
    const auto tensor = build_tensor({-3.0, 1.0}, 3, conv(11));
    std::stringstream buf;
    save_tensor(tensor, buf);
    const std::string bytes = buf.str();
    {
        std::istringstream in(bytes);
        const auto back = load_tensor(in, {-3.0, 1.0, 3});
        CHECK(back == tensor);
        std::stringstream again;
        save_tensor(back, again);
        CHECK(again.str() == bytes);
    }
    {
        std::istringstream in(bytes);
        CHECK_THROWS_AS(load_tensor(in, {0.0, std::nullopt, std::nullopt}), CompatibilityError);
    }
    {
        std::istringstream in(bytes);
        CHECK_THROWS_AS(load_tensor(in, {std::nullopt, 2.0, std::nullopt}), CompatibilityError);
    }
    {
        std::istringstream in(bytes);
        CHECK_THROWS_AS(load_tensor(in, {std::nullopt, std::nullopt, 5}), CompatibilityError);
    }
    {
        std::istringstream in(bytes.substr(0, bytes.size() - 9));
        CHECK_THROWS_AS(load_tensor(in), FormatError);
    }
    {
        std::string bad = bytes;
        bad[0] = 'X';
        std::istringstream in(bad);
        CHECK_THROWS_AS(load_tensor(in), FormatError);
    }
}

TEST_CASE("kernel parameter validation") {
    CHECK_THROWS_AS((KernelParams{-5.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((KernelParams{0.0, 0.0}.validate()), DomainError);
    CHECK_NOTHROW((KernelParams{-4.99, 0.5}.validate()));
    CHECK_THROWS_AS(build_tensor({0.0, 1.0}, 1, conv(11)), DomainError);
    CHECK_THROWS_AS(build_tensor({0.0, 1.0}, 6, conv(11)), CapacityError);
}
