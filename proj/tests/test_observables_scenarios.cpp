#include <doctest.h>

#include <numbers>

#include "fpl/errors.hpp"
#include "fpl/observables.hpp"
#include "fpl/scenarios.hpp"
#include "oracles.hpp"

using namespace fpl;
using doctest::Approx;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return x;
}

double trapezoid(const std::vector<double>& x, const Eigen::VectorXd& y) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        s += 0.5 * (x[i] - x[i - 1]) * (y(static_cast<Eigen::Index>(i)) + y(static_cast<Eigen::Index>(i - 1)));
    return s;
}

// moments of a density by brute-force quadrature over the given rule
Moments direct_moments(const std::vector<DensityComponent>& comps) {
    double rho = 0.0;
    Eigen::Vector3d mom = Eigen::Vector3d::Zero();
    Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
    Eigen::Vector3d third = Eigen::Vector3d::Zero();
    for (const auto& c : comps)
        for (std::size_t k = 0; k < c.rule.points.size(); ++k) {
            const Point3& v = c.rule.points[k];
            const double w = c.rule.weights[k] * c.density(v);
            rho += w;
            mom += w * v;
            second += w * v * v.transpose();
            third += w * 0.5 * v.squaredNorm() * v;
        }
    Moments m;
    m.rho = rho;
    m.u = mom / rho;
    m.theta = second.trace() / (3 * rho);
    m.sigma = second - rho * m.theta * Eigen::Matrix3d::Identity();
    m.q = third;
    return m;
}

}  // namespace

TEST_CASE("moments of simple states") {
    const auto m = moments(SpectralState::maxwellian(4));
    CHECK(m.rho == 1.0);
    CHECK(m.theta == Approx(1.0));
    CHECK(m.sigma.cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.q.cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.has_heat_flux);

    auto s = SpectralState::maxwellian(3);
    s[MultiIndex(1, 1, 0)] = 0.1;
    s[MultiIndex(3, 0, 0)] = 0.05;
    s[MultiIndex(1, 0, 2)] = 0.02;
    const auto ms = moments(s);
    CHECK(ms.sigma(0, 1) == Approx(0.1));
    CHECK(ms.sigma(1, 0) == Approx(0.1));
    CHECK(ms.q(0) == Approx(2 * 0.05 + 0.05 + 0.02));
    CHECK(std::abs(ms.sigma.trace()) < 1e-12);

    const auto low = moments(SpectralState::maxwellian(2));
    CHECK(low.has_stress);
    CHECK_FALSE(low.has_heat_flux);
    CHECK_FALSE(moments(SpectralState::maxwellian(0)).has_velocity);
}

TEST_CASE("raw moments against quadrature with drift") {
    // a shifted Gaussian: mean (0.3, -0.2, 0.1), variance 1.2
    const Point3 c(0.3, -0.2, 0.1);
    const double sd = std::sqrt(1.2);
    const std::vector<DensityComponent> comps{
        {[&](const Point3& v) { return std::pow(2 * std::numbers::pi * 1.2, -1.5) * std::exp(-(v - c).squaredNorm() / 2.4); },
         gaussian_points(c, sd, 12)}};
    const auto s = project_initial(comps, 8);
    const auto m = moments(s);
    const auto d = direct_moments(comps);
    CHECK(m.rho == Approx(1.0).epsilon(1e-12));
    CHECK((m.u - c).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(m.theta == Approx(1.2).epsilon(1e-10));
    CHECK(m.sigma.cwiseAbs().maxCoeff() < 1e-10);
    CHECK((d.q - 0.5 * (c.squaredNorm() + 5 * 1.2) * c).cwiseAbs().maxCoeff() < 1e-10);  // raw third moment
    CHECK(m.q.cwiseAbs().maxCoeff() < 1e-10);  // centered heat flux of a Gaussian
}

TEST_CASE("marginals") {
    const auto v = grid(-8, 8, 801);
    const auto g = marginal_1d(SpectralState::maxwellian(4), v);
    for (std::size_t i = 0; i < v.size(); i += 100)
        CHECK(g(static_cast<Eigen::Index>(i)) ==
              Approx(std::exp(-0.5 * v[i] * v[i]) / std::sqrt(2 * std::numbers::pi)).epsilon(1e-14));

    const auto s = initial_state(ScenarioId::bigaussian, 9);
    CHECK(trapezoid(v, marginal_1d(s, v)) == Approx(1.0).epsilon(1e-6));
    const auto v2 = grid(-8, 8, 401);
    const Eigen::MatrixXd h = marginal_2d(s, v, v2);
    const Eigen::VectorXd gs = marginal_1d(s, v);
    for (std::size_t i = 0; i < v.size(); i += 50)
        CHECK(trapezoid(v2, h.row(static_cast<Eigen::Index>(i)).transpose()) ==
              Approx(gs(static_cast<Eigen::Index>(i))).epsilon(1e-6).scale(1.0));
    // bi-Gaussian symmetry
    CHECK((h - h.colwise().reverse()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h - h.rowwise().reverse()).cwiseAbs().maxCoeff() < 1e-12);

    // BKW marginal: integrate the closed form over v2, v3
    const auto bkw = bkw_coefficients(0.0, 30);
    const auto gb = marginal_1d(bkw, v);
    const double tau = bkw_tau(0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = v[i];
        // integral of (1 + c (|v|^2/(2 tau) - 3/2)) over a 2-D Gaussian of variance tau
        const double c = (1 - tau) / tau;
        const double exact = std::exp(-x * x / (2 * tau)) / std::sqrt(2 * std::numbers::pi * tau) *
                             (1 + c * (x * x / (2 * tau) + 1 - 1.5));
        worst = std::max(worst, std::abs(gb(static_cast<Eigen::Index>(i)) - exact));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("projection") {
    const auto mw = project_initial([](const Point3& v) { return maxwellian(v); }, 6);
    CHECK(mw.coeffs(0) == Approx(1.0).epsilon(1e-14));
    CHECK(mw.coeffs.tail(mw.coeffs.size() - 1).cwiseAbs().maxCoeff() < 1e-12);

    const auto bkw = project_initial(scenario_components(ScenarioId::bkw, 8), 8);
    CHECK((bkw.coeffs - bkw_coefficients(0.0, 8).coeffs).cwiseAbs().maxCoeff() < 1e-8);
    CHECK_FALSE(normalization_warning(bkw).has_value());

    for (const auto id : {ScenarioId::bigaussian, ScenarioId::rosenbluth}) {
        const auto comps = scenario_components(id, 9);
        const auto s = project_initial(comps, 9);
        CHECK(std::abs(s.coeffs(0) - 1.0) < 1e-10);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(s[MultiIndex::unit(i)]) < 1e-10);
        CHECK(std::abs(s[MultiIndex(2, 0, 0)] + s[MultiIndex(0, 2, 0)] + s[MultiIndex(0, 0, 2)]) < 1e-10);
        const auto m = moments(s);
        const auto d = direct_moments(comps);
        CHECK(std::abs(m.theta - d.theta) < 1e-8);
        CHECK((m.sigma - d.sigma).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((m.q - d.q).cwiseAbs().maxCoeff() < 1e-8);
    }
    const auto bi = moments(initial_state(ScenarioId::bigaussian, 4));
    CHECK(bi.sigma(0, 0) == Approx(1.0).epsilon(1e-12));
    CHECK(bi.sigma(1, 1) == Approx(-0.5).epsilon(1e-12));
    CHECK(bi.sigma(2, 2) == Approx(-0.5).epsilon(1e-12));

    // linearity
    auto f = [](const Point3& v) { return bigaussian_density(v); };
    auto g2 = [](const Point3& v) { return 2.0 * bigaussian_density(v) + 0.5 * maxwellian(v); };
    const auto a = project_initial(f, 5);
    const auto b = project_initial(g2, 5);
    CHECK((b.coeffs - 2.0 * a.coeffs - 0.5 * mw.resized(5).coeffs).cwiseAbs().maxCoeff() < 1e-12);

    auto off = SpectralState::maxwellian(3);
    off.coeffs(0) = 1.1;
    CHECK(normalization_warning(off).has_value());
}

TEST_CASE("scenario densities") {
    CHECK(bkw_density(0.0, Point3::Zero()) == Approx(0.0).scale(1.0));
    CHECK(bkw_density(50.0, Point3(0.3, 1.0, -0.2)) == Approx(maxwellian(Point3(0.3, 1.0, -0.2))).epsilon(1e-14));
    CHECK(test::maxwellian_integral(12, [](const Point3& v) { return bkw_density(0.0, v) / maxwellian(v); }) ==
          Approx(1.0).epsilon(1e-4));

    const auto f400 = bkw_coefficients(0.0, 6)[MultiIndex(4, 0, 0)];
    CHECK(f400 == Approx(-0.02).epsilon(1e-15));
    CHECK(bkw_coefficients(0.0, 6)[MultiIndex(2, 2, 0)] == Approx(-0.04).epsilon(1e-15));
    for (const double t : {0.0, 0.3, 2.0}) {
        const auto s = bkw_coefficients(t, 6);
        for (std::size_t r = 1; r < index_set_size(3); ++r) CHECK(s.coeffs(static_cast<Eigen::Index>(r)) == 0.0);
    }

    const auto& rc = rosenbluth_constants();
    CHECK(rc.I2 == Approx(0.75 * std::sqrt(std::numbers::pi) * (1 + std::erf(1.0)) + 0.5 / std::numbers::e).epsilon(1e-13));
    CHECK(rc.a_grouped == Approx(4 * std::numbers::pi * rc.I2).epsilon(1e-13));
    CHECK(rc.b == Approx(4 * std::numbers::pi * rc.I4).epsilon(1e-13));
    CHECK(rc.A_grouped == Approx(rc.A).epsilon(1e-12));
    CHECK(rc.B_grouped == Approx(rc.B).epsilon(1e-12));
    CHECK(std::abs(rc.B_literal - rc.B) > 1e-2);

    const auto ros = initial_state(ScenarioId::rosenbluth, 4);
    CHECK(ros.coeffs(0) == Approx(1.0).epsilon(1e-10));
    CHECK(moments(ros).theta == Approx(1.0).epsilon(1e-10));
    CHECK(moments(ros).u.cwiseAbs().maxCoeff() < 1e-12);

    for (const double x : {-3.0, -1.0, 0.0, 0.5, 2.0})
        for (const double y : {-2.0, 0.0, 1.5}) {
            const Point3 v(x, y, 0.3);
            CHECK(bkw_density(0.0, v) >= 0.0);
            CHECK(bigaussian_density(v) >= 0.0);
            CHECK(rosenbluth_density(v) >= 0.0);
        }
    CHECK(parse_scenario("rosenbluth") == ScenarioId::rosenbluth);
    CHECK(scenario_name(ScenarioId::bigaussian) == "bigaussian");
    CHECK_THROWS_AS(parse_scenario("nope"), ConfigError);
}
