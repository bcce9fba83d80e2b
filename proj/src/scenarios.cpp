#include "fpl/scenarios.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fpl/errors.hpp"

namespace fpl {

namespace {

const double kShift = std::sqrt(1.5);

double half_factorial(int n) { return std::tgamma(n / 2 + 1.0); }

double bigaussian_bump(const Point3& v, double sign) {
    const double x = v(0) + sign * kShift;
    return std::exp(-(x * x + v(1) * v(1) + v(2) * v(2))) / (2 * std::pow(std::numbers::pi, 1.5));
}

}  // namespace

ScenarioId parse_scenario(std::string_view name) {
    if (name == "bkw") return ScenarioId::bkw;
    if (name == "bigaussian") return ScenarioId::bigaussian;
    if (name == "rosenbluth") return ScenarioId::rosenbluth;
    throw ConfigError("unknown scenario '" + std::string(name) + "' (expected bkw, bigaussian or rosenbluth)");
}

std::string scenario_name(ScenarioId id) {
    switch (id) {
        case ScenarioId::bkw: return "bkw";
        case ScenarioId::bigaussian: return "bigaussian";
        case ScenarioId::rosenbluth: return "rosenbluth";
    }
    return "?";
}

double bkw_tau(double t) { return 1.0 - 0.4 * std::exp(-4.0 * t); }

double bkw_density(double t, const Point3& v) {
    const double tau = bkw_tau(t);
    const double v2 = v.squaredNorm();
    return std::pow(2 * std::numbers::pi * tau, -1.5) * std::exp(-v2 / (2 * tau)) *
           (1.0 + (1.0 - tau) / tau * (v2 / (2 * tau) - 1.5));
}

SpectralState bkw_coefficients(double t, int M) {
    SpectralState s(M, t);
    const double base = -0.2 * std::exp(-4.0 * t);
    const IndexSet set(M);
    for (std::size_t r = 0; r < set.size(); ++r) {
        const MultiIndex& a = set[r];
        if (a[0] % 2 || a[1] % 2 || a[2] % 2) continue;
        const int half = a.degree() / 2;
        s.coeffs(static_cast<Eigen::Index>(r)) =
            std::pow(base, half) * (1.0 - half) / (half_factorial(a[0]) * half_factorial(a[1]) * half_factorial(a[2]));
    }
    return s;
}

double bigaussian_density(const Point3& v) { return bigaussian_bump(v, 1.0) + bigaussian_bump(v, -1.0); }

const RosenbluthConstants& rosenbluth_constants() {
    static const RosenbluthConstants c = [] {
        using boost::math::quadrature::gauss_kronrod;
        const double inf = std::numeric_limits<double>::infinity();
        auto moment = [&](int k) {
            return gauss_kronrod<double, 61>::integrate(
                [k](double x) { return std::pow(x, k) * std::exp(-(x - 1) * (x - 1)); }, 0.0, inf, 15, 1e-15);
        };
        RosenbluthConstants r{};
        const double pi = std::numbers::pi;
        r.I2 = moment(2);
        r.I4 = moment(4);
        r.B = std::sqrt(r.I4 / (3 * r.I2));
        r.A = std::pow(r.B, 3) / (4 * pi * r.I2);
        const double erf1 = std::erf(1.0);
        const double e = std::numbers::e;
        r.a_grouped = pi * (3 * std::sqrt(pi) * (erf1 + 1) + 2 / e);
        r.a_literal = pi * 3 * std::sqrt(pi) * (erf1 + 1 + 2 / e);
        r.b = pi * (9.5 * std::sqrt(pi) * (erf1 + 1) + 7 / e);
        auto consts = [&](double a, double& A, double& B) {
            A = std::pow(r.b / 3, 1.5) / std::pow(a, 2.5);
            B = std::sqrt(r.b / 3 / a);
        };
        consts(r.a_grouped, r.A_grouped, r.B_grouped);
        consts(r.a_literal, r.A_literal, r.B_literal);
        return r;
    }();
    return c;
}

double rosenbluth_density(const Point3& v) {
    const auto& c = rosenbluth_constants();
    const double x = c.B * v.norm() - 1.0;
    return c.A * std::exp(-x * x);
}

std::vector<DensityComponent> scenario_components(ScenarioId id, int M) {
    const int nodes = 2 * M + 8;
    switch (id) {
        case ScenarioId::bkw:
            return {{[](const Point3& v) { return bkw_density(0.0, v); },
                     gaussian_points(Point3::Zero(), std::sqrt(bkw_tau(0.0)), nodes)}};
        case ScenarioId::bigaussian: {
            const double scale = 1.0 / std::sqrt(2.0);
            return {{[](const Point3& v) { return bigaussian_bump(v, 1.0); },
                     gaussian_points(Point3(-kShift, 0, 0), scale, nodes)},
                    {[](const Point3& v) { return bigaussian_bump(v, -1.0); },
                     gaussian_points(Point3(kShift, 0, 0), scale, nodes)}};
        }
        case ScenarioId::rosenbluth: {
            const double r_max = 9.0 / rosenbluth_constants().B;
            return {{rosenbluth_density, spherical_points(M + 2, r_max, 36, 16)}};
        }
    }
    throw ConfigError("unknown scenario");
}

SpectralState initial_state(ScenarioId id, int M) {
    if (id == ScenarioId::bkw) return bkw_coefficients(0.0, M);
    return project_initial(scenario_components(id, M), M);
}

}  // namespace fpl
