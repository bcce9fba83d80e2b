#include "fpl/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "fpl/collision_models.hpp"
#include "fpl/errors.hpp"
#include "fpl/quadrature.hpp"
#include "fpl/scenarios.hpp"

namespace fpl {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) { return std::tgamma(n + 1.0); }

CheckResult conversion_oracle(const ConversionTable& table, int max_degree) {
    const auto gh = gauss_hermite_rule(max_degree + 2);
    double worst = 0.0;
    for (int d = 0; d <= max_degree; ++d) {
        const auto hs = indices_of_degree(d);
        const auto bs = burnett_indices_of_degree(d);
        for (const auto& alpha : hs)
            for (const auto& ahat : bs) {
                Complex sum = 0.0;
                for (std::size_t i = 0; i < gh.size(); ++i)
                    for (std::size_t j = 0; j < gh.size(); ++j)
                        for (std::size_t k = 0; k < gh.size(); ++k) {
                            const Point3 v(gh.nodes[i], gh.nodes[j], gh.nodes[k]);
                            sum += gh.weights[i] * gh.weights[j] * gh.weights[k] * std::conj(burnett_eval(ahat, v)) *
                                   hermite_eval(alpha, v);
                        }
                const double scale = std::sqrt(factorial(alpha[0]) * factorial(alpha[1]) * factorial(alpha[2]));
                worst = std::max(worst, std::abs(sum - table(ahat, alpha)) / scale);
            }
    }
    return {"conversion vs quadrature, degree <= " + std::to_string(max_degree), worst, 1e-8};
}

CheckResult f_oracle(int max_l) {
    const auto sphere = sphere_rule(2 * max_l + 4);
    double worst = 0.0;
    for (const auto& [s, t] : {std::pair{0, 2}, std::pair{2, 2}})
        for (int l1 = 0; l1 <= max_l; ++l1)
            for (int m1 = -l1; m1 <= l1; ++m1)
                for (int l2 = 0; l2 <= max_l; ++l2)
                    for (int m2 = -l2; m2 <= l2; ++m2) {
                        Complex sum = 0.0;
                        for (std::size_t i = 0; i < sphere.size(); ++i) {
                            const Point3& n = sphere.directions[i];
                            sum += sphere.weights[i] * n(s) * n(t) * spherical_harmonic(l1, m1, n) *
                                   spherical_harmonic(l2, m2, n);
                        }
                        worst = std::max(worst, std::abs(sum - coeff_F(s, t, l1, m1, l2, m2)));
                    }
    return {"F vs sphere quadrature, l <= " + std::to_string(max_l), worst, 1e-10};
}

std::string gamma_label(double gamma) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", gamma);
    return buf;
}

void perturb(CollisionTensor& tensor) {
    const auto row = static_cast<std::uint32_t>(graded_rank({2, 0, 0}));
    for (auto& e : tensor.entries)
        if (e.alpha == row) {
            e.value += 1e-3;
            return;
        }
}

}  // namespace

ValidationLevel parse_validation_level(const std::string& name) {
    if (name == "fast") return ValidationLevel::fast;
    if (name == "full") return ValidationLevel::full;
    throw ConfigError("unknown validation level '" + name + "' (expected fast or full)");
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

int validation_degree(ValidationLevel level) { return level == ValidationLevel::fast ? 3 : 5; }

std::vector<double> validation_gammas(ValidationLevel level) {
    if (level == ValidationLevel::fast) return {0.0, -3.0};
    return {0.0, -1.0, -2.5, -3.0, -4.5};
}

Eigen::MatrixXd g_quadrature(double gamma, int s, int t, int max_degree) {
    const IndexSet set(max_degree);
    const auto sphere = sphere_rule(2 * max_degree + 4);
    const auto radial = radial_panel_rule(gamma + 4.0, 1.0);
    const auto n = static_cast<Eigen::Index>(set.size());
    const auto points = static_cast<Eigen::Index>(sphere.size() * radial.size());
    Eigen::MatrixXd h(points, n);
    Eigen::VectorXd w(points);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < radial.size(); ++i)
        for (std::size_t j = 0; j < sphere.size(); ++j, ++row) {
            const Point3& dir = sphere.directions[j];
            const Point3 g = radial.nodes[i] * dir;
            w(row) = radial.weights[i] * sphere.weights[j] * dir(s) * dir(t) * std::pow(2 * kPi, -1.5);
            for (Eigen::Index k = 0; k < n; ++k) h(row, k) = hermite_eval(set[static_cast<std::size_t>(k)], g);
        }
    return h.transpose() * w.asDiagonal() * h;
}

double relative_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return ((a - b).array().abs() / b.array().abs().max(1.0)).maxCoeff();
}

double tensor_conservation_defect(const CollisionTensor& tensor) {
    std::mt19937 rng(20);
    std::normal_distribution<double> normal(0.0, 0.05);
    const auto e0 = static_cast<Eigen::Index>(graded_rank({2, 0, 0}));
    const auto e1 = static_cast<Eigen::Index>(graded_rank({0, 2, 0}));
    const auto e2 = static_cast<Eigen::Index>(graded_rank({0, 0, 2}));
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        SpectralState s(tensor.M0);
        for (auto& x : s.coeffs) x = normal(rng);
        s.coeffs.head(4) << 1.0, 0.0, 0.0, 0.0;
        s.coeffs(e2) = -s.coeffs(e0) - s.coeffs(e1);
        const auto q = quadratic_rhs(tensor, s);
        worst = std::max({worst, q.head(4).cwiseAbs().maxCoeff(), std::abs(q(e0) + q(e1) + q(e2))});
    }
    return worst;
}

double equilibrium_defect(const CollisionTensor& tensor) {
    const double quad = quadratic_rhs(tensor, SpectralState::maxwellian(tensor.M0)).cwiseAbs().maxCoeff();
    const double hyb = hybrid_rhs(tensor, SpectralState::maxwellian(tensor.M0 + 2)).cwiseAbs().maxCoeff();
    return std::max(quad, hyb);
}

ValidationReport run_validation(const ValidationOptions& options, const ValidationProgress& progress) {
    ValidationReport report;
    auto add = [&](CheckResult c) {
        if (progress) progress(c);
        report.checks.push_back(std::move(c));
    };
    const int degree = validation_degree(options.level);
    const auto gammas = validation_gammas(options.level);

    const auto conv = build_conversion(std::max(10, conversion_degree_for(degree)));
    add({"conversion consistency", conv.consistency_residual(), 1e-10});
    add({"Gram identity, degree <= 10", gram_residual(conv, 10), 1e-10});
    add(conversion_oracle(conv, degree));
    add(f_oracle(degree));

    for (const double gamma : gammas) {
        const std::string label = "gamma=" + gamma_label(gamma);
        const GTable table(gamma, degree, degree, conv);
        for (const auto& [s, t] : {std::pair{2, 2}, std::pair{0, 2}}) {
            const auto oracle = g_quadrature(gamma, s, t, degree);
            const Eigen::MatrixXd closed = table.matrix(s, t).topLeftCorner(oracle.rows(), oracle.cols());
            add({"G(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ") vs quadrature, " + label,
                 relative_error(closed, oracle), 1e-6});
        }
        auto tensor = build_tensor({gamma, 1.0}, degree, conv);
        if (options.inject_fault) perturb(tensor);
        add({"tensor conservation, " + label, tensor_conservation_defect(tensor), 1e-10});
        add({"Maxwellian equilibrium, " + label, equilibrium_defect(tensor), 1e-12});
    }

    const auto& rc = rosenbluth_constants();
    char buf[256];
    std::snprintf(buf, sizeof buf, "Rosenbluth constants: A=%.12g B=%.12g (grouped reading A=%.12g B=%.12g, literal A=%.12g B=%.12g)",
                  rc.A, rc.B, rc.A_grouped, rc.B_grouped, rc.A_literal, rc.B_literal);
    report.notes.emplace_back(buf);
    return report;
}

std::string format_report(const ValidationReport& report) {
    std::ostringstream out;
    std::size_t width = 5;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    char line[512];
    std::snprintf(line, sizeof line, "%-*s  %12s  %12s  %s\n", static_cast<int>(width), "check", "measured", "tolerance",
                  "result");
    out << line;
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof line, "%-*s  %12.3e  %12.1e  %s\n", static_cast<int>(width), c.name.c_str(), c.measured,
                      c.tolerance, c.passed() ? "ok" : "FAIL");
        out << line;
    }
    for (const auto& n : report.notes) out << n << '\n';
    out << (report.passed() ? "all checks passed\n" : "validation FAILED\n");
    return out.str();
}

}  // namespace fpl
