#include "fpl/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "fpl/errors.hpp"

namespace fpl {

QuadratureRule1D golub_welsch(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta, double mu0) {
    const Eigen::Index n = alpha.size();
    QuadratureRule1D rule;
    if (n == 0) return rule;
    Eigen::VectorXd off = beta.head(n - 1).cwiseSqrt();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(alpha, off, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw ConsistencyError("Golub-Welsch eigenproblem did not converge");
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

QuadratureRule1D gauss_hermite_rule(int n) {
    if (n < 1) throw DomainError("Gauss-Hermite rule needs n >= 1");
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd beta(n);
    for (int k = 0; k < n; ++k) beta(k) = k + 1.0;
    auto rule = golub_welsch(alpha, beta, 1.0);
    // Symmetrize: removes the last-bit asymmetry of the eigensolver.
    const auto m = rule.size();
    for (std::size_t i = 0; i < m / 2; ++i) {
        const double x = 0.5 * (rule.nodes[m - 1 - i] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[m - 1 - i] + rule.weights[i]);
        rule.nodes[i] = -x;
        rule.nodes[m - 1 - i] = x;
        rule.weights[i] = rule.weights[m - 1 - i] = w;
    }
    if (m % 2) rule.nodes[m / 2] = 0.0;
    return rule;
}

QuadratureRule1D gauss_legendre_rule(int n) { return gauss_jacobi_rule(n, 0.0, 0.0); }

QuadratureRule1D gauss_jacobi_rule(int n, double a, double b) {
    if (n < 1) throw DomainError("Gauss-Jacobi rule needs n >= 1");
    if (a <= -1.0 || b <= -1.0) throw DomainError("Gauss-Jacobi rule needs a, b > -1");
    Eigen::VectorXd alpha(n), beta(n);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        if (k == 0) {
            alpha(k) = (b - a) / (ab + 2.0);
        } else {
            const double s = 2.0 * k + ab;
            alpha(k) = (b * b - a * a) / (s * (s + 2.0));
        }
        const int j = k + 1;
        const double s = 2.0 * j + ab;
        if (j == 1) {
            beta(k) = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            beta(k) = 4.0 * j * (j + a) * (j + b) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
    }
    const double log_mu0 =
        (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0);
    return golub_welsch(alpha, beta, std::exp(log_mu0));
}

SphereRule sphere_rule(int order) {
    if (order < 1) throw DomainError("sphere rule order must be >= 1");
    const int n_theta = order / 2 + 1;
    const int n_phi = order + 1;
    const auto gl = gauss_legendre_rule(n_theta);
    SphereRule rule;
    rule.directions.reserve(static_cast<std::size_t>(n_theta * n_phi));
    rule.weights.reserve(static_cast<std::size_t>(n_theta * n_phi));
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    for (std::size_t i = 0; i < gl.size(); ++i) {
        const double ct = gl.nodes[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = j * dphi;
            rule.directions.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
            rule.weights.push_back(gl.weights[i] * dphi);
        }
    }
    return rule;
}

QuadratureRule1D radial_panel_rule(double beta, double sigma, const RadialPanels& panels) {
    if (beta <= -1.0) throw DomainError("radial rule needs beta > -1, got " + std::to_string(beta));
    if (sigma <= 0.0) throw DomainError("radial rule needs sigma > 0");
    const double h = panels.width * sigma;
    const int n_panels = static_cast<int>(std::ceil(panels.r_max / panels.width));
    const int np = panels.points_per_panel;
    const auto envelope = [&](double r) { return std::exp(-0.5 * r * r / (sigma * sigma)); };

    QuadratureRule1D rule;
    rule.nodes.reserve(static_cast<std::size_t>(n_panels * np));
    rule.weights.reserve(static_cast<std::size_t>(n_panels * np));

    // [0, h]: r = h (1 + x) / 2, r^beta dr = (h/2)^{beta+1} (1+x)^beta dx
    const auto gj = gauss_jacobi_rule(np, 0.0, beta);
    const double scale = std::pow(0.5 * h, beta + 1.0);
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const double r = 0.5 * h * (1.0 + gj.nodes[i]);
        rule.nodes.push_back(r);
        rule.weights.push_back(scale * gj.weights[i] * envelope(r));
    }
    const auto gl = gauss_legendre_rule(np);
    for (int p = 1; p < n_panels; ++p) {
        const double lo = p * h;
        for (std::size_t i = 0; i < gl.size(); ++i) {
            const double r = lo + 0.5 * h * (1.0 + gl.nodes[i]);
            rule.nodes.push_back(r);
            rule.weights.push_back(0.5 * h * gl.weights[i] * std::pow(r, beta) * envelope(r));
        }
    }
    return rule;
}

QuadratureRule1D radial_gauss_rule(double beta, double sigma, int n) {
    if (n < 1) throw DomainError("radial Gauss rule needs n >= 1");
    RadialPanels fine;
    fine.width = 0.25;
    fine.points_per_panel = 20;
    fine.r_max = 16.0;
    const auto measure = radial_panel_rule(beta, sigma, fine);
    const auto N = static_cast<Eigen::Index>(measure.size());
    Eigen::Map<const Eigen::VectorXd> x(measure.nodes.data(), N);
    Eigen::Map<const Eigen::VectorXd> w(measure.weights.data(), N);

    // Discretized Stieltjes procedure.
    Eigen::VectorXd alpha(n), b(n);
    Eigen::VectorXd p_prev = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd p_cur = Eigen::VectorXd::Ones(N);
    double norm_prev = 1.0;
    const double mu0 = w.sum();
    for (int k = 0; k < n; ++k) {
        const double norm = (w.array() * p_cur.array().square()).sum();
        alpha(k) = (w.array() * x.array() * p_cur.array().square()).sum() / norm;
        const double bk = (k == 0) ? 0.0 : norm / norm_prev;
        Eigen::VectorXd p_next = (x.array() - alpha(k)) * p_cur.array() - bk * p_prev.array();
        if (k > 0) b(k - 1) = bk;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        norm_prev = norm;
    }
    b(n - 1) = (w.array() * p_cur.array().square()).sum() / norm_prev;
    return golub_welsch(alpha, b, mu0);
}

double radial_singular_integral(double gamma, int rho_exponent, const std::function<double(double)>& smooth,
                                const RadialPanels& panels) {
    const double beta = gamma + 2.0 + rho_exponent;
    if (!(beta > -1.0))
        throw DomainError("radial integral diverges: exponent gamma + 2 + rho = " + std::to_string(beta) +
                          " must exceed -1");
    return radial_panel_rule(beta, 1.0, panels).integrate(smooth);
}

}  // namespace fpl
