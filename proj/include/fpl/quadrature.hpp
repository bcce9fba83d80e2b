#ifndef FPL_QUADRATURE_HPP
#define FPL_QUADRATURE_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "fpl/basis.hpp"

namespace fpl {

/// Nodes and weights of a one-dimensional rule. For weighted rules the weight
/// function is folded into `weights`.
struct QuadratureRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <typename F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// Gauss rule from the recurrence coefficients of the monic orthogonal polynomials
/// (diagonal `alpha`, squared off-diagonal `beta`) and total mass mu0.
QuadratureRule1D golub_welsch(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta, double mu0);

/// n-point Gauss-Hermite rule for the normalized weight exp(-x^2/2)/sqrt(2 pi);
/// exact for polynomials of degree <= 2n - 1.
QuadratureRule1D gauss_hermite_rule(int n);

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule1D gauss_legendre_rule(int n);

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b, a, b > -1.
QuadratureRule1D gauss_jacobi_rule(int n, double a, double b);

/// Product rule on S^2: Gauss-Legendre in cos(theta) times uniform in phi.
/// Integrates spherical polynomials of total degree <= order exactly.
struct SphereRule {
    std::vector<Point3> directions;
    std::vector<double> weights;

    std::size_t size() const { return directions.size(); }

    template <typename F>
    auto integrate(F&& f) const {
        using R = decltype(f(directions.front()));
        R sum{};
        for (std::size_t i = 0; i < directions.size(); ++i) sum += weights[i] * f(directions[i]);
        return sum;
    }
};

SphereRule sphere_rule(int order);

/// Panel layout of the radial rules below; all lengths are in units of sigma.
struct RadialPanels {
    double width = 0.5;
    int points_per_panel = 16;
    double r_max = 14.0;
};

/// Rule for integral_0^inf r^beta phi(r) exp(-r^2 / (2 sigma^2)) dr with the factor
/// r^beta exp(...) folded into the weights. The first panel uses Gauss-Jacobi so the
/// endpoint singularity r^beta (beta > -1) is integrated exactly; later panels are
/// Gauss-Legendre.
QuadratureRule1D radial_panel_rule(double beta, double sigma = 1.0, const RadialPanels& panels = {});

/// n-point Gauss rule for the weight r^beta exp(-r^2 / (2 sigma^2)) on (0, inf), built
/// by the discretized Stieltjes procedure on a fine panel rule.
QuadratureRule1D radial_gauss_rule(double beta, double sigma, int n);

/// integral_0^inf r^{gamma + 2 + rho_exponent} smooth(r) exp(-r^2/2) dr. The r^2 in the
/// exponent is the spherical Jacobian. DomainError unless gamma + 2 + rho_exponent > -1.
double radial_singular_integral(double gamma, int rho_exponent, const std::function<double(double)>& smooth,
                                const RadialPanels& panels = {});

}  // namespace fpl

#endif  // FPL_QUADRATURE_HPP
