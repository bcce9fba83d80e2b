#include "fpl/observables.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fpl/quadrature.hpp"

namespace fpl {

namespace {

double fact(int n) { return std::tgamma(n + 1.0); }

// Hermite values He_0..He_n at x
Eigen::VectorXd hermite_row(int n, double x) {
    Eigen::VectorXd h(n + 1);
    hermite_1d_all(x, std::span<double>(h.data(), static_cast<std::size_t>(h.size())));
    return h;
}

}  // namespace

double raw_moment(const SpectralState& state, const MultiIndex& alpha) {
    // x^n = sum_k n! / (k! (n-2k)! 2^k) He_{n-2k}, and integral He_m f = m! f_m per axis
    double sum = 0.0;
    for (int k1 = 0; 2 * k1 <= alpha[0]; ++k1)
        for (int k2 = 0; 2 * k2 <= alpha[1]; ++k2)
            for (int k3 = 0; 2 * k3 <= alpha[2]; ++k3) {
                const MultiIndex beta = alpha - 2 * MultiIndex(k1, k2, k3);
                if (beta.degree() > state.M) continue;
                double c = 1.0;
                const int ks[3] = {k1, k2, k3};
                for (int i = 0; i < 3; ++i) c *= fact(alpha[i]) / (fact(ks[i]) * std::ldexp(1.0, ks[i]));
                sum += c * state[beta];
            }
    return sum;
}

Moments moments(const SpectralState& state) {
    Moments m;
    m.rho = state.coeffs(0);
    if (state.M < 1) return m;
    for (int i = 0; i < 3; ++i) m.u(i) = state[MultiIndex::unit(i)] / m.rho;
    m.has_velocity = true;
    if (state.M < 2) return m;

    Eigen::Matrix3d p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            p(i, j) = raw_moment(state, MultiIndex::unit(i) + MultiIndex::unit(j)) - m.rho * m.u(i) * m.u(j);
    m.theta = p.trace() / (3.0 * m.rho);
    m.sigma = p - m.rho * m.theta * Eigen::Matrix3d::Identity();
    m.has_stress = true;
    if (state.M < 3) return m;

    // q_i = 1/2 integral |c|^2 c_i f, c = v - u
    const Eigen::Vector3d& u = m.u;
    auto e = [](int i) { return MultiIndex::unit(i); };
    for (int i = 0; i < 3; ++i) {
        double qi = 0.0;
        for (int j = 0; j < 3; ++j) {
            const MultiIndex jj = 2 * e(j);
            const double m3 = raw_moment(state, jj + e(i));
            const double mjj = raw_moment(state, jj);
            const double mij = raw_moment(state, e(i) + e(j));
            qi += m3 - u(i) * mjj - 2 * u(j) * mij + 2 * m.rho * u(i) * u(j) * u(j);
        }
        m.q(i) = 0.5 * qi;
    }
    m.has_heat_flux = true;
    return m;
}

Eigen::VectorXd marginal_1d(const SpectralState& state, std::span<const double> v1) {
    Eigen::VectorXd g(static_cast<Eigen::Index>(v1.size()));
    const double norm = 1.0 / std::sqrt(2 * std::numbers::pi);
    for (std::size_t k = 0; k < v1.size(); ++k) {
        const auto h = hermite_row(state.M, v1[k]);
        double sum = 0.0;
        for (int n = 0; n <= state.M; ++n) sum += state[MultiIndex(n, 0, 0)] * h(n);
        g(static_cast<Eigen::Index>(k)) = sum * norm * std::exp(-0.5 * v1[k] * v1[k]);
    }
    return g;
}

Eigen::MatrixXd marginal_2d(const SpectralState& state, std::span<const double> v1, std::span<const double> v2) {
    const int M = state.M;
    // coefficient matrix c(a, b) = f_{(a, b, 0)}
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(M + 1, M + 1);
    for (int a = 0; a <= M; ++a)
        for (int b = 0; a + b <= M; ++b) c(a, b) = state[MultiIndex(a, b, 0)];
    Eigen::MatrixXd h1(static_cast<Eigen::Index>(v1.size()), M + 1);
    Eigen::MatrixXd h2(static_cast<Eigen::Index>(v2.size()), M + 1);
    const double norm = 1.0 / std::sqrt(2 * std::numbers::pi);
    for (std::size_t k = 0; k < v1.size(); ++k)
        h1.row(static_cast<Eigen::Index>(k)) = hermite_row(M, v1[k]).transpose() * norm * std::exp(-0.5 * v1[k] * v1[k]);
    for (std::size_t k = 0; k < v2.size(); ++k)
        h2.row(static_cast<Eigen::Index>(k)) = hermite_row(M, v2[k]).transpose() * norm * std::exp(-0.5 * v2[k] * v2[k]);
    return h1 * c * h2.transpose();
}

void WeightedPoints::append(const WeightedPoints& other) {
    points.insert(points.end(), other.points.begin(), other.points.end());
    weights.insert(weights.end(), other.weights.begin(), other.weights.end());
}

WeightedPoints gaussian_points(const Point3& center, double scale, int nodes_per_axis) {
    const auto gh = gauss_hermite_rule(nodes_per_axis);
    WeightedPoints out;
    const double norm = std::pow(2 * std::numbers::pi * scale * scale, -1.5);
    for (std::size_t i = 0; i < gh.size(); ++i)
        for (std::size_t j = 0; j < gh.size(); ++j)
            for (std::size_t k = 0; k < gh.size(); ++k) {
                const Point3 y(gh.nodes[i], gh.nodes[j], gh.nodes[k]);
                // weight / N(x), with N the Gaussian density the rule is built for
                const double density = norm * std::exp(-0.5 * y.squaredNorm());
                out.points.push_back(center + scale * y);
                out.weights.push_back(gh.weights[i] * gh.weights[j] * gh.weights[k] / density);
            }
    return out;
}

WeightedPoints spherical_points(int order, double r_max, int panels, int points_per_panel) {
    const auto sphere = sphere_rule(order);
    const auto gl = gauss_legendre_rule(points_per_panel);
    const double width = r_max / panels;
    WeightedPoints out;
    for (int p = 0; p < panels; ++p)
        for (std::size_t i = 0; i < gl.size(); ++i) {
            const double r = width * (p + 0.5 * (gl.nodes[i] + 1.0));
            const double wr = 0.5 * width * gl.weights[i] * r * r;
            for (std::size_t j = 0; j < sphere.size(); ++j) {
                out.points.push_back(r * sphere.directions[j]);
                out.weights.push_back(wr * sphere.weights[j]);
            }
        }
    return out;
}

SpectralState project_initial(const std::vector<DensityComponent>& components, int M) {
    const IndexSet set(M);
    SpectralState state(M);
    Eigen::VectorXd h1(M + 1), h2(M + 1), h3(M + 1);
    for (const auto& comp : components)
        for (std::size_t k = 0; k < comp.rule.points.size(); ++k) {
            const Point3& x = comp.rule.points[k];
            const double w = comp.rule.weights[k] * comp.density(x);
            if (w == 0.0) continue;
            h1 = hermite_row(M, x(0));
            h2 = hermite_row(M, x(1));
            h3 = hermite_row(M, x(2));
            for (std::size_t r = 0; r < set.size(); ++r) {
                const MultiIndex& a = set[r];
                state.coeffs(static_cast<Eigen::Index>(r)) += w * h1(a[0]) * h2(a[1]) * h3(a[2]);
            }
        }
    for (std::size_t r = 0; r < set.size(); ++r) {
        const MultiIndex& a = set[r];
        state.coeffs(static_cast<Eigen::Index>(r)) /= fact(a[0]) * fact(a[1]) * fact(a[2]);
    }
    return state;
}

SpectralState project_initial(const Density& f, int M) {
    return project_initial({DensityComponent{f, gaussian_points(Point3::Zero(), 1.0, 2 * M + 8)}}, M);
}

std::optional<std::string> normalization_warning(const SpectralState& state, double tol) {
    double worst = std::abs(state.coeffs(0) - 1.0);
    double energy = 0.0;
    if (state.M >= 1)
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(state[MultiIndex::unit(i)]));
    if (state.M >= 2) {
        for (int i = 0; i < 3; ++i) energy += state[2 * MultiIndex::unit(i)];
        worst = std::max(worst, std::abs(energy));
    }
    if (worst <= tol) return std::nullopt;
    const auto m = moments(state);
    std::ostringstream os;
    os << "initial state is not normalized (deviation " << worst << "): rho=" << m.rho << " u=(" << m.u(0) << ", "
       << m.u(1) << ", " << m.u(2) << ") theta=" << m.theta;
    return os.str();
}

}  // namespace fpl
