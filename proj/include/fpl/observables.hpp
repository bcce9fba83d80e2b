#ifndef FPL_OBSERVABLES_HPP
#define FPL_OBSERVABLES_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fpl/basis.hpp"
#include "fpl/spectral_state.hpp"

namespace fpl {

/// Macroscopic quantities. u needs M >= 1, theta and sigma M >= 2, q M >= 3; the flags say
/// which fields were computed (the rest are zero).
struct Moments {
    double rho = 0.0;
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    double theta = 0.0;
    Eigen::Matrix3d sigma = Eigen::Matrix3d::Zero();
    Eigen::Vector3d q = Eigen::Vector3d::Zero();
    bool has_velocity = false;
    bool has_stress = false;
    bool has_heat_flux = false;
};

/// Raw moment integral v^alpha f dv from the coefficients.
double raw_moment(const SpectralState& state, const MultiIndex& alpha);

/// Moments from coefficients alone; centered on the mean velocity.
Moments moments(const SpectralState& state);

/// g(v1) = integral f dv2 dv3.
Eigen::VectorXd marginal_1d(const SpectralState& state, std::span<const double> v1);

/// h(v1, v2) = integral f dv3; rows follow v1, columns v2.
Eigen::MatrixXd marginal_2d(const SpectralState& state, std::span<const double> v1, std::span<const double> v2);

using Density = std::function<double(const Point3&)>;

/// Points and weights with integral F dv ~ sum w_i F(x_i).
struct WeightedPoints {
    std::vector<Point3> points;
    std::vector<double> weights;

    void append(const WeightedPoints& other);
};

/// Tensor Gauss-Hermite rule adapted to a Gaussian of the given center and per-axis
/// standard deviation: exact for F = polynomial x that Gaussian.
WeightedPoints gaussian_points(const Point3& center, double scale, int nodes_per_axis);

/// Spherical product rule (sphere rule of `order` times radial panels on [0, r_max]).
WeightedPoints spherical_points(int order, double r_max, int panels, int points_per_panel);

/// One term of a density together with the rule that integrates it.
struct DensityComponent {
    Density density;
    WeightedPoints rule;
};

/// f_alpha = (1/alpha!) integral H^alpha f dv, summed over the components.
SpectralState project_initial(const std::vector<DensityComponent>& components, int M);

/// Default rule: 2M + 8 Gauss-Hermite nodes per axis around the standard Maxwellian.
SpectralState project_initial(const Density& f, int M);

/// Message describing the deviation from f_0 = 1, f_{e_i} = 0, sum f_{2e_i} = 0, or
/// nothing when all are within `tol`.
std::optional<std::string> normalization_warning(const SpectralState& state, double tol = 1e-6);

}  // namespace fpl

#endif  // FPL_OBSERVABLES_HPP
