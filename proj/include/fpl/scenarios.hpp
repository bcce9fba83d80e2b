#ifndef FPL_SCENARIOS_HPP
#define FPL_SCENARIOS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fpl/basis.hpp"
#include "fpl/observables.hpp"
#include "fpl/spectral_state.hpp"

namespace fpl {

enum class ScenarioId { bkw, bigaussian, rosenbluth };

/// "bkw", "bigaussian", "rosenbluth"; ConfigError for anything else.
ScenarioId parse_scenario(std::string_view name);
std::string scenario_name(ScenarioId id);

/// tau(t) = 1 - 0.4 e^{-4t}
double bkw_tau(double t);
double bkw_density(double t, const Point3& v);
/// f_alpha(t) = (-0.2 e^{-4t})^{|alpha|/2} (1 - |alpha|/2) / prod (alpha_i/2)! for even alpha.
SpectralState bkw_coefficients(double t, int M);

/// Two Gaussians of variance 1/2 per axis centred at -+sqrt(3/2) e_1.
double bigaussian_density(const Point3& v);

/// Constants of f = A exp(-(B|v| - 1)^2) with rho = theta = 1.
struct RosenbluthConstants {
    double A;
    double B;
    double I2;  // integral_0^inf x^2 e^{-(x-1)^2} dx
    double I4;  // integral_0^inf x^4 e^{-(x-1)^2} dx
    /// a = pi (3 sqrt(pi) (erf 1 + 1) + 2/e) and the closing-parenthesis-last reading
    /// a = pi 3 sqrt(pi) (erf 1 + 1 + 2/e); b = pi (9.5 sqrt(pi) (erf 1 + 1) + 7/e).
    double a_grouped;
    double a_literal;
    double b;
    /// A = (b/3)^{3/2} / a^{5/2}, B = sqrt(b / (3a)) under each reading of a.
    double A_grouped, B_grouped;
    double A_literal, B_literal;
};

/// I2 and I4 by adaptive quadrature; B = sqrt(I4 / (3 I2)), A = B^3 / (4 pi I2).
const RosenbluthConstants& rosenbluth_constants();
double rosenbluth_density(const Point3& v);

/// Density split into components with matching integration rules, for project_initial.
std::vector<DensityComponent> scenario_components(ScenarioId id, int M);

/// Initial coefficients: the exact law for BKW, projection for the others.
SpectralState initial_state(ScenarioId id, int M);

}  // namespace fpl

#endif  // FPL_SCENARIOS_HPP
