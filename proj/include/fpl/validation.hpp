#ifndef FPL_VALIDATION_HPP
#define FPL_VALIDATION_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fpl/collision_kernel.hpp"

namespace fpl {

enum class ValidationLevel { fast, full };

ValidationLevel parse_validation_level(const std::string& name);

struct ValidationOptions {
    ValidationLevel level = ValidationLevel::fast;
    /// Test hook: perturbs one energy-row entry of every tensor before the tensor checks.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;

    bool passed() const { return measured < tolerance; }
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool passed() const;
};

/// Degrees and kernel exponents covered by a level.
int validation_degree(ValidationLevel level);
std::vector<double> validation_gammas(ValidationLevel level);

/// G_st(gamma, p, q) over I_max_degree by sphere x radial-panel quadrature.
Eigen::MatrixXd g_quadrature(double gamma, int s, int t, int max_degree);

/// max |a - b| / max(|b|, 1) over all entries.
double relative_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Largest violation of mass, momentum and energy conservation by quadratic_rhs on a few
/// random normalized states.
double tensor_conservation_defect(const CollisionTensor& tensor);

/// ||rhs(M)||_inf over the quadratic and hybrid models.
double equilibrium_defect(const CollisionTensor& tensor);

using ValidationProgress = std::function<void(const CheckResult&)>;

ValidationReport run_validation(const ValidationOptions& options, const ValidationProgress& progress = {});

std::string format_report(const ValidationReport& report);

}  // namespace fpl

#endif  // FPL_VALIDATION_HPP
