#ifndef FPL_COLLISION_MODELS_HPP
#define FPL_COLLISION_MODELS_HPP

#include <Eigen/Dense>

#include "fpl/collision_kernel.hpp"
#include "fpl/spectral_state.hpp"

namespace fpl {

/// Q_alpha = sum A_alpha^{lambda kappa} f_lambda f_kappa over I_M0, from the first |I_M0|
/// coefficients of f (I_M0 is a prefix of I_M).
template <typename Derived>
Eigen::VectorXd contract(const CollisionTensor& tensor, const Eigen::MatrixBase<Derived>& f) {
    Eigen::VectorXd q = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(index_set_size(tensor.M0)));
    for (const auto& e : tensor.entries) q(e.alpha) += e.value * f(e.lambda) * f(e.kappa);
    return q;
}

/// Quadratic Galerkin right-hand side over I_M0. CompatibilityError if state.M < M0.
Eigen::VectorXd quadratic_rhs(const CollisionTensor& tensor, const SpectralState& state);

/// Linear Fokker-Planck right-hand side -2 |alpha| f_alpha over I_M.
Eigen::VectorXd linear_rhs(const SpectralState& state);

/// Quadratic on I_M0, linear on I_M \ I_M0. ConfigError unless state.M > M0.
Eigen::VectorXd hybrid_rhs(const CollisionTensor& tensor, const SpectralState& state);

}  // namespace fpl

#endif  // FPL_COLLISION_MODELS_HPP
