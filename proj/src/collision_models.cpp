#include "fpl/collision_models.hpp"

#include <string>

#include "fpl/errors.hpp"

namespace fpl {

Eigen::VectorXd quadratic_rhs(const CollisionTensor& tensor, const SpectralState& state) {
    if (state.M < tensor.M0)
        throw CompatibilityError("state degree " + std::to_string(state.M) + " below tensor M0 " +
                                 std::to_string(tensor.M0));
    return contract(tensor, state.coeffs);
}

Eigen::VectorXd linear_rhs(const SpectralState& state) {
    Eigen::VectorXd q(state.coeffs.size());
    Eigen::Index k = 0;
    for (int d = 0; d <= state.M; ++d) {
        const auto n = static_cast<Eigen::Index>(degree_block_size(d));
        q.segment(k, n) = -2.0 * d * state.coeffs.segment(k, n);
        k += n;
    }
    return q;
}

Eigen::VectorXd hybrid_rhs(const CollisionTensor& tensor, const SpectralState& state) {
    if (state.M <= tensor.M0)
        throw ConfigError("hybrid model needs M > M0 (M=" + std::to_string(state.M) + ", M0=" +
                          std::to_string(tensor.M0) + ")");
    Eigen::VectorXd q = linear_rhs(state);
    q.head(static_cast<Eigen::Index>(index_set_size(tensor.M0))) = contract(tensor, state.coeffs);
    return q;
}

}  // namespace fpl
