#ifndef FPL_SPECTRAL_STATE_HPP
#define FPL_SPECTRAL_STATE_HPP

#include <Eigen/Dense>

#include "fpl/index_space.hpp"

namespace fpl {

/// Coefficients f_alpha of f = sum f_alpha H^alpha M over I_M (graded order) at time t.
struct SpectralState {
    int M = 0;
    Eigen::VectorXd coeffs;
    double t = 0.0;

    SpectralState() = default;
    explicit SpectralState(int max_degree, double time = 0.0)
        : M(max_degree), coeffs(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(index_set_size(max_degree)))), t(time) {}

    /// f_0 = 1, everything else zero.
    static SpectralState maxwellian(int max_degree) {
        SpectralState s(max_degree);
        s.coeffs(0) = 1.0;
        return s;
    }

    double operator[](const MultiIndex& alpha) const {
        return alpha.degree() <= M ? coeffs(static_cast<Eigen::Index>(graded_rank(alpha))) : 0.0;
    }
    double& operator[](const MultiIndex& alpha) { return coeffs(static_cast<Eigen::Index>(graded_rank(alpha))); }

    /// Same coefficients restricted (or zero-padded) to I_degree.
    SpectralState resized(int degree) const {
        SpectralState s(degree, t);
        const auto n = std::min(s.coeffs.size(), coeffs.size());
        s.coeffs.head(n) = coeffs.head(n);
        return s;
    }
};

}  // namespace fpl

#endif  // FPL_SPECTRAL_STATE_HPP
