#ifndef FPL_COUPLING_HPP
#define FPL_COUPLING_HPP

namespace fpl {

/// Coupling coefficient eta_{l m}^{mu}, mu in {-1, 0, 1}, of the product rule
///   Y_l^m Y_1^mu = sqrt(3/4pi) (eta_{l+1,m}^mu Y_{l+1}^{m+mu} + (-1)^mu eta_{-l,m}^mu Y_{l-1}^{m+mu}).
/// The first argument may be negative. Returns 0 when the numerator vanishes;
/// DomainError when the radicand is negative (an unreachable coupling).
double coeff_eta(int l, int m, int mu);

}  // namespace fpl

#endif  // FPL_COUPLING_HPP
