#ifndef FPL_HERMITE_BURNETT_HPP
#define FPL_HERMITE_BURNETT_HPP

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "fpl/basis.hpp"
#include "fpl/index_space.hpp"

namespace fpl {

/// Change of basis H^alpha = sum_{|ahat|_B = |alpha|} C_{ahat}^alpha B_{ahat}, with
/// C_{ahat}^alpha = integral conj(B_{ahat}) H^alpha M dv. Stored as one dense complex
/// block per degree d: rows follow burnett_indices_of_degree(d), columns follow
/// indices_of_degree(d).
class ConversionTable {
public:
    ConversionTable() = default;
    ConversionTable(int max_degree, std::vector<Eigen::MatrixXcd> blocks, double consistency_residual);

    int max_degree() const { return max_degree_; }
    const Eigen::MatrixXcd& block(int degree) const;

    /// C_{ahat}^alpha; zero when the degrees differ.
    Complex operator()(const BurnettIndex& ahat, const MultiIndex& alpha) const;

    /// Largest disagreement (relative to sqrt(alpha!)) between the recursion run along
    /// different axes; a measure of the overdetermined system's consistency.
    double consistency_residual() const { return consistency_residual_; }

    friend bool operator==(const ConversionTable&, const ConversionTable&) = default;

private:
    int max_degree_ = -1;
    std::vector<Eigen::MatrixXcd> blocks_;
    double consistency_residual_ = 0.0;
};

/// Raising part of v_axis B_{bhat}: the components on Burnett polynomials of degree
/// |bhat|_B + 1. axis in {0, 1, 2}.
struct BurnettTerm {
    BurnettIndex index;
    Complex coefficient;
};
std::vector<BurnettTerm> multiply_by_velocity(const BurnettIndex& bhat, int axis, bool raising_only = true);

/// Builds C for all degrees <= max_degree, degree by degree from C_0^0 = 1.
/// Throws ConsistencyError if the axis-wise recursions disagree beyond 1e-10.
ConversionTable build_conversion(int max_degree);

/// Burnett coefficients of sum_alpha c_alpha H^alpha over the degree-d block.
Eigen::VectorXcd convert_hermite_to_burnett(const ConversionTable& table, int degree,
                                            const Eigen::Ref<const Eigen::VectorXd>& hermite_coeffs);

/// Max |sum_ahat C^alpha conj(C^beta) - delta alpha!| / sqrt(alpha! beta!) over degree <= max_degree.
double gram_residual(const ConversionTable& table, int max_degree);

/// Binary dump ("FPLT" section) of the table; load validates magic, version and checksum.
void save_conversion(const ConversionTable& table, std::ostream& out);
ConversionTable load_conversion(std::istream& in);

}  // namespace fpl

#endif  // FPL_HERMITE_BURNETT_HPP
