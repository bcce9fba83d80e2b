#ifndef FPL_COLLISION_KERNEL_HPP
#define FPL_COLLISION_KERNEL_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fpl/coupling.hpp"
#include "fpl/hermite_burnett.hpp"
#include "fpl/index_space.hpp"

namespace fpl {

/// IPL kernel Psi(v) = lambda |v|^{gamma + 2}.
struct KernelParams {
    double gamma = 0.0;
    double lambda = 1.0;

    /// DomainError unless gamma > -5 and lambda > 0.
    void validate() const;

    friend bool operator==(const KernelParams&, const KernelParams&) = default;
};

/// One-dimensional coefficient a_{pq}^{lambda kappa}; zero unless p + q == lambda + kappa.
double coeff_a(int p, int q, int lambda, int kappa);

/// Componentwise product of the one-dimensional coefficients.
double coeff_a(const MultiIndex& p, const MultiIndex& q, const MultiIndex& lambda, const MultiIndex& kappa);

/// F_st(l1, m1, l2, m2) = integral over S^2 of n_s n_t Y_{l1}^{m1} Y_{l2}^{m2}.
/// Axes are 0-based; only (s, t) = (0, 2) and (2, 2) have closed forms here, the other
/// pairs are reached through index permutations in coeff_G.
double coeff_F(int s, int t, int l1, int m1, int l2, int m2);

/// integral_0^inf L_m^{(a)}(x) L_n^{(c)}(x) x^mu e^{-x} dx, mu > -1.
double coeff_K(double mu, double a, double c, int m, int n);

/// G_st(gamma, p, q) = integral |g|^gamma g_s g_t H^p(g) H^q(g) M(g) dg, axes 0-based.
/// Evaluated through the Burnett expansion; the table must cover |p| and |q|.
double coeff_G(const KernelParams& params, int s, int t, const MultiIndex& p, const MultiIndex& q,
               const ConversionTable& conv);

/// Dense G_st(p, q) over |p| <= max_p, |q| <= max_q. Only the (2,2) and (0,2) blocks are
/// evaluated; the other four pairs are filled by permuting indices.
class GTable {
public:
    GTable(double gamma, int max_p, int max_q, const ConversionTable& conv);

    double gamma() const { return gamma_; }
    int max_p() const { return max_p_; }
    int max_q() const { return max_q_; }

    /// Rows: graded rank of p in I_{max_p}; columns: graded rank of q in I_{max_q}.
    const Eigen::MatrixXd& matrix(int s, int t) const { return g_[pair_slot(s, t)]; }

    double operator()(int s, int t, const MultiIndex& p, const MultiIndex& q) const;

    /// Largest |Im| / sqrt(p! q!) discarded when taking the real part of the Burnett sums.
    double imaginary_residue() const { return imaginary_residue_; }

    static int pair_slot(int s, int t);

private:
    double gamma_;
    int max_p_;
    int max_q_;
    std::array<Eigen::MatrixXd, 6> g_;
    double imaginary_residue_ = 0.0;
};

/// B_p^q(gamma, s, t) = -G_st(p, q) + delta_st sum_r G_rr(p, q).
double coeff_B_gamma(const KernelParams& params, int s, int t, const MultiIndex& p, const MultiIndex& q,
                     const ConversionTable& conv);

/// A_alpha^{lambda, kappa}. The table must cover |p| <= |alpha| - 1 and
/// |q| <= |lambda| + |kappa| + 1.
double coeff_A(const KernelParams& params, const MultiIndex& alpha, const MultiIndex& lambda,
               const MultiIndex& kappa, const GTable& gtable);

struct TensorEntry {
    std::uint32_t alpha;
    std::uint32_t lambda;
    std::uint32_t kappa;
    double value;

    friend bool operator==(const TensorEntry&, const TensorEntry&) = default;
};

inline constexpr std::uint32_t kGradedLexOrdering = 1;

/// Sparse A_alpha^{lambda, kappa} over I_{M0}^3, entries sorted by (alpha, lambda, kappa) rank.
struct CollisionTensor {
    KernelParams params;
    int M0 = 0;
    std::uint32_t ordering = kGradedLexOrdering;
    std::vector<TensorEntry> entries;

    /// Value at the given ranks, zero if absent.
    double at(std::size_t alpha, std::size_t lambda, std::size_t kappa) const;

    friend bool operator==(const CollisionTensor&, const CollisionTensor&) = default;
};

/// Conversion degree needed by build_tensor.
constexpr int conversion_degree_for(int M0) { return 2 * M0 + 1; }

/// Every A over I_{M0}^3; |A| < 1e-14 is dropped. M0 >= 2; conv must reach 2 M0 + 1.
CollisionTensor build_tensor(const KernelParams& params, int M0, const ConversionTable& conv);
CollisionTensor build_tensor(const KernelParams& params, int M0);

struct TensorExpectation {
    std::optional<double> gamma;
    std::optional<double> lambda;
    std::optional<int> M0;
};

/// Binary cache ("FPLC", version 1) with trailing CRC-64.
void save_tensor(const CollisionTensor& tensor, std::ostream& out);
CollisionTensor load_tensor(std::istream& in, const TensorExpectation& expect = {});

}  // namespace fpl

#endif  // FPL_COLLISION_KERNEL_HPP
