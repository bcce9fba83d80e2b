#include "fpl/hermite_burnett.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "binary_io.hpp"
#include "fpl/coupling.hpp"
#include "fpl/errors.hpp"

namespace fpl {

namespace {

constexpr double kConsistencyTolerance = 1e-10;
constexpr std::uint32_t kConversionFormatVersion = 1;

double log_factorial(const MultiIndex& alpha) {
    return std::lgamma(alpha[0] + 1.0) + std::lgamma(alpha[1] + 1.0) + std::lgamma(alpha[2] + 1.0);
}

// S_mu B_bhat expanded on Burnett polynomials (recursion of the basis functions).
void add_ladder_terms(const BurnettIndex& b, int mu, Complex weight, bool raising_only,
                      std::vector<BurnettTerm>& out) {
    const double scale = (mu == 0) ? 1.0 : std::sqrt(0.5);
    const double sign = (mu == 0) ? 1.0 : -1.0;  // (-1)^mu
    const int l = b.l, m = b.m, n = b.n;
    auto push = [&](BurnettIndex target, double c) {
        if (c == 0.0 || !target.valid()) return;
        out.push_back({target, weight * (scale * c)});
    };
    const double up = coeff_eta(l + 1, m, mu);
    const double down = coeff_eta(-l, m, mu);
    push({l + 1, m + mu, n}, std::sqrt(2.0 * (l + n) + 3.0) * up);
    push({l - 1, m + mu, n + 1}, -sign * std::sqrt(2.0 * (n + 1)) * down);
    if (!raising_only) {
        push({l + 1, m + mu, n - 1}, -std::sqrt(2.0 * n) * up);
        push({l - 1, m + mu, n}, sign * std::sqrt(2.0 * (n + l) + 1.0) * down);
    }
}

}  // namespace

ConversionTable::ConversionTable(int max_degree, std::vector<Eigen::MatrixXcd> blocks, double consistency_residual)
    : max_degree_(max_degree), blocks_(std::move(blocks)), consistency_residual_(consistency_residual) {}

const Eigen::MatrixXcd& ConversionTable::block(int degree) const {
    if (degree < 0 || degree > max_degree_)
        throw CapacityError("conversion table covers degrees <= " + std::to_string(max_degree_) + ", requested " +
                            std::to_string(degree));
    return blocks_[static_cast<std::size_t>(degree)];
}

Complex ConversionTable::operator()(const BurnettIndex& ahat, const MultiIndex& alpha) const {
    if (!ahat.valid() || !alpha.valid() || ahat.degree() != alpha.degree()) return {0.0, 0.0};
    const auto& blk = block(alpha.degree());
    return blk(static_cast<Eigen::Index>(burnett_rank_in_degree(ahat)), static_cast<Eigen::Index>(rank_in_degree(alpha)));
}

std::vector<BurnettTerm> multiply_by_velocity(const BurnettIndex& bhat, int axis, bool raising_only) {
    std::vector<BurnettTerm> out;
    const Complex one(1.0, 0.0), i(0.0, 1.0);
    switch (axis) {
        case 0:  // v1 = S_{-1} - S_1
            add_ladder_terms(bhat, -1, one, raising_only, out);
            add_ladder_terms(bhat, 1, -one, raising_only, out);
            break;
        case 1:  // v2 = i (S_{-1} + S_1)
            add_ladder_terms(bhat, -1, i, raising_only, out);
            add_ladder_terms(bhat, 1, i, raising_only, out);
            break;
        case 2:  // v3 = S_0
            add_ladder_terms(bhat, 0, one, raising_only, out);
            break;
        default:
            throw DomainError("axis must be 0, 1 or 2");
    }
    return out;
}

namespace {

// Column of C for alpha obtained from v_axis H^{alpha - e_axis} = H^alpha + (lower degree).
Eigen::VectorXcd column_from_parent(const Eigen::MatrixXcd& parent_block, const MultiIndex& alpha, int axis) {
    const int d = alpha.degree();
    const auto parent = alpha - MultiIndex::unit(axis);
    const auto parent_col = parent_block.col(static_cast<Eigen::Index>(rank_in_degree(parent)));
    const auto parents = burnett_indices_of_degree(d - 1);
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(degree_block_size(d)));
    for (std::size_t k = 0; k < parents.size(); ++k) {
        const Complex c = parent_col(static_cast<Eigen::Index>(k));
        if (c == Complex(0.0, 0.0)) continue;
        for (const auto& term : multiply_by_velocity(parents[k], axis))
            col(static_cast<Eigen::Index>(burnett_rank_in_degree(term.index))) += c * term.coefficient;
    }
    return col;
}

}  // namespace

ConversionTable build_conversion(int max_degree) {
    if (max_degree < 0) throw DomainError("conversion table degree must be >= 0");
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(static_cast<std::size_t>(max_degree + 1));
    blocks.push_back(Eigen::MatrixXcd::Constant(1, 1, Complex(1.0, 0.0)));
    double worst = 0.0;

    for (int d = 1; d <= max_degree; ++d) {
        const auto hermite = indices_of_degree(d);
        const auto size = static_cast<Eigen::Index>(degree_block_size(d));
        Eigen::MatrixXcd blk(size, size);
        for (std::size_t j = 0; j < hermite.size(); ++j) {
            const auto& alpha = hermite[j];
            // Primary axis: the last one with a nonzero order (prefers the real v3 ladder).
            int primary = 2;
            while (alpha[primary] == 0) --primary;
            const auto col = column_from_parent(blocks.back(), alpha, primary);
            blk.col(static_cast<Eigen::Index>(j)) = col;

            const double scale = std::exp(0.5 * log_factorial(alpha));
            for (int axis = 0; axis < primary; ++axis) {
                if (alpha[axis] == 0) continue;
                const auto alt = column_from_parent(blocks.back(), alpha, axis);
                worst = std::max(worst, (alt - col).cwiseAbs().maxCoeff() / scale);
            }
        }
        blocks.push_back(std::move(blk));
        if (worst > kConsistencyTolerance)
            throw ConsistencyError("Hermite-Burnett recursion inconsistent at degree " + std::to_string(d) +
                                   ": residual " + std::to_string(worst));
    }
    return ConversionTable(max_degree, std::move(blocks), worst);
}

Eigen::VectorXcd convert_hermite_to_burnett(const ConversionTable& table, int degree,
                                            const Eigen::Ref<const Eigen::VectorXd>& hermite_coeffs) {
    const auto& blk = table.block(degree);
    if (hermite_coeffs.size() != blk.cols())
        throw DomainError("expected " + std::to_string(blk.cols()) + " Hermite coefficients for degree " +
                          std::to_string(degree));
    return blk * hermite_coeffs.cast<Complex>();
}

double gram_residual(const ConversionTable& table, int max_degree) {
    double worst = 0.0;
    for (int d = 0; d <= max_degree; ++d) {
        const auto& blk = table.block(d);
        const Eigen::MatrixXcd gram = blk.transpose() * blk.conjugate();
        const auto hermite = indices_of_degree(d);
        for (Eigen::Index i = 0; i < gram.rows(); ++i) {
            const double si = std::exp(0.5 * log_factorial(hermite[static_cast<std::size_t>(i)]));
            for (Eigen::Index j = 0; j < gram.cols(); ++j) {
                const double sj = std::exp(0.5 * log_factorial(hermite[static_cast<std::size_t>(j)]));
                const double expected = (i == j) ? si * si : 0.0;
                worst = std::max(worst, std::abs(gram(i, j) - expected) / (si * sj));
            }
        }
    }
    return worst;
}

void save_conversion(const ConversionTable& table, std::ostream& out) {
    detail::ByteWriter w;
    w.magic("FPLT");
    w.u32(kConversionFormatVersion);
    w.u32(static_cast<std::uint32_t>(table.max_degree()));
    w.f64(table.consistency_residual());
    for (int d = 0; d <= table.max_degree(); ++d) {
        const auto& blk = table.block(d);
        for (Eigen::Index j = 0; j < blk.cols(); ++j)
            for (Eigen::Index i = 0; i < blk.rows(); ++i) {
                w.f64(blk(i, j).real());
                w.f64(blk(i, j).imag());
            }
    }
    w.finish(out);
}

ConversionTable load_conversion(std::istream& in) {
    detail::ByteReader r(in);
    r.expect_magic("FPLT");
    if (const auto version = r.u32(); version != kConversionFormatVersion)
        throw FormatError("unsupported conversion table version " + std::to_string(version));
    const auto max_degree = static_cast<int>(r.u32());
    if (max_degree > kMaxDegree) throw FormatError("conversion table degree out of range");
    const double residual = r.f64();
    std::vector<Eigen::MatrixXcd> blocks;
    for (int d = 0; d <= max_degree; ++d) {
        const auto size = static_cast<Eigen::Index>(degree_block_size(d));
        Eigen::MatrixXcd blk(size, size);
        for (Eigen::Index j = 0; j < size; ++j)
            for (Eigen::Index i = 0; i < size; ++i) {
                const double re = r.f64();
                blk(i, j) = Complex(re, r.f64());
            }
        blocks.push_back(std::move(blk));
    }
    if (!r.at_end()) throw FormatError("trailing bytes after conversion table");
    return ConversionTable(max_degree, std::move(blocks), residual);
}

}  // namespace fpl
