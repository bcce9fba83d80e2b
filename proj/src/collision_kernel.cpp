#include "fpl/collision_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "fpl/errors.hpp"

namespace fpl {

namespace {

double factorial(int n) {
    static const auto table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    return table.at(static_cast<std::size_t>(n));
}

double factorial(const MultiIndex& a) { return factorial(a[0]) * factorial(a[1]) * factorial(a[2]); }

// binom(x, k) for real x by falling factorials
double gbinom(double x, int k) {
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= (x - j) / (j + 1);
    return v;
}

double laguerre_sum(double mu, double a, double c, int m, int n) {
    double sum = 0.0;
    for (int i = 0; i <= std::min(m, n); ++i) sum += gbinom(mu - a, m - i) * gbinom(mu - c, n - i) * gbinom(i + mu, i);
    return ((m + n) % 2 == 0) ? sum : -sum;
}

// D_{n1 n2}^{l1 l2} K((gamma + l1 + l2 + 3)/2, l1 + 1/2, l2 + 1/2, n1, n2), with the
// Gamma factors combined in log space.
double radial_factor(double gamma, int l1, int n1, int l2, int n2) {
    const double mu = 0.5 * (gamma + l1 + l2 + 3);
    const double log_scale = 0.5 * (std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0) - std::lgamma(n1 + l1 + 1.5) -
                                    std::lgamma(n2 + l2 + 1.5)) +
                             std::lgamma(mu + 1.0);
    return std::exp(log_scale) * laguerre_sum(mu, l1 + 0.5, l2 + 0.5, n1, n2);
}

enum class GKind { k33, k13 };

struct Canonical {
    GKind kind;
    int swap_a;  // -1: no permutation
    int swap_b;
};

Canonical canonical_pair(int s, int t) {
    if (s < 0 || s > 2 || t < 0 || t > 2) throw DomainError("axis out of range");
    if (s > t) std::swap(s, t);
    if (s == t) {
        if (s == 2) return {GKind::k33, -1, -1};
        return {GKind::k33, s, 2};
    }
    if (s == 0 && t == 2) return {GKind::k13, -1, -1};
    if (s == 0 && t == 1) return {GKind::k13, 1, 2};
    return {GKind::k13, 0, 1};
}

MultiIndex permute(const MultiIndex& x, const Canonical& c) {
    return c.swap_a < 0 ? x : swapped(x, c.swap_a, c.swap_b);
}

double angular(GKind kind, const BurnettIndex& a, const BurnettIndex& b) {
    return kind == GKind::k33 ? coeff_F(2, 2, a.l, a.m, b.l, b.m) : coeff_F(0, 2, a.l, a.m, b.l, b.m);
}

// Real weight matrix W(ahat, bhat) = 2^{(gamma+2)/2} R F between Burnett blocks of degree dp, dq.
Eigen::MatrixXd burnett_weights(GKind kind, double gamma, int dp, int dq) {
    const auto bp = burnett_indices_of_degree(dp);
    const auto bq = burnett_indices_of_degree(dq);
    const double pref = std::exp2(0.5 * (gamma + 2));
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(bp.size()), static_cast<Eigen::Index>(bq.size()));
    for (std::size_t i = 0; i < bp.size(); ++i)
        for (std::size_t j = 0; j < bq.size(); ++j) {
            const double f = angular(kind, bp[i], bq[j]);
            if (f == 0.0) continue;
            w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                pref * f * radial_factor(gamma, bp[i].l, bp[i].n, bq[j].l, bq[j].n);
        }
    return w;
}

void check_gamma(double gamma) {
    if (!(gamma > -5.0)) throw DomainError("gamma must exceed -5 (got " + std::to_string(gamma) + ")");
}

constexpr double kImaginaryTolerance = 1e-10;

}  // namespace

void KernelParams::validate() const {
    check_gamma(gamma);
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
}

double coeff_a(int p, int q, int lambda, int kappa) {
    if (p < 0 || q < 0 || lambda < 0 || kappa < 0 || p + q != lambda + kappa) return 0.0;
    double sum = 0.0;
    for (int s = std::max(0, p - kappa); s <= std::min(p, lambda); ++s) {
        const double term = 1.0 / (factorial(s) * factorial(lambda - s) * factorial(p - s) * factorial(q - lambda + s));
        sum += ((q - lambda + s) % 2 == 0) ? term : -term;
    }
    return std::exp2(-0.5 * (p + q)) * factorial(lambda) * factorial(kappa) * sum;
}

double coeff_a(const MultiIndex& p, const MultiIndex& q, const MultiIndex& lambda, const MultiIndex& kappa) {
    double v = 1.0;
    for (int i = 0; i < 3 && v != 0.0; ++i) v *= coeff_a(p[i], q[i], lambda[i], kappa[i]);
    return v;
}

double coeff_F(int s, int t, int l1, int m1, int l2, int m2) {
    if (!BurnettIndex{l1, m1, 0}.valid() || !BurnettIndex{l2, m2, 0}.valid())
        throw DomainError("coeff_F: invalid spherical-harmonic index");
    if (s > t) std::swap(s, t);
    const bool f33 = (s == 2 && t == 2);
    if (!f33 && !(s == 0 && t == 2)) throw DomainError("coeff_F: only (0,2) and (2,2) are available");

    // k selects Y_{l2 +- 1} from n_3 Y_{l2}^{m2}, j selects Y_{l1 +- 1} from n_s Y_{l1}^{m1}
    double sum = 0.0;
    const int mus = f33 ? 1 : 2;
    for (int il = 0; il < mus; ++il) {
        const int mu = f33 ? 0 : (il == 0 ? 1 : -1);
        if (m1 + mu != -m2) continue;
        for (int k = 0; k <= 1; ++k)
            for (int j = 0; j <= 1; ++j) {
                if (l1 + k - j != l2 - k + j) continue;
                const double e2 = coeff_eta(k == 0 ? l2 + 1 : -l2, m2, 0);
                const double e1 = coeff_eta(j == 0 ? l1 + 1 : -l1, m1, mu);
                const double term = e2 * e1;
                sum += (f33 || (il + j) % 2 == 0) ? term : -term;
            }
    }
    if (f33) return (m2 % 2 == 0) ? sum : -sum;
    return ((m2 + 1) % 2 == 0 ? 1.0 : -1.0) * sum / std::sqrt(2.0);
}

double coeff_K(double mu, double a, double c, int m, int n) {
    if (!(mu > -1.0)) throw DomainError("coeff_K: mu must exceed -1");
    return std::tgamma(mu + 1.0) * laguerre_sum(mu, a, c, m, n);
}

double coeff_G(const KernelParams& params, int s, int t, const MultiIndex& p, const MultiIndex& q,
               const ConversionTable& conv) {
    check_gamma(params.gamma);
    const auto c = canonical_pair(s, t);
    const MultiIndex pp = permute(p, c);
    const MultiIndex qq = permute(q, c);
    if (std::max(pp.degree(), qq.degree()) > conv.max_degree())
        throw CapacityError("conversion table too small for G");
    const auto w = burnett_weights(c.kind, params.gamma, pp.degree(), qq.degree());
    const auto cp = conv.block(pp.degree()).col(static_cast<Eigen::Index>(rank_in_degree(pp)));
    const auto cq = conv.block(qq.degree()).col(static_cast<Eigen::Index>(rank_in_degree(qq)));
    const Complex value = (cp.transpose() * w.cast<Complex>() * cq).value();
    if (std::abs(value.imag()) > kImaginaryTolerance * std::sqrt(factorial(p) * factorial(q)))
        throw ConsistencyError("G: imaginary residue " + std::to_string(value.imag()));
    return value.real();
}

int GTable::pair_slot(int s, int t) {
    if (s < 0 || s > 2 || t < 0 || t > 2) throw DomainError("axis out of range");
    if (s == t) return s;
    return s + t + 2;  // (0,1) -> 3, (0,2) -> 4, (1,2) -> 5
}

GTable::GTable(double gamma, int max_p, int max_q, const ConversionTable& conv)
    : gamma_(gamma), max_p_(max_p), max_q_(max_q) {
    check_gamma(gamma);
    if (max_p < 0 || max_q < 0) throw DomainError("GTable: negative degree bound");
    if (std::max(max_p, max_q) > conv.max_degree()) throw CapacityError("conversion table too small for GTable");

    const IndexSet rows(max_p);
    const IndexSet cols(max_q);
    const auto nr = static_cast<Eigen::Index>(rows.size());
    const auto nc = static_cast<Eigen::Index>(cols.size());

    std::array<Eigen::MatrixXd, 2> base{Eigen::MatrixXd::Zero(nr, nc), Eigen::MatrixXd::Zero(nr, nc)};
    for (int kind = 0; kind < 2; ++kind)
        for (int dp = 0; dp <= max_p; ++dp)
            for (int dq = dp % 2; dq <= max_q; dq += 2) {
                const auto w = burnett_weights(kind == 0 ? GKind::k33 : GKind::k13, gamma, dp, dq);
                const Eigen::MatrixXcd blk = conv.block(dp).transpose() * w.cast<Complex>() * conv.block(dq);
                const auto r0 = static_cast<Eigen::Index>(index_set_size(dp - 1));
                const auto c0 = static_cast<Eigen::Index>(index_set_size(dq - 1));
                base[static_cast<std::size_t>(kind)].block(r0, c0, blk.rows(), blk.cols()) = blk.real();
                for (Eigen::Index j = 0; j < blk.cols(); ++j)
                    for (Eigen::Index i = 0; i < blk.rows(); ++i) {
                        const double scale = std::sqrt(factorial(rows[static_cast<std::size_t>(r0 + i)]) *
                                                       factorial(cols[static_cast<std::size_t>(c0 + j)]));
                        imaginary_residue_ = std::max(imaginary_residue_, std::abs(blk(i, j).imag()) / scale);
                    }
            }
    if (imaginary_residue_ > kImaginaryTolerance)
        throw ConsistencyError("GTable: imaginary residue " + std::to_string(imaginary_residue_));

    for (int s = 0; s < 3; ++s)
        for (int t = s; t < 3; ++t) {
            const auto c = canonical_pair(s, t);
            const auto& src = base[c.kind == GKind::k33 ? 0 : 1];
            auto& dst = g_[static_cast<std::size_t>(pair_slot(s, t))];
            if (c.swap_a < 0) {
                dst = src;
                continue;
            }
            std::vector<Eigen::Index> pr(rows.size()), pc(cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i) pr[i] = static_cast<Eigen::Index>(graded_rank(permute(rows[i], c)));
            for (std::size_t j = 0; j < cols.size(); ++j) pc[j] = static_cast<Eigen::Index>(graded_rank(permute(cols[j], c)));
            dst = src(pr, pc);
        }
}

double GTable::operator()(int s, int t, const MultiIndex& p, const MultiIndex& q) const {
    if (!p.valid() || !q.valid()) throw DomainError("GTable: negative index");
    if (p.degree() > max_p_ || q.degree() > max_q_) throw CapacityError("GTable: index beyond table bounds");
    return matrix(s, t)(static_cast<Eigen::Index>(graded_rank(p)), static_cast<Eigen::Index>(graded_rank(q)));
}

double coeff_B_gamma(const KernelParams& params, int s, int t, const MultiIndex& p, const MultiIndex& q,
                     const ConversionTable& conv) {
    double v = -coeff_G(params, s, t, p, q, conv);
    if (s == t)
        for (int r = 0; r < 3; ++r) v += coeff_G(params, r, r, p, q, conv);
    return v;
}

double coeff_A(const KernelParams& params, const MultiIndex& alpha, const MultiIndex& lambda,
               const MultiIndex& kappa, const GTable& gtable) {
    params.validate();
    if (params.gamma != gtable.gamma()) throw CompatibilityError("coeff_A: GTable built for a different gamma");
    if (!alpha.valid() || !lambda.valid() || !kappa.valid()) throw DomainError("coeff_A: negative index");
    if (alpha.degree() - 1 > gtable.max_p() || lambda.degree() + kappa.degree() + 1 > gtable.max_q())
        throw CapacityError("coeff_A: GTable too small");

    double sum = 0.0;
    for (int s = 0; s < 3; ++s) {
        if (alpha[s] == 0) continue;
        const MultiIndex top = alpha - MultiIndex::unit(s);
        for (int p1 = 0; p1 <= top[0]; ++p1)
            for (int p2 = 0; p2 <= top[1]; ++p2)
                for (int p3 = 0; p3 <= top[2]; ++p3) {
                    const MultiIndex p(p1, p2, p3);
                    const MultiIndex q = top - p;
                    for (int t = 0; t < 3; ++t) {
                        const MultiIndex kt = kappa + MultiIndex::unit(t);
                        const MultiIndex r = lambda + kt - p;
                        if (!r.valid()) continue;
                        const double a = coeff_a(p, r, kt, lambda) - coeff_a(p, r, lambda, kt);
                        if (a == 0.0) continue;
                        double b = -gtable(s, t, q, r);
                        if (s == t)
                            for (int u = 0; u < 3; ++u) b += gtable(u, u, q, r);
                        sum += a * b / factorial(q);
                    }
                }
    }
    return std::exp2(0.5 * (params.gamma + 3 - alpha.degree())) * params.lambda * sum;
}

double CollisionTensor::at(std::size_t alpha, std::size_t lambda, std::size_t kappa) const {
    const TensorEntry key{static_cast<std::uint32_t>(alpha), static_cast<std::uint32_t>(lambda),
                          static_cast<std::uint32_t>(kappa), 0.0};
    auto less = [](const TensorEntry& x, const TensorEntry& y) {
        return std::tie(x.alpha, x.lambda, x.kappa) < std::tie(y.alpha, y.lambda, y.kappa);
    };
    const auto it = std::lower_bound(entries.begin(), entries.end(), key, less);
    if (it == entries.end() || less(key, *it)) return 0.0;
    return it->value;
}

CollisionTensor build_tensor(const KernelParams& params, int M0) {
    return build_tensor(params, M0, build_conversion(conversion_degree_for(M0)));
}

CollisionTensor build_tensor(const KernelParams& params, int M0, const ConversionTable& conv) {
    params.validate();
    if (M0 < 2) throw DomainError("build_tensor: M0 must be at least 2");
    if (M0 > kMaxDegree) throw DomainError("build_tensor: M0 too large");
    if (conv.max_degree() < conversion_degree_for(M0)) throw CapacityError("build_tensor: conversion table too small");

    const GTable gtable(params.gamma, M0 - 1, 2 * M0 + 1, conv);
    // B_r^q(s, t) with rows q and columns r
    std::array<Eigen::MatrixXd, 6> bmat;
    const Eigen::MatrixXd trace = gtable.matrix(0, 0) + gtable.matrix(1, 1) + gtable.matrix(2, 2);
    for (int s = 0; s < 3; ++s)
        for (int t = s; t < 3; ++t) {
            auto& b = bmat[static_cast<std::size_t>(GTable::pair_slot(s, t))];
            b = -gtable.matrix(s, t);
            if (s == t) b += trace;
        }

    // rank lookup for indices with components up to 2 M0 + 1
    const int dim = 2 * M0 + 2;
    std::vector<std::uint32_t> rank_lut(static_cast<std::size_t>(dim * dim * dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                rank_lut[static_cast<std::size_t>((i * dim + j) * dim + k)] =
                    static_cast<std::uint32_t>(graded_rank(MultiIndex(i, j, k)));
    auto rank_of = [&](const MultiIndex& x) {
        return rank_lut[static_cast<std::size_t>((x[0] * dim + x[1]) * dim + x[2])];
    };

    // one-dimensional a_{p, l + k - p}^{l k}
    const int na = M0 + 2;
    std::vector<double> a1d(static_cast<std::size_t>(na * na * na));
    for (int p = 0; p < na; ++p)
        for (int l = 0; l < na; ++l)
            for (int k = 0; k < na; ++k)
                a1d[static_cast<std::size_t>((p * na + l) * na + k)] = coeff_a(p, l + k - p, l, k);
    auto a3 = [&](const MultiIndex& p, const MultiIndex& l, const MultiIndex& k) {
        double v = 1.0;
        for (int i = 0; i < 3; ++i) v *= a1d[static_cast<std::size_t>((p[i] * na + l[i]) * na + k[i])];
        return v;
    };

    const IndexSet set(M0);
    const std::size_t n = set.size();

    // (lambda, kappa) pairs grouped by the parity pattern of lambda + kappa
    auto parity = [](const MultiIndex& x) { return (x[0] & 1) | ((x[1] & 1) << 1) | ((x[2] & 1) << 2); };
    std::array<std::vector<std::pair<std::uint32_t, std::uint32_t>>, 8> pairs;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
            pairs[static_cast<std::size_t>(parity(set[l] + set[k]))].emplace_back(l, k);

    CollisionTensor tensor;
    tensor.params = params;
    tensor.M0 = M0;
    std::vector<double> acc;
    for (std::size_t ia = 0; ia < n; ++ia) {
        const MultiIndex& alpha = set[ia];
        const auto& group = pairs[static_cast<std::size_t>(parity(alpha))];
        acc.assign(group.size(), 0.0);
        for (int s = 0; s < 3; ++s) {
            if (alpha[s] == 0) continue;
            const MultiIndex top = alpha - MultiIndex::unit(s);
            for (int p1 = 0; p1 <= top[0]; ++p1)
                for (int p2 = 0; p2 <= top[1]; ++p2)
                    for (int p3 = 0; p3 <= top[2]; ++p3) {
                        const MultiIndex p(p1, p2, p3);
                        const MultiIndex q = top - p;
                        const double qinv = 1.0 / factorial(q);
                        const auto rq = static_cast<Eigen::Index>(rank_of(q));
                        for (int t = 0; t < 3; ++t) {
                            const auto& b = bmat[static_cast<std::size_t>(GTable::pair_slot(s, t))];
                            const MultiIndex et = MultiIndex::unit(t);
                            for (std::size_t g = 0; g < group.size(); ++g) {
                                const MultiIndex& lambda = set[group[g].first];
                                const MultiIndex kt = set[group[g].second] + et;
                                const MultiIndex r = lambda + kt - p;
                                if (!r.valid()) continue;
                                const double a = a3(p, kt, lambda) - a3(p, lambda, kt);
                                if (a == 0.0) continue;
                                acc[g] += qinv * a * b(rq, static_cast<Eigen::Index>(rank_of(r)));
                            }
                        }
                    }
        }
        const double scale = std::exp2(0.5 * (params.gamma + 3 - alpha.degree())) * params.lambda;
        for (std::size_t g = 0; g < group.size(); ++g) {
            const double v = scale * acc[g];
            if (std::abs(v) >= 1e-14)
                tensor.entries.push_back({static_cast<std::uint32_t>(ia), group[g].first, group[g].second, v});
        }
    }
    return tensor;
}

}  // namespace fpl
