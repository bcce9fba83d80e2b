#include "fpl/index_space.hpp"

#include <ostream>
#include <string>

#include "fpl/errors.hpp"

namespace fpl {

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha) {
    return os << '(' << alpha[0] << ',' << alpha[1] << ',' << alpha[2] << ')';
}

std::ostream& operator<<(std::ostream& os, const BurnettIndex& index) {
    return os << '(' << index.l << ',' << index.m << ',' << index.n << ')';
}

std::size_t rank_in_degree(const MultiIndex& alpha) {
    const int d = alpha.degree();
    // Indices with a smaller first component come first; block for a1 = x has d - x + 1 entries.
    std::size_t offset = 0;
    for (int x = 0; x < alpha[0]; ++x) offset += static_cast<std::size_t>(d - x + 1);
    return offset + static_cast<std::size_t>(alpha[1]);
}

std::size_t graded_rank(const MultiIndex& alpha) {
    return index_set_size(alpha.degree() - 1) + rank_in_degree(alpha);
}

std::vector<MultiIndex> indices_of_degree(int d) {
    std::vector<MultiIndex> out;
    if (d < 0) return out;
    out.reserve(degree_block_size(d));
    for (int a1 = 0; a1 <= d; ++a1)
        for (int a2 = 0; a2 <= d - a1; ++a2) out.emplace_back(a1, a2, d - a1 - a2);
    return out;
}

IndexSet::IndexSet(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0 || max_degree > kMaxDegree)
        throw DomainError("index set degree must lie in [0, " + std::to_string(kMaxDegree) + "], got " +
                          std::to_string(max_degree));
    entries_.reserve(index_set_size(max_degree));
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& alpha : indices_of_degree(d)) entries_.push_back(alpha);
}

std::size_t IndexSet::rank(const MultiIndex& alpha) const {
    if (!contains(alpha)) {
        throw NotFoundError("multi-index (" + std::to_string(alpha[0]) + "," + std::to_string(alpha[1]) + "," +
                            std::to_string(alpha[2]) + ") is not in I_" + std::to_string(max_degree_));
    }
    return graded_rank(alpha);
}

const MultiIndex& IndexSet::unrank(std::size_t offset) const {
    if (offset >= entries_.size())
        throw NotFoundError("offset " + std::to_string(offset) + " outside index set of size " +
                            std::to_string(entries_.size()));
    return entries_[offset];
}

IndexSet build_index_set(int max_degree) { return IndexSet(max_degree); }

std::vector<BurnettIndex> burnett_indices_of_degree(int d) {
    std::vector<BurnettIndex> out;
    if (d < 0) return out;
    out.reserve(degree_block_size(d));
    for (int l = d % 2; l <= d; l += 2)
        for (int m = -l; m <= l; ++m) out.push_back({l, m, (d - l) / 2});
    return out;
}

std::size_t burnett_rank_in_degree(const BurnettIndex& index) {
    // Blocks l = d%2, d%2 + 2, ..., each of size 2l + 1.
    std::size_t offset = 0;
    for (int l = index.degree() % 2; l < index.l; l += 2) offset += static_cast<std::size_t>(2 * l + 1);
    return offset + static_cast<std::size_t>(index.m + index.l);
}

}  // namespace fpl
