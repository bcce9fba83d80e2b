#ifndef FPL_INDEX_SPACE_HPP
#define FPL_INDEX_SPACE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace fpl {

/// Largest truncation degree supported; keeps every index component in 16 bits.
inline constexpr int kMaxDegree = 60;

/// Hermite multi-index (a1, a2, a3), one Hermite order per velocity axis.
struct MultiIndex {
    std::array<int, 3> a{0, 0, 0};

    constexpr MultiIndex() = default;
    constexpr MultiIndex(int a1, int a2, int a3) : a{a1, a2, a3} {}

    constexpr int operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
    constexpr int& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
    constexpr int degree() const { return a[0] + a[1] + a[2]; }
    constexpr bool valid() const { return a[0] >= 0 && a[1] >= 0 && a[2] >= 0; }

    /// Unit index e_axis, axis in {0, 1, 2}.
    static constexpr MultiIndex unit(int axis) {
        MultiIndex e;
        e[axis] = 1;
        return e;
    }

    friend constexpr MultiIndex operator+(MultiIndex x, const MultiIndex& y) {
        for (int i = 0; i < 3; ++i) x[i] += y[i];
        return x;
    }
    friend constexpr MultiIndex operator-(MultiIndex x, const MultiIndex& y) {
        for (int i = 0; i < 3; ++i) x[i] -= y[i];
        return x;
    }
    friend constexpr MultiIndex operator*(int k, MultiIndex x) {
        for (int i = 0; i < 3; ++i) x[i] *= k;
        return x;
    }
    friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Componentwise x <= y.
constexpr bool dominated_by(const MultiIndex& x, const MultiIndex& y) {
    return x[0] <= y[0] && x[1] <= y[1] && x[2] <= y[2];
}

/// Exchange components i and j (0-based).
constexpr MultiIndex swapped(MultiIndex x, int i, int j) {
    const int tmp = x[i];
    x[i] = x[j];
    x[j] = tmp;
    return x;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha);

/// Burnett index (l, m, n): spherical-harmonic degree l, order m (|m| <= l) and Laguerre index n.
struct BurnettIndex {
    int l = 0;
    int m = 0;
    int n = 0;

    constexpr bool valid() const { return l >= 0 && n >= 0 && m >= -l && m <= l; }
    /// l + 2n
    constexpr int degree() const { return l + 2 * n; }

    friend constexpr auto operator<=>(const BurnettIndex&, const BurnettIndex&) = default;
};

std::ostream& operator<<(std::ostream& os, const BurnettIndex& index);

/// Number of multi-indices with |alpha| <= M.
constexpr std::size_t index_set_size(int M) {
    if (M < 0) return 0;
    const auto m = static_cast<std::size_t>(M);
    return (m + 1) * (m + 2) * (m + 3) / 6;
}

/// Number of multi-indices with |alpha| == d (equally, of Burnett indices of degree d).
constexpr std::size_t degree_block_size(int d) {
    if (d < 0) return 0;
    const auto k = static_cast<std::size_t>(d);
    return (k + 1) * (k + 2) / 2;
}

/// All multi-indices of degree <= M in graded order: ascending degree, then ascending
/// lexicographic (a1, a2, a3). The order is a prefix order: I_{M0} occupies ranks
/// [0, |I_{M0}|) of I_M for every M0 <= M.
class IndexSet {
public:
    explicit IndexSet(int max_degree);

    int max_degree() const { return max_degree_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<MultiIndex>& entries() const { return entries_; }
    const MultiIndex& operator[](std::size_t offset) const { return entries_[offset]; }

    bool contains(const MultiIndex& alpha) const {
        return alpha.valid() && alpha.degree() <= max_degree_;
    }

    /// Offset of alpha; NotFoundError when alpha is outside the set.
    std::size_t rank(const MultiIndex& alpha) const;
    /// Inverse of rank; NotFoundError when offset >= size().
    const MultiIndex& unrank(std::size_t offset) const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    int max_degree_;
    std::vector<MultiIndex> entries_;
};

IndexSet build_index_set(int max_degree);

/// Rank of alpha in the graded ordering of any index set containing it.
std::size_t graded_rank(const MultiIndex& alpha);

/// Multi-indices with |alpha| == d in graded order.
std::vector<MultiIndex> indices_of_degree(int d);

/// All Burnett indices with l + 2n == d, ordered by ascending l then ascending m.
std::vector<BurnettIndex> burnett_indices_of_degree(int d);

/// Position of a Burnett index inside burnett_indices_of_degree(index.degree()).
std::size_t burnett_rank_in_degree(const BurnettIndex& index);

/// Position of a multi-index inside indices_of_degree(alpha.degree()).
std::size_t rank_in_degree(const MultiIndex& alpha);

}  // namespace fpl

#endif  // FPL_INDEX_SPACE_HPP
