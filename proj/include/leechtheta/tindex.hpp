#ifndef LEECHTHETA_TINDEX_HPP
#define LEECHTHETA_TINDEX_HPP

#include <compare>
#include <cstdint>
#include <ostream>

namespace leechtheta {

// Half-integral 2x2 index [m, r, n], i.e. the matrix [[m, r/2], [r/2, n]].
// det4 is the integer 4*det, trace is m + n.
struct TIndex {
    int64_t m = 0;
    int64_t r = 0;
    int64_t n = 0;

    constexpr int64_t trace() const { return m + n; }
    constexpr int64_t det4() const { return 4 * m * n - r * r; }
    constexpr bool is_psd() const { return m >= 0 && n >= 0 && det4() >= 0; }
    constexpr bool is_zero() const { return m == 0 && r == 0 && n == 0; }

    constexpr TIndex transposed_pair() const { return {n, r, m}; }
    constexpr TIndex negated_r() const { return {m, -r, n}; }

    friend constexpr bool operator==(const TIndex&, const TIndex&) = default;
};

// Canonical ordering: lexicographic by (trace, m, r). Within fixed trace and
// m the value of n is determined, so this is a total order.
struct TIndexLess {
    constexpr bool operator()(const TIndex& a, const TIndex& b) const {
        if (a.trace() != b.trace()) return a.trace() < b.trace();
        if (a.m != b.m) return a.m < b.m;
        return a.r < b.r;
    }
};

inline std::ostream& operator<<(std::ostream& os, const TIndex& t) {
    return os << "[" << t.m << "," << t.r << "," << t.n << "]";
}

} // namespace leechtheta

#endif
