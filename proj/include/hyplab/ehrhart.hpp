#ifndef HYPLAB_EHRHART_HPP
#define HYPLAB_EHRHART_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/xn_poset.hpp>

namespace hyplab
{

// Lattice-point counts of the r-th dilates of one body, r = 0..n+1. Entry n+1
// is only used as a consistency check (the (n+1)-st difference must vanish).
struct CountTable {
    int n = 0;
    // Slice index; 0 marks the whole parallelepiped.
    int k = 0;
    bool closed = false;
    std::vector<BigInt> counts;
};

namespace detail
{

// Counts integer y with 0 <= y_1 <= r, 0 <= y_i <= 2r (i >= 2) and
// lo <= y_1 + ... + y_n <= hi. These are the coordinates y_i = 2(x_i - x_{i-1})
// in which the half-integer lattice becomes Z^n.
struct SliceCounter {
    int n;
    long long r;
    long long lo;
    long long hi;
    std::vector<long long> ub;
    // Largest sum still reachable from coordinate i onwards.
    std::vector<long long> tail;
    std::uint64_t count = 0;

    SliceCounter(int n_, long long r_, long long lo_, long long hi_) : n(n_), r(r_), lo(lo_), hi(hi_)
    {
        ub.assign(static_cast<std::size_t>(n), 2 * r);
        ub[0] = r;
        tail.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int i = n - 1; i >= 0; --i) tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i) + 1] + ub[static_cast<std::size_t>(i)];
    }

    void run(int i, long long partial)
    {
        const auto ui = static_cast<std::size_t>(i);
        if (i == n - 1) {
            // Last coordinate: count the interval [lo - partial, hi - partial] within [0, ub].
            const long long a = std::max(0LL, lo - partial);
            const long long b = std::min(ub[ui], hi - partial);
            if (b >= a) count += static_cast<std::uint64_t>(b - a + 1);
            return;
        }
        for (long long y = 0; y <= ub[ui]; ++y) {
            const long long s = partial + y;
            if (s > hi) break;
            if (s + tail[ui + 1] < lo) continue;
            run(i + 1, s);
        }
    }
};

inline void check_cells(int n, long long r, const Limits &lim)
{
    // Visited prefixes are bounded by (r+1) (2r+1)^(n-2).
    long double cells = 1;
    if (n >= 2) cells = static_cast<long double>(r + 1);
    for (int i = 2; i < n; ++i) cells *= static_cast<long double>(2 * r + 1);
    if (cells > static_cast<long double>(lim.max_cells)) {
        throw Error(ErrorCode::ResourceLimit, "lattice count for n = " + std::to_string(n) + ", r = " + std::to_string(r)
                                                  + " exceeds the cell cap " + std::to_string(lim.max_cells));
    }
}

inline BigInt count_slab(int n, long long r, long long lo, long long hi, const Limits &lim)
{
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    if (r < 0) throw Error(ErrorCode::InvalidArgument, "dilation must be nonnegative");
    check_cells(n, r, lim);
    if (hi < lo) return 0;
    SliceCounter c(n, r, lo, hi);
    c.run(0, 0);
    return BigInt(c.count);
}

} // namespace detail

inline BigInt count_half_open(int n, int k, long long r, const Limits &lim = default_limits())
{
    detail::check_k(n, k);
    if (k == 1) return detail::count_slab(n, r, 0, r, lim);
    return detail::count_slab(n, r, (k - 1) * r + 1, k * r, lim);
}

inline BigInt count_closed(int n, int k, long long r, const Limits &lim = default_limits())
{
    detail::check_k(n, k);
    return detail::count_slab(n, r, (k - 1) * r, k * r, lim);
}

inline BigInt count_parallelepiped(int n, long long r, const Limits &lim = default_limits())
{
    return detail::count_slab(n, r, 0, std::numeric_limits<long long>::max() / 4, lim);
}

inline CountTable half_open_counts(int n, int k, const Limits &lim = default_limits())
{
    CountTable t{n, k, false, {}};
    for (int r = 0; r <= n + 1; ++r) t.counts.push_back(count_half_open(n, k, r, lim));
    return t;
}

inline CountTable closed_counts(int n, int k, const Limits &lim = default_limits())
{
    CountTable t{n, k, true, {}};
    for (int r = 0; r <= n + 1; ++r) t.counts.push_back(count_closed(n, k, r, lim));
    return t;
}

inline CountTable parallelepiped_counts(int n, const Limits &lim = default_limits())
{
    CountTable t{n, 0, true, {}};
    for (int r = 0; r <= n + 1; ++r) t.counts.push_back(count_parallelepiped(n, r, lim));
    return t;
}

// h*_j = sum_{i <= j} (-1)^{j-i} C(d+1, j-i) L(i), d = table.n.
inline IntPolynomial hstar_from_counts(const CountTable &table)
{
    const int d = table.n;
    const auto &L = table.counts;
    if (static_cast<int>(L.size()) < d + 1) {
        throw Error(ErrorCode::InvalidArgument, "need " + std::to_string(d + 1) + " dilation counts for dimension "
                                                    + std::to_string(d));
    }
    auto coefficient = [&](int j) {
        BigInt h = 0;
        for (int i = 0; i <= j; ++i) {
            const BigInt term = binomial(d + 1, j - i) * L[static_cast<std::size_t>(i)];
            if ((j - i) % 2 == 0) {
                h += term;
            } else {
                h -= term;
            }
        }
        return h;
    };
    std::vector<BigInt> h;
    for (int j = 0; j <= d; ++j) {
        h.push_back(coefficient(j));
        if (h.back() < 0) {
            throw Error(ErrorCode::NegativeCoefficient,
                        "h* coefficient " + std::to_string(j) + " is " + h.back().str());
        }
    }
    if (static_cast<int>(L.size()) >= d + 2 && coefficient(d + 1) != 0) {
        throw Error(ErrorCode::InconsistentCounts, "counts are not a polynomial of degree <= " + std::to_string(d));
    }
    return IntPolynomial(std::move(h));
}

inline IntPolynomial hstar_half_open_direct(int n, int k, const Limits &lim = default_limits())
{
    return hstar_from_counts(half_open_counts(n, k, lim));
}

inline IntPolynomial hstar_closed_direct(int n, int k, const Limits &lim = default_limits())
{
    return hstar_from_counts(closed_counts(n, k, lim));
}

inline IntPolynomial hstar_parallelepiped_direct(int n, const Limits &lim = default_limits())
{
    return hstar_from_counts(parallelepiped_counts(n, lim));
}

enum class RecursionForm { OneStep, Telescoped };

// h* of every closed hypersimplex with m <= n built from the half-open h*
// given by the big-ascent census. Entry [m][k] for 1 <= k <= 2m-1.
inline std::vector<std::vector<IntPolynomial>> closed_hstar_table(int n, RecursionForm form,
                                                                  const Limits &lim = default_limits())
{
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    std::vector<std::vector<IntPolynomial>> half(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) half[static_cast<std::size_t>(m)] = basc_census(m, lim);
    auto hp = [&](int m, int k) -> IntPolynomial {
        if (m < 1 || k < 1 || k > 2 * m - 1) return {};
        return half[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
    };
    const IntPolynomial one_minus_t{1, -1};

    std::vector<std::vector<IntPolynomial>> closed(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        auto &row = closed[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(2 * m), IntPolynomial{});
        for (int k = 1; k <= 2 * m - 1; ++k) {
            IntPolynomial h = hp(m, k);
            if (form == RecursionForm::OneStep) {
                IntPolynomial prev;
                if (m >= 2 && k - 2 >= 1 && k - 2 <= 2 * (m - 1) - 1)
                    prev = closed[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 2)];
                h += one_minus_t * (hp(m - 1, k - 1) + prev);
            } else {
                IntPolynomial factor{1};
                for (int j = 1; j < m; ++j) {
                    factor = factor * one_minus_t;
                    h += factor * (hp(m - j, k - 2 * j + 1) + hp(m - j, k - 2 * j));
                }
            }
            row[static_cast<std::size_t>(k)] = h;
        }
    }
    return closed;
}

inline IntPolynomial hstar_closed_via_recursion(int n, int k, RecursionForm form = RecursionForm::OneStep,
                                                const Limits &lim = default_limits())
{
    detail::check_k(n, k);
    return closed_hstar_table(n, form, lim)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Normalized volume of the half-open slice: h*(1) from the lattice counts.
inline BigInt volume(int n, int k, const Limits &lim = default_limits())
{
    return hstar_half_open_direct(n, k, lim).evaluate(BigInt(1));
}

} // namespace hyplab

#endif
