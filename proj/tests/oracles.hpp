// Slow reference implementations used only by the tests. Each one follows the
// definition literally and shares no code with the library's fast paths.
#ifndef HYPLAB_TESTS_ORACLES_HPP
#define HYPLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/polynomial.hpp>

namespace oracle
{

using Window = std::vector<int>;

// Every signed permutation of [n], by brute force over sign vectors and permutations.
inline std::vector<Window> all_signed(int n)
{
    std::vector<Window> out;
    Window p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            Window w = p;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.push_back(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int value_at(const Window &w, int i)
{
    return i > 0 ? w[static_cast<std::size_t>(i - 1)] : -w[static_cast<std::size_t>(-i - 1)];
}

inline Window inverse(const Window &w)
{
    const int n = static_cast<int>(w.size());
    Window inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            if (j != 0 && value_at(w, j) == i) inv[static_cast<std::size_t>(i - 1)] = j;
    return inv;
}

inline bool in_x(const Window &w)
{
    return inverse(w)[0] > 0;
}

inline int des_b(const Window &w)
{
    int d = 0;
    int prev = 0;
    for (int x : w) {
        if (prev > x) ++d;
        prev = x;
    }
    return d;
}

inline int exc(const Window &w)
{
    int e = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > static_cast<int>(i) + 1) ++e;
    return e;
}

inline int neg(const Window &w)
{
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}

// Positions of the complete word in reading order -n..-1, 1..n.
inline std::vector<int> positions(int n)
{
    std::vector<int> p;
    for (int i = -n; i <= -1; ++i) p.push_back(i);
    for (int i = 1; i <= n; ++i) p.push_back(i);
    return p;
}

inline std::vector<int> circular_descents(const Window &w)
{
    const int n = static_cast<int>(w.size());
    const auto pos = positions(n);
    std::vector<int> out;
    for (std::size_t a = 0; a < pos.size(); ++a) {
        const int i = pos[a];
        const int succ = pos[(a + 1) % pos.size()];
        if (value_at(w, i) > value_at(w, succ)) out.push_back(i);
    }
    return out;
}

// Big ascents from the three cases of their definition, by scanning for a letter in between.
inline std::vector<int> big_ascents(const Window &w)
{
    const int n = static_cast<int>(w.size());
    std::vector<int> out;
    if (w[0] >= 2) out.push_back(-1);
    for (int i = 1; i < n; ++i) {
        const int a = w[static_cast<std::size_t>(i - 1)], b = w[static_cast<std::size_t>(i)];
        for (int k = -n; k <= n; ++k)
            if (k != 0 && a < k && k < b) {
                out.push_back(i);
                break;
            }
    }
    if (w[static_cast<std::size_t>(n - 1)] <= -2) out.push_back(n);
    return out;
}

// Lattice points of the r-th dilate of a type-C slice, enumerated in doubled
// coordinates X_i = 2x_i over the whole box without pruning:
// 0 <= X_1 <= r, 0 <= X_i - X_{i-1} <= 2r, and lo <= X_n <= hi.
inline long long lattice_points(int n, long long r, long long lo, long long hi, bool lo_strict = false)
{
    long long count = 0;
    std::vector<long long> X(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto &&self, int i) -> void {
        if (i == n) {
            const long long last = X[static_cast<std::size_t>(n - 1)];
            const bool low_ok = lo_strict ? last > lo : last >= lo;
            if (low_ok && last <= hi) ++count;
            return;
        }
        const long long base = i == 0 ? 0 : X[static_cast<std::size_t>(i - 1)];
        const long long span = i == 0 ? r : 2 * r;
        for (long long d = 0; d <= span; ++d) {
            X[static_cast<std::size_t>(i)] = base + d;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

// h* as the first d+1 coefficients of (1-t)^(d+1) * sum_r L(r) t^r, by a
// plain polynomial product.
inline hyplab::IntPolynomial hstar_by_series(const std::vector<long long> &L, int d)
{
    std::vector<long long> factor{1};
    for (int e = 0; e <= d; ++e) {
        std::vector<long long> next(factor.size() + 1, 0);
        for (std::size_t i = 0; i < factor.size(); ++i) {
            next[i] += factor[i];
            next[i + 1] -= factor[i];
        }
        factor = next;
    }
    std::vector<hyplab::BigInt> h;
    for (int j = 0; j <= d; ++j) {
        hyplab::BigInt c = 0;
        for (int i = 0; i <= j; ++i) c += hyplab::BigInt(factor[static_cast<std::size_t>(j - i)]) * L[static_cast<std::size_t>(i)];
        h.push_back(c);
    }
    return hyplab::IntPolynomial(h);
}

} // namespace oracle

#endif
