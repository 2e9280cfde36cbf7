#ifndef HYPLAB_ROOT_SYSTEM_HPP
#define HYPLAB_ROOT_SYSTEM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>

namespace hyplab
{

enum class Family { A, B, C, D };

inline char family_letter(Family f)
{
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

inline Family parse_family(const std::string &s)
{
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw Error(ErrorCode::InvalidArgument, "unknown root system family " + s);
}

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;

inline long long dot(const IntVec &a, const IntVec &b)
{
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const RatVec &a, const IntVec &b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// A classical crystallographic root system in coordinates. Type A_n lives in
// the sum-zero hyperplane of R^{n+1}; the others in R^n.
struct RootSystem {
    Family family = Family::C;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<IntVec> simple_roots;
    std::vector<IntVec> positive_roots;
    // coroot 2 alpha / <alpha, alpha>, integral for every classical type
    std::vector<IntVec> positive_coroots;
    IntVec highest_root;
    std::vector<long long> marks;
    std::vector<RatVec> coweights;
    long long coxeter_number = 0;
    BigInt weyl_order = 0;
    BigInt index_of_connection = 0;

    std::string name() const
    {
        return std::string(1, family_letter(family)) + std::to_string(rank);
    }

    // Coefficient of simple root i in the expansion of v.
    Rational simple_coordinate(const IntVec &v, std::size_t i) const
    {
        return dot(coweights[i], v);
    }
};

namespace detail
{

inline IntVec unit(int dim, int i, long long c = 1)
{
    IntVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = c;
    return v;
}

inline IntVec unit_diff(int dim, int i, int j)
{
    IntVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += 1;
    v[static_cast<std::size_t>(j)] -= 1;
    return v;
}

inline IntVec unit_sum(int dim, int i, int j)
{
    IntVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += 1;
    v[static_cast<std::size_t>(j)] += 1;
    return v;
}

// Inverse of a nonsingular rational matrix by Gauss-Jordan elimination.
inline std::vector<RatVec> invert(std::vector<RatVec> m)
{
    const std::size_t n = m.size();
    std::vector<RatVec> inv(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorCode::InvalidArgument, "singular Gram matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        const Rational piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

inline int minimum_rank(Family f)
{
    switch (f) {
        case Family::A: return 1;
        case Family::B: return 3;
        case Family::C: return 1;
        // D_3 coincides with A_3 but is kept so the small rows can be compared.
        case Family::D: return 3;
    }
    return 1;
}

inline int maximum_rank(Family f, const Limits &lim)
{
    switch (f) {
        case Family::A: return lim.max_rank_a;
        case Family::B: return lim.max_rank_b;
        case Family::C: return lim.max_rank_c;
        case Family::D: return lim.max_rank_d;
    }
    return 0;
}

} // namespace detail

inline RootSystem build_root_system(Family family, int n, const Limits &lim = default_limits())
{
    if (n < detail::minimum_rank(family)) {
        throw Error(ErrorCode::UnsupportedRank, std::string(1, family_letter(family)) + std::to_string(n)
                                                    + " is below the supported rank range");
    }
    if (n > detail::maximum_rank(family, lim)) {
        throw Error(ErrorCode::ResourceLimit, std::string(1, family_letter(family)) + std::to_string(n)
                                                  + " exceeds the rank cap "
                                                  + std::to_string(detail::maximum_rank(family, lim)));
    }

    RootSystem rs;
    rs.family = family;
    rs.rank = n;
    const int dim = family == Family::A ? n + 1 : n;
    rs.ambient_dim = dim;

    switch (family) {
        case Family::A:
            for (int i = 0; i < n; ++i) rs.simple_roots.push_back(detail::unit_diff(dim, i + 1, i));
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) rs.positive_roots.push_back(detail::unit_diff(dim, j, i));
            rs.weyl_order = factorial(static_cast<unsigned>(n + 1));
            break;
        case Family::C:
            rs.simple_roots.push_back(detail::unit(dim, 0, 2));
            for (int i = 1; i < n; ++i) rs.simple_roots.push_back(detail::unit_diff(dim, i, i - 1));
            for (int i = 0; i < dim; ++i) rs.positive_roots.push_back(detail::unit(dim, i, 2));
            for (int i = 0; i < dim; ++i) {
                for (int j = i + 1; j < dim; ++j) {
                    rs.positive_roots.push_back(detail::unit_diff(dim, j, i));
                    rs.positive_roots.push_back(detail::unit_sum(dim, i, j));
                }
            }
            rs.weyl_order = BigInt(1) << n;
            rs.weyl_order *= factorial(static_cast<unsigned>(n));
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(detail::unit_diff(dim, i, i + 1));
            rs.simple_roots.push_back(detail::unit(dim, n - 1));
            for (int i = 0; i < dim; ++i) rs.positive_roots.push_back(detail::unit(dim, i));
            for (int i = 0; i < dim; ++i) {
                for (int j = i + 1; j < dim; ++j) {
                    rs.positive_roots.push_back(detail::unit_diff(dim, i, j));
                    rs.positive_roots.push_back(detail::unit_sum(dim, i, j));
                }
            }
            rs.weyl_order = BigInt(1) << n;
            rs.weyl_order *= factorial(static_cast<unsigned>(n));
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(detail::unit_diff(dim, i, i + 1));
            rs.simple_roots.push_back(detail::unit_sum(dim, n - 2, n - 1));
            for (int i = 0; i < dim; ++i) {
                for (int j = i + 1; j < dim; ++j) {
                    rs.positive_roots.push_back(detail::unit_diff(dim, i, j));
                    rs.positive_roots.push_back(detail::unit_sum(dim, i, j));
                }
            }
            rs.weyl_order = BigInt(1) << (n - 1);
            rs.weyl_order *= factorial(static_cast<unsigned>(n));
            break;
    }

    for (const auto &a : rs.positive_roots) {
        const long long nn = dot(a, a);
        IntVec c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((2 * a[i]) % nn != 0) throw Error(ErrorCode::InvalidArgument, "non-integral coroot");
            c[i] = 2 * a[i] / nn;
        }
        rs.positive_coroots.push_back(std::move(c));
    }

    // Coweights omega_i = sum_j (G^{-1})_{ij} alpha_j, which lie in the span of
    // the roots and satisfy <omega_i, alpha_j> = delta_ij.
    std::vector<RatVec> gram(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                dot(rs.simple_roots[static_cast<std::size_t>(i)], rs.simple_roots[static_cast<std::size_t>(j)]);
    const auto ginv = detail::invert(gram);
    for (int i = 0; i < n; ++i) {
        RatVec w(static_cast<std::size_t>(dim), Rational(0));
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < dim; ++c)
                w[static_cast<std::size_t>(c)] += ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                                  * rs.simple_roots[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        rs.coweights.push_back(std::move(w));
    }

    // Highest root: the positive root of largest height.
    Rational best_height = -1;
    for (const auto &a : rs.positive_roots) {
        Rational h = 0;
        for (int i = 0; i < n; ++i) {
            const Rational c = rs.simple_coordinate(a, static_cast<std::size_t>(i));
            if (c < 0 || denominator(c) != 1)
                throw Error(ErrorCode::InvalidArgument, "positive root outside the simple-root cone");
            h += c;
        }
        if (h > best_height) {
            best_height = h;
            rs.highest_root = a;
        }
    }
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        const Rational c = rs.simple_coordinate(rs.highest_root, static_cast<std::size_t>(i));
        rs.marks.push_back(static_cast<long long>(numerator(c)));
        sum += rs.marks.back();
    }
    rs.coxeter_number = sum + 1;
    BigInt denom = factorial(static_cast<unsigned>(n));
    for (long long a : rs.marks) denom *= a;
    rs.index_of_connection = rs.weyl_order / denom;
    return rs;
}

// n! * a_1 * ... * a_n, the number of alcoves in the fundamental parallelepiped.
inline BigInt expected_alcove_count(const RootSystem &rs)
{
    BigInt c = factorial(static_cast<unsigned>(rs.rank));
    for (long long a : rs.marks) c *= a;
    return c;
}

} // namespace hyplab

#endif
