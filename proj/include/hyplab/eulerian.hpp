#ifndef HYPLAB_EULERIAN_HPP
#define HYPLAB_EULERIAN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/signed_permutation.hpp>

namespace hyplab
{

// Descent census over the symmetric group S_n: sum of t^des(w). E_0 = 1.
inline IntPolynomial eulerian_a(int n, const Limits &lim = default_limits())
{
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
    if (n == 0) return IntPolynomial{1};
    check_enumeration_cap(n, lim);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n), 0);
    do {
        int d = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)]) ++d;
        ++c[static_cast<std::size_t>(d)];
    } while (std::next_permutation(p.begin(), p.end()));
    return IntPolynomial::from_counts(c);
}

// Sum of t^desB(w) over B_n.
inline IntPolynomial eulerian_b(int n, const Limits &lim = default_limits())
{
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for_each_bn(n, [&](const SignedPermutation &w) { ++c[static_cast<std::size_t>(des_b(w))]; }, lim);
    return IntPolynomial::from_counts(c);
}

// Type D descents: position 0 when w_1 + w_2 < 0, position i when w_i > w_{i+1}.
inline int des_d(const SignedPermutation &w)
{
    const int n = w.size();
    int d = (n >= 2 && w.at(1) + w.at(2) < 0) ? 1 : 0;
    for (int i = 1; i < n; ++i)
        if (w.at(i) > w.at(i + 1)) ++d;
    return d;
}

inline bool in_dn(const SignedPermutation &w)
{
    int neg = 0;
    for (int v : w.window())
        if (v < 0) ++neg;
    return neg % 2 == 0;
}

// Sum of t^desD(w) over the even-negation subgroup D_n.
inline IntPolynomial eulerian_d(int n, const Limits &lim = default_limits())
{
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "type D needs n >= 2");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for_each_bn(
        n,
        [&](const SignedPermutation &w) {
            if (in_dn(w)) ++c[static_cast<std::size_t>(des_d(w))];
        },
        lim);
    return IntPolynomial::from_counts(c);
}

// Rows 1..n_max of psi_{n,k}: psi_{1,0} = 1 and
// psi_{n,k} = (2n-2k+1) psi_{n-1,k-1} + (2k+1) psi_{n-1,k}.
// Row n has n entries (k = 0..n-1); index 0 of the result is an empty row.
inline std::vector<std::vector<BigInt>> psi_table(int n_max)
{
    if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "psi_table needs n_max >= 1");
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max) + 1);
    rows[1] = {BigInt(1)};
    for (int n = 2; n <= n_max; ++n) {
        const auto &prev = rows[static_cast<std::size_t>(n - 1)];
        auto &row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n), BigInt(0));
        for (int k = 0; k < n; ++k) {
            BigInt v = 0;
            if (k >= 1) v += BigInt(2 * n - 2 * k + 1) * prev[static_cast<std::size_t>(k - 1)];
            if (k < n - 1) v += BigInt(2 * k + 1) * prev[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return rows;
}

inline IntPolynomial psi_c_from_recurrence(int n)
{
    return IntPolynomial(psi_table(n)[static_cast<std::size_t>(n)]);
}

} // namespace hyplab

#endif
