#ifndef HYPLAB_XN_POSET_HPP
#define HYPLAB_XN_POSET_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include <hyplab/alcoves.hpp>
#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/root_system.hpp>
#include <hyplab/signed_permutation.hpp>

namespace hyplab
{

inline void require_xn(const SignedPermutation &w)
{
    if (!w.in_xn()) throw Error(ErrorCode::NotInXn, to_string(w) + " does not contain the letter 1 positively");
}

// The signed permutations u with u -> w, one per big ascent of w.
inline std::vector<SignedPermutation> lower_covers(const SignedPermutation &w)
{
    require_xn(w);
    const int n = w.size();
    std::vector<SignedPermutation> out;
    for (int pos : big_ascent_set(w)) {
        std::vector<int> u = w.window();
        if (pos == -1) {
            u[0] = -u[0];
        } else if (pos == n) {
            u[static_cast<std::size_t>(n - 1)] = -u[static_cast<std::size_t>(n - 1)];
        } else {
            std::swap(u[static_cast<std::size_t>(pos - 1)], u[static_cast<std::size_t>(pos)]);
        }
        out.push_back(SignedPermutation::unchecked(std::move(u)));
    }
    return out;
}

// Vertices v^1, ..., v^{n+1} of A(w), each coordinate scaled by 2.
struct AlcoveSimplex {
    int n = 0;
    std::vector<IntVec> vertices;

    // v^k for k in [1, n+1], scaled by 2.
    const IntVec &scaled_vertex(int k) const
    {
        return vertices[static_cast<std::size_t>(k - 1)];
    }

    std::vector<IntVec> sorted_vertices() const
    {
        std::vector<IntVec> v = vertices;
        std::sort(v.begin(), v.end());
        return v;
    }
};

inline AlcoveSimplex alcove_of(const SignedPermutation &w)
{
    require_xn(w);
    const int n = w.size();
    AlcoveSimplex a;
    a.n = n;
    a.vertices.assign(static_cast<std::size_t>(n) + 1, IntVec(static_cast<std::size_t>(n), 0));
    const auto cd = cdes_set_of_inverse(w);
    IntVec &last = a.vertices[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
        long long c = 0;
        for (int d : cd)
            if (d >= 1 && d <= i - 1) ++c;
        last[static_cast<std::size_t>(i - 1)] = 2 * c;
    }
    for (int k = n; k >= 1; --k) {
        IntVec v = a.vertices[static_cast<std::size_t>(k)];
        const int e = w.at(k);
        v[static_cast<std::size_t>(std::abs(e) - 1)] += e > 0 ? 1 : -1;
        a.vertices[static_cast<std::size_t>(k - 1)] = std::move(v);
    }
    return a;
}

struct XnPoset {
    int n = 0;
    std::vector<SignedPermutation> elements;
    std::vector<std::vector<std::uint32_t>> lower;
    std::vector<std::vector<std::uint32_t>> upper;
    // Hyperplanes of the type-C arrangement separating A(w) from the fundamental alcove.
    std::vector<long long> rank_of;
    // Covers u -> w with rank(w) != rank(u) + 1; zero when the poset is graded by rank_of.
    std::size_t rank_violations = 0;
    // Elements not reachable from the identity through upward covers.
    std::size_t unreachable = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> index_of_key;

    std::uint32_t index_of(const SignedPermutation &w) const
    {
        const auto it = index_of_key.find(w.key());
        if (it == index_of_key.end()) throw Error(ErrorCode::NotInXn, to_string(w) + " is not an element of the poset");
        return it->second;
    }

    bool contains(const SignedPermutation &w) const
    {
        return w.size() == n && index_of_key.count(w.key()) != 0;
    }

    std::size_t size() const noexcept
    {
        return elements.size();
    }
};

namespace detail
{

inline RootSystem type_c_for(int n)
{
    Limits lim;
    lim.max_rank_c = std::max(lim.max_rank_c, n);
    return build_root_system(Family::C, n, lim);
}

// Separation count computed from the scaled (x2) vertex sum of A(w).
inline long long type_c_rank(const RootSystem &rs, const AlcoveSimplex &a)
{
    IntVec s(static_cast<std::size_t>(a.n), 0);
    for (const auto &v : a.vertices)
        for (std::size_t c = 0; c < v.size(); ++c) s[c] += v[c];
    const long long scale = 2LL * (a.n + 1);
    long long total = 0;
    for (const auto &alpha : rs.positive_roots) {
        const long long p = dot(s, alpha);
        if (p % scale == 0) throw Error(ErrorCode::InvalidArgument, "alcove centroid on a hyperplane");
        total += p > 0 ? floor_div(p, scale) : floor_div(-p, scale) + 1;
    }
    return total;
}

} // namespace detail

inline long long separation_rank(const SignedPermutation &w)
{
    return detail::type_c_rank(detail::type_c_for(w.size()), alcove_of(w));
}

inline XnPoset build_poset(int n, const Limits &lim = default_limits())
{
    XnPoset p;
    p.n = n;
    p.elements = enumerate_xn(n, lim);
    const std::size_t N = p.elements.size();
    p.index_of_key.reserve(N * 2);
    for (std::size_t i = 0; i < N; ++i) p.index_of_key.emplace(p.elements[i].key(), static_cast<std::uint32_t>(i));

    p.lower.resize(N);
    p.upper.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (const auto &u : lower_covers(p.elements[i])) {
            const std::uint32_t j = p.index_of(u);
            p.lower[i].push_back(j);
            p.upper[j].push_back(static_cast<std::uint32_t>(i));
        }
    }

    const RootSystem rs = detail::type_c_for(n);
    p.rank_of.resize(N);
    for (std::size_t i = 0; i < N; ++i) p.rank_of[i] = detail::type_c_rank(rs, alcove_of(p.elements[i]));
    for (std::size_t i = 0; i < N; ++i)
        for (std::uint32_t j : p.lower[i])
            if (p.rank_of[i] != p.rank_of[j] + 1) ++p.rank_violations;

    std::vector<char> seen(N, 0);
    std::deque<std::uint32_t> q;
    const std::uint32_t id = p.index_of(SignedPermutation::identity(n));
    seen[id] = 1;
    q.push_back(id);
    while (!q.empty()) {
        const std::uint32_t x = q.front();
        q.pop_front();
        for (std::uint32_t y : p.upper[x]) {
            if (seen[y] == 0) {
                seen[y] = 1;
                q.push_back(y);
            }
        }
    }
    p.unreachable = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 0));
    return p;
}

namespace detail
{

inline void check_k(int n, int k)
{
    if (k < 1 || k > 2 * n - 1) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(2 * n - 1) + "] for n = "
                        + std::to_string(n));
    }
}

} // namespace detail

// Entry k (1 <= k <= 2n-1) is the sum of t^basc(w) over w in X_n with cdes(w^{-1}) = k.
inline std::vector<IntPolynomial> basc_census(int n, const Limits &lim = default_limits())
{
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(2 * n), std::vector<long long>(n + 1, 0));
    for_each_xn(
        n,
        [&](const SignedPermutation &w) {
            ++c[static_cast<std::size_t>(cdes_of_inverse(w))][static_cast<std::size_t>(basc(w))];
        },
        lim);
    std::vector<IntPolynomial> out;
    for (const auto &row : c) out.push_back(IntPolynomial::from_counts(row));
    return out;
}

// Entry k is the sum of t^desB(w) over w in X_n with fexc(w) = k-1.
inline std::vector<IntPolynomial> flag_census(int n, const Limits &lim = default_limits())
{
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(2 * n + 1), std::vector<long long>(n + 1, 0));
    for_each_xn(
        n,
        [&](const SignedPermutation &w) {
            const StatRecord s = flag_stats(w);
            ++c[static_cast<std::size_t>(s.fexc + 1)][static_cast<std::size_t>(s.desB)];
        },
        lim);
    std::vector<IntPolynomial> out;
    for (const auto &row : c) out.push_back(IntPolynomial::from_counts(row));
    out.resize(static_cast<std::size_t>(2 * n));
    return out;
}

inline IntPolynomial hstar_half_open_basc(int n, int k, const Limits &lim = default_limits())
{
    detail::check_k(n, k);
    return basc_census(n, lim)[static_cast<std::size_t>(k)];
}

inline IntPolynomial hstar_half_open_flag(int n, int k, const Limits &lim = default_limits())
{
    detail::check_k(n, k);
    return flag_census(n, lim)[static_cast<std::size_t>(k)];
}

inline IntPolynomial parallelepiped_hstar_from_poset(int n, const Limits &lim = default_limits())
{
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    for_each_xn(n, [&](const SignedPermutation &w) { ++c[static_cast<std::size_t>(basc(w))]; }, lim);
    return IntPolynomial::from_counts(c);
}

// Number of saturated chains from the identity to every element, by dynamic
// programming over the lower-cover DAG in order of increasing rank.
inline std::vector<BigInt> maximal_chain_counts(const XnPoset &p)
{
    std::vector<std::uint32_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return p.rank_of[a] < p.rank_of[b]; });
    std::vector<BigInt> chains(p.size(), BigInt(0));
    if (p.rank_violations != 0) {
        // Rank does not order the covers, fall back to memoized depth-first counting.
        std::vector<char> done(p.size(), 0);
        auto visit = [&](auto &&self, std::uint32_t x) -> const BigInt & {
            if (done[x] == 0) {
                BigInt s = p.lower[x].empty() ? BigInt(1) : BigInt(0);
                for (std::uint32_t y : p.lower[x]) s += self(self, y);
                chains[x] = s;
                done[x] = 1;
            }
            return chains[x];
        };
        for (std::uint32_t x : order) visit(visit, x);
        return chains;
    }
    for (std::uint32_t x : order) {
        if (p.lower[x].empty()) {
            chains[x] = 1;
            continue;
        }
        BigInt s = 0;
        for (std::uint32_t y : p.lower[x]) s += chains[y];
        chains[x] = s;
    }
    return chains;
}

inline BigInt maximal_chain_count(const XnPoset &p, const SignedPermutation &w)
{
    return maximal_chain_counts(p)[p.index_of(w)];
}

} // namespace hyplab

#endif
