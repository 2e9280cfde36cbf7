#ifndef HYPLAB_ALCOVES_HPP
#define HYPLAB_ALCOVES_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/root_system.hpp>

namespace hyplab
{

// Facet hyperplane H_{alpha, m} = { <x, alpha> = m } for positive root index `root`.
struct Wall {
    std::uint16_t root = 0;
    std::int16_t level = 0;

    friend bool operator==(const Wall &, const Wall &) = default;
};

// An alcove given by its n+1 vertices, each scaled by a common lattice
// denominator so that all coordinates are integers. Vertices are kept sorted
// lexicographically; walls[i] is the facet opposite vertices[i].
struct ArrangementAlcove {
    int dim = 0;
    std::vector<std::int16_t> coords;
    std::vector<Wall> walls;

    std::size_t vertex_count() const noexcept
    {
        return dim == 0 ? 0 : coords.size() / static_cast<std::size_t>(dim);
    }

    IntVec scaled_vertex(std::size_t i) const
    {
        IntVec v(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c) v[static_cast<std::size_t>(c)] = coords[i * static_cast<std::size_t>(dim) + c];
        return v;
    }

    std::vector<IntVec> scaled_vertices() const
    {
        std::vector<IntVec> out;
        for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(scaled_vertex(i));
        return out;
    }

    RatVec vertex(std::size_t i, long long denominator) const
    {
        RatVec v(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c)
            v[static_cast<std::size_t>(c)] = Rational(coords[i * static_cast<std::size_t>(dim) + c], denominator);
        return v;
    }

    // Sum of the scaled vertices: (n+1) * denominator * centroid.
    IntVec scaled_vertex_sum() const
    {
        IntVec s(static_cast<std::size_t>(dim), 0);
        for (std::size_t i = 0; i < vertex_count(); ++i)
            for (int c = 0; c < dim; ++c) s[static_cast<std::size_t>(c)] += coords[i * static_cast<std::size_t>(dim) + c];
        return s;
    }
};

struct AlcoveEnumeration {
    RootSystem rs;
    // Common denominator of all alcove vertex coordinates.
    long long denominator = 1;
    // Breadth-first order; index 0 is the fundamental alcove.
    std::vector<ArrangementAlcove> alcoves;
};

namespace detail
{

inline long long lcm_ll(long long a, long long b)
{
    return a / std::gcd(a, b) * b;
}

struct AlcoveKeyHash {
    const std::vector<ArrangementAlcove> *alcoves;
    std::size_t operator()(std::uint32_t i) const
    {
        const auto &c = (*alcoves)[i].coords;
        return boost::hash_range(c.begin(), c.end());
    }
};

struct AlcoveKeyEq {
    const std::vector<ArrangementAlcove> *alcoves;
    bool operator()(std::uint32_t a, std::uint32_t b) const
    {
        return (*alcoves)[a].coords == (*alcoves)[b].coords;
    }
};

// Sorts vertex rows lexicographically in place.
inline void canonicalize(std::vector<IntVec> &verts)
{
    std::sort(verts.begin(), verts.end());
}

inline ArrangementAlcove pack(const std::vector<IntVec> &verts)
{
    ArrangementAlcove a;
    a.dim = static_cast<int>(verts.front().size());
    a.coords.reserve(verts.size() * verts.front().size());
    for (const auto &v : verts)
        for (long long x : v) a.coords.push_back(static_cast<std::int16_t>(x));
    return a;
}

// floor(a / b) for b > 0.
inline long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

} // namespace detail

// Fundamental alcove Conv{0, omega_i / a_i}, scaled by the lattice denominator.
inline std::vector<IntVec> fundamental_alcove_vertices(const RootSystem &rs, long long denominator)
{
    std::vector<IntVec> verts;
    verts.emplace_back(static_cast<std::size_t>(rs.ambient_dim), 0);
    for (int i = 0; i < rs.rank; ++i) {
        IntVec v(static_cast<std::size_t>(rs.ambient_dim));
        for (int c = 0; c < rs.ambient_dim; ++c) {
            const Rational x = rs.coweights[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * denominator
                               / rs.marks[static_cast<std::size_t>(i)];
            if (boost::multiprecision::denominator(x) != 1)
                throw Error(ErrorCode::InvalidArgument, "lattice denominator does not clear a vertex");
            v[static_cast<std::size_t>(c)] = static_cast<long long>(boost::multiprecision::numerator(x));
        }
        verts.push_back(std::move(v));
    }
    return verts;
}

// Least common denominator of the coordinates of the vertices omega_i / a_i.
inline long long lattice_denominator(const RootSystem &rs)
{
    long long d = 1;
    for (int i = 0; i < rs.rank; ++i) {
        for (const auto &x : rs.coweights[static_cast<std::size_t>(i)]) {
            const Rational y = x / rs.marks[static_cast<std::size_t>(i)];
            d = detail::lcm_ll(d, static_cast<long long>(boost::multiprecision::denominator(y)));
        }
    }
    return d;
}

// Finds the facet walls of an alcove; throws if some facet is not supported by
// a root hyperplane at an integer level.
inline std::vector<Wall> find_walls(const RootSystem &rs, long long denominator, const std::vector<IntVec> &verts)
{
    const std::size_t nv = verts.size();
    const std::size_t nr = rs.positive_roots.size();
    std::vector<long long> prod(nv * nr);
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t r = 0; r < nr; ++r) prod[j * nr + r] = dot(verts[j], rs.positive_roots[r]);
    std::vector<Wall> walls(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        bool found = false;
        for (std::size_t r = 0; r < nr && !found; ++r) {
            const std::size_t ref = i == 0 ? 1 : 0;
            const long long v = prod[ref * nr + r];
            bool equal = true;
            for (std::size_t j = 0; j < nv && equal; ++j)
                if (j != i && prod[j * nr + r] != v) equal = false;
            if (!equal || prod[i * nr + r] == v) continue;
            if (v % denominator != 0) continue;
            walls[i] = Wall{static_cast<std::uint16_t>(r), static_cast<std::int16_t>(v / denominator)};
            found = true;
        }
        if (!found) throw Error(ErrorCode::InvalidArgument, "alcove facet without a supporting root hyperplane");
    }
    return walls;
}

inline bool centroid_in_parallelepiped(const RootSystem &rs, long long denominator, const IntVec &vertex_sum)
{
    const long long scale = denominator * (rs.rank + 1);
    for (const auto &a : rs.simple_roots) {
        const long long p = dot(vertex_sum, a);
        if (p <= 0 || p >= scale) return false;
    }
    return true;
}

// Breadth-first wall-crossing from the fundamental alcove, restricted to
// alcoves inside the fundamental parallelepiped.
inline AlcoveEnumeration enumerate_parallelepiped_alcoves(const RootSystem &rs)
{
    AlcoveEnumeration out;
    out.rs = rs;
    const long long D = lattice_denominator(rs);
    out.denominator = D;
    auto &alcoves = out.alcoves;
    const BigInt expected = expected_alcove_count(rs);
    alcoves.reserve(static_cast<std::size_t>(expected));

    std::unordered_set<std::uint32_t, detail::AlcoveKeyHash, detail::AlcoveKeyEq> seen(
        static_cast<std::size_t>(expected) * 2, detail::AlcoveKeyHash{&alcoves}, detail::AlcoveKeyEq{&alcoves});

    auto start = fundamental_alcove_vertices(rs, D);
    detail::canonicalize(start);
    alcoves.push_back(detail::pack(start));
    seen.insert(0);

    for (std::size_t head = 0; head < alcoves.size(); ++head) {
        const std::vector<IntVec> verts = alcoves[head].scaled_vertices();
        alcoves[head].walls = find_walls(rs, D, verts);
        const std::vector<Wall> walls = alcoves[head].walls;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto &alpha = rs.positive_roots[walls[i].root];
            const auto &coroot = rs.positive_coroots[walls[i].root];
            const long long shift = dot(verts[i], alpha) - D * walls[i].level;
            std::vector<IntVec> next = verts;
            for (std::size_t c = 0; c < coroot.size(); ++c) next[i][c] -= shift * coroot[c];
            IntVec sum(static_cast<std::size_t>(rs.ambient_dim), 0);
            for (const auto &v : next)
                for (std::size_t c = 0; c < v.size(); ++c) sum[c] += v[c];
            if (!centroid_in_parallelepiped(rs, D, sum)) continue;
            detail::canonicalize(next);
            alcoves.push_back(detail::pack(next));
            const auto idx = static_cast<std::uint32_t>(alcoves.size() - 1);
            if (!seen.insert(idx).second) alcoves.pop_back();
        }
    }
    return out;
}

// Number of facet walls separating the alcove from the fundamental alcove.
inline int cover_count(const RootSystem &rs, long long denominator, const ArrangementAlcove &a)
{
    int c = 0;
    for (std::size_t i = 0; i < a.walls.size(); ++i) {
        const Wall &w = a.walls[i];
        const long long p = dot(a.scaled_vertex(i), rs.positive_roots[w.root]);
        const long long m = w.level * denominator;
        if ((w.level <= 0 && p < m) || (w.level >= 1 && p > m)) ++c;
    }
    return c;
}

inline int cover_count(const AlcoveEnumeration &e, const ArrangementAlcove &a)
{
    return cover_count(e.rs, e.denominator, a);
}

// Number of hyperplanes H_{alpha,m} of the whole affine arrangement that
// separate the alcove from the fundamental alcove.
inline long long separation_count(const RootSystem &rs, long long denominator, const ArrangementAlcove &a)
{
    const IntVec s = a.scaled_vertex_sum();
    const long long scale = denominator * (rs.rank + 1);
    long long total = 0;
    for (const auto &alpha : rs.positive_roots) {
        const long long p = dot(s, alpha);
        if (p % scale == 0) throw Error(ErrorCode::InvalidArgument, "alcove centroid on a hyperplane");
        total += p > 0 ? detail::floor_div(p, scale) : detail::floor_div(-p, scale) + 1;
    }
    return total;
}

// Slice index k with k-1 < <centroid, theta> < k.
inline int theta_slice(const RootSystem &rs, long long denominator, const ArrangementAlcove &a)
{
    const long long scale = denominator * (rs.rank + 1);
    return static_cast<int>(detail::floor_div(dot(a.scaled_vertex_sum(), rs.highest_root), scale)) + 1;
}

inline IntPolynomial psi_polynomial(const AlcoveEnumeration &e)
{
    std::vector<long long> c(static_cast<std::size_t>(e.rs.rank) + 1, 0);
    for (const auto &a : e.alcoves) ++c[static_cast<std::size_t>(cover_count(e, a))];
    return IntPolynomial::from_counts(c);
}

inline IntPolynomial psi_polynomial(const RootSystem &rs)
{
    return psi_polynomial(enumerate_parallelepiped_alcoves(rs));
}

inline long long hypersimplex_alcove_count(const AlcoveEnumeration &e, int k)
{
    if (k < 1 || k > e.rs.coxeter_number - 1) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(e.rs.coxeter_number - 1) + "]");
    }
    long long c = 0;
    for (const auto &a : e.alcoves)
        if (theta_slice(e.rs, e.denominator, a) == k) ++c;
    return c;
}

inline long long hypersimplex_alcove_count(const RootSystem &rs, int k)
{
    return hypersimplex_alcove_count(enumerate_parallelepiped_alcoves(rs), k);
}

} // namespace hyplab

#endif
