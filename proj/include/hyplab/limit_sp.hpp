#ifndef HYPLAB_LIMIT_SP_HPP
#define HYPLAB_LIMIT_SP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/report.hpp>
#include <hyplab/signed_permutation.hpp>
#include <hyplab/xn_poset.hpp>

namespace hyplab
{

class StrictPartition
{
public:
    StrictPartition() = default;

    explicit StrictPartition(std::vector<int> parts) : m_parts(std::move(parts))
    {
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            if (m_parts[i] <= 0) throw Error(ErrorCode::InvalidArgument, "parts must be positive", i);
            if (i > 0 && m_parts[i] >= m_parts[i - 1])
                throw Error(ErrorCode::InvalidArgument, "parts must be strictly decreasing", i);
        }
    }

    const std::vector<int> &parts() const noexcept
    {
        return m_parts;
    }
    int length() const noexcept
    {
        return static_cast<int>(m_parts.size());
    }
    int size() const noexcept
    {
        int s = 0;
        for (int p : m_parts) s += p;
        return s;
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }

    // Partitions obtained by deleting one removable cell of the shifted diagram.
    std::vector<StrictPartition> lower_covers() const
    {
        std::vector<StrictPartition> out;
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            const int next = i + 1 < m_parts.size() ? m_parts[i + 1] : 0;
            if (m_parts[i] - 1 > next || i + 1 == m_parts.size()) {
                std::vector<int> q = m_parts;
                if (--q[i] == 0) q.pop_back();
                out.emplace_back(std::move(q));
            }
        }
        return out;
    }

    friend bool operator==(const StrictPartition &, const StrictPartition &) = default;
    friend auto operator<=>(const StrictPartition &a, const StrictPartition &b)
    {
        return a.m_parts <=> b.m_parts;
    }

private:
    std::vector<int> m_parts;
};

inline std::string to_string(const StrictPartition &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

// All strict partitions with size <= max_size and largest part <= max_part.
inline std::vector<StrictPartition> strict_partitions(int max_size, int max_part)
{
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int bound, int remaining) -> void {
        out.emplace_back(cur);
        for (int p = std::min(bound, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, p - 1, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, max_part, max_size);
    std::sort(out.begin(), out.end());
    return out;
}

inline StrictPartition staircase(int n)
{
    std::vector<int> p;
    for (int i = n; i >= 1; --i) p.push_back(i);
    return StrictPartition(std::move(p));
}

inline bool in_y_ideal(const SignedPermutation &w)
{
    return w.in_xn() && cdes_of_inverse(w) <= 2;
}

inline void require_y(const SignedPermutation &w)
{
    if (!in_y_ideal(w)) throw Error(ErrorCode::NotInYIdeal, to_string(w) + " is not in the ideal Y_n");
}

struct YIdeal {
    XnPoset poset;
    std::vector<std::uint32_t> members;
    std::vector<char> is_member;
};

inline YIdeal y_ideal(int n, const Limits &lim = default_limits())
{
    YIdeal y;
    y.poset = build_poset(n, lim);
    y.is_member.assign(y.poset.size(), 0);
    for (std::size_t i = 0; i < y.poset.size(); ++i) {
        if (in_y_ideal(y.poset.elements[i])) {
            y.members.push_back(static_cast<std::uint32_t>(i));
            y.is_member[i] = 1;
        }
    }
    return y;
}

inline StrictPartition lambda_map(const SignedPermutation &w)
{
    require_y(w);
    const int n = w.size();
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i)
        if (w.at(i) < 0) parts.push_back(n + 1 - i);
    return StrictPartition(std::move(parts));
}

// 1 followed by w with every letter shifted away from zero by one.
inline SignedPermutation tau_embed(const SignedPermutation &w)
{
    require_y(w);
    std::vector<int> v{1};
    for (int x : w.window()) v.push_back(x > 0 ? x + 1 : x - 1);
    return SignedPermutation::unchecked(std::move(v));
}

// Shifted standard Young tableaux of shape p, by removing corners.
inline BigInt shifted_syt_count(const StrictPartition &p)
{
    static thread_local std::map<std::vector<int>, BigInt> memo;
    if (p.empty()) return 1;
    const auto it = memo.find(p.parts());
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto &q : p.lower_covers()) total += shifted_syt_count(q);
    memo.emplace(p.parts(), total);
    return total;
}

// The elements of Y_n of rank <= N against the strict partitions of size <= N.
inline Report verify_truncation_iso(const YIdeal &y, int N)
{
    const int n = y.poset.n;
    Report rep("rank-" + std::to_string(N) + " truncation of Y_" + std::to_string(n));
    if (N > n) throw Error(ErrorCode::InvalidArgument, "truncation level exceeds n");
    std::map<StrictPartition, std::uint32_t> image;
    bool ranks_ok = true;
    bool injective = true;
    for (std::uint32_t i : y.members) {
        if (y.poset.rank_of[i] > N) continue;
        const StrictPartition lam = lambda_map(y.poset.elements[i]);
        if (lam.size() != y.poset.rank_of[i]) ranks_ok = false;
        if (!image.emplace(lam, i).second) injective = false;
    }
    const auto target = strict_partitions(N, n);
    std::set<StrictPartition> image_keys;
    for (const auto &[k, v] : image) image_keys.insert(k);
    const std::set<StrictPartition> target_keys(target.begin(), target.end());
    rep.add("rank equals partition size", ranks_ok);
    rep.add("lambda injective", injective);
    rep.add("lambda onto strict partitions of size <= N", image_keys == target_keys,
            std::to_string(image_keys.size()) + " images, " + std::to_string(target_keys.size()) + " partitions");

    bool covers_ok = true;
    std::string first_bad;
    for (const auto &[lam, i] : image) {
        std::set<StrictPartition> from_poset;
        for (std::uint32_t j : y.poset.lower[i]) from_poset.insert(lambda_map(y.poset.elements[j]));
        const auto lc = lam.lower_covers();
        const std::set<StrictPartition> from_shape(lc.begin(), lc.end());
        if (from_poset != from_shape) {
            covers_ok = false;
            if (first_bad.empty()) first_bad = to_string(y.poset.elements[i]);
        }
    }
    rep.add("covers correspond in both directions", covers_ok, first_bad);
    return rep;
}

// Maximal chains from the identity to each w in Y_n against shifted SYT of shape lambda(w).
inline Report verify_chain_counts(const YIdeal &y)
{
    Report rep("chain counts in Y_" + std::to_string(y.poset.n));
    const auto chains = maximal_chain_counts(y.poset);
    std::size_t bad = 0;
    std::string first;
    for (std::uint32_t i : y.members) {
        const BigInt want = shifted_syt_count(lambda_map(y.poset.elements[i]));
        if (chains[i] != want) {
            if (bad++ == 0) first = to_string(y.poset.elements[i]);
        }
    }
    rep.add("chains = shifted SYT for all " + std::to_string(y.members.size()) + " elements", bad == 0, first);
    return rep;
}

// Checks Y_n is downward closed, and that tau maps Y_n into Y_{n+1} as an
// order embedding commuting with lambda.
inline Report verify_tau_embedding(const YIdeal &y, const YIdeal &next)
{
    Report rep("embedding Y_" + std::to_string(y.poset.n) + " -> Y_" + std::to_string(next.poset.n));
    bool closed = true;
    for (std::uint32_t i : y.members)
        for (std::uint32_t j : y.poset.lower[i])
            if (y.is_member[j] == 0) closed = false;
    rep.add("Y_n downward closed", closed);

    bool commutes = true;
    bool lands = true;
    std::set<std::uint64_t> images;
    for (std::uint32_t i : y.members) {
        const SignedPermutation t = tau_embed(y.poset.elements[i]);
        if (!in_y_ideal(t)) {
            lands = false;
            continue;
        }
        images.insert(t.key());
        if (lambda_map(t) != lambda_map(y.poset.elements[i])) commutes = false;
    }
    rep.add("tau lands in Y_{n+1}", lands);
    rep.add("tau injective", images.size() == y.members.size());
    rep.add("lambda after tau equals lambda", commutes);

    bool order_ok = true;
    for (std::uint32_t a : y.members) {
        const SignedPermutation ta = tau_embed(y.poset.elements[a]);
        const std::uint32_t ia = next.poset.index_of(ta);
        std::set<std::uint32_t> tau_lower;
        for (std::uint32_t b : y.poset.lower[a]) tau_lower.insert(next.poset.index_of(tau_embed(y.poset.elements[b])));
        // Covers of tau(a) coming from the image of tau must be exactly the images of covers of a.
        std::set<std::uint32_t> image_lower;
        for (std::uint32_t j : next.poset.lower[ia])
            if (images.count(next.poset.elements[j].key()) != 0) image_lower.insert(j);
        if (tau_lower != image_lower) order_ok = false;
    }
    rep.add("tau preserves and reflects covers", order_ok);
    return rep;
}

// lambda is a rank-preserving bijection onto strict partitions with parts <= n,
// minus the staircase (n, n-1, ..., 1): that shape would need k = 0 copies of
// the positive block, which no element of X_n has.
inline Report verify_lambda_bijection(const YIdeal &y)
{
    const int n = y.poset.n;
    Report rep("lambda bijection on Y_" + std::to_string(n));
    std::set<StrictPartition> seen;
    bool ranks = true;
    for (std::uint32_t i : y.members) {
        const StrictPartition lam = lambda_map(y.poset.elements[i]);
        if (lam.size() != y.poset.rank_of[i]) ranks = false;
        seen.insert(lam);
    }
    const auto all = strict_partitions(n * (n + 1) / 2, n);
    std::set<StrictPartition> target(all.begin(), all.end());
    target.erase(staircase(n));
    rep.add("rank = |lambda|", ranks);
    rep.add("bijective onto non-staircase shapes", seen.size() == y.members.size() && seen == target,
            std::to_string(y.members.size()) + " elements, " + std::to_string(target.size()) + " partitions");

    bool low_ranks = true;
    for (std::size_t i = 0; i < y.poset.size(); ++i)
        if (y.poset.rank_of[i] <= n && y.is_member[i] == 0) low_ranks = false;
    rep.add("every element of rank <= n lies in Y_n", low_ranks);
    return rep;
}

inline Report verify_truncation_iso(int n, int N, const Limits &lim = default_limits())
{
    return verify_truncation_iso(y_ideal(n, lim), N);
}

inline Report verify_chain_counts(int n, const Limits &lim = default_limits())
{
    return verify_chain_counts(y_ideal(n, lim));
}

} // namespace hyplab

#endif
