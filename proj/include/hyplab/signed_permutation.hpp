#ifndef HYPLAB_SIGNED_PERMUTATION_HPP
#define HYPLAB_SIGNED_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>

namespace hyplab
{

// An element of the hyperoctahedral group B_n, stored in window notation
// w_1 ... w_n. The complete notation is w_{-n} ... w_{-1} w_1 ... w_n with
// w_{-i} = -w_i. Positions are signed integers; -1 is the position "1 bar".
class SignedPermutation
{
public:
    SignedPermutation() = default;

    static SignedPermutation from_window(std::span<const int> entries)
    {
        if (entries.empty()) throw Error(ErrorCode::EmptyWindow, "window must be nonempty");
        const auto n = static_cast<int>(entries.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const int v = entries[i];
            if (v == 0) throw Error(ErrorCode::ZeroEntry, "entry at index " + std::to_string(i) + " is zero", i);
            const int a = std::abs(v);
            if (a > n) {
                throw Error(ErrorCode::OutOfRangeEntry,
                            "entry " + std::to_string(v) + " at index " + std::to_string(i) + " exceeds n = "
                                + std::to_string(n),
                            i);
            }
            if (seen[static_cast<std::size_t>(a)] != 0) {
                throw Error(ErrorCode::DuplicateAbsValue,
                            "absolute value " + std::to_string(a) + " repeated at index " + std::to_string(i), i);
            }
            seen[static_cast<std::size_t>(a)] = 1;
        }
        SignedPermutation w;
        w.m_window.assign(entries.begin(), entries.end());
        return w;
    }

    static SignedPermutation from_window(std::initializer_list<int> entries)
    {
        return from_window(std::span<const int>(entries.begin(), entries.size()));
    }

    static SignedPermutation identity(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        return unchecked(std::move(w));
    }

    // Caller guarantees validity; used by enumerators and internal rewrites.
    static SignedPermutation unchecked(std::vector<int> window)
    {
        SignedPermutation w;
        w.m_window = std::move(window);
        return w;
    }

    int size() const noexcept
    {
        return static_cast<int>(m_window.size());
    }

    const std::vector<int> &window() const noexcept
    {
        return m_window;
    }

    // w(i) for i in [[n]] (signed position), with w(-i) = -w(i).
    int operator()(int i) const
    {
        return i > 0 ? m_window[static_cast<std::size_t>(i - 1)] : -m_window[static_cast<std::size_t>(-i - 1)];
    }

    // Window entry w_i for i in [1, n].
    int at(int i) const
    {
        return m_window[static_cast<std::size_t>(i - 1)];
    }

    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < m_window.size(); ++i)
            if (m_window[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    // Membership in X_n: the letter 1 appears with a positive sign.
    bool in_xn() const noexcept
    {
        return std::find(m_window.begin(), m_window.end(), 1) != m_window.end();
    }

    // Compact key for hashing; valid for n <= 12.
    std::uint64_t key() const noexcept
    {
        const auto n = static_cast<std::uint64_t>(m_window.size());
        std::uint64_t k = 0;
        for (int v : m_window) k = k * (2 * n + 1) + static_cast<std::uint64_t>(v + static_cast<int>(n));
        return k;
    }

    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
    friend auto operator<=>(const SignedPermutation &a, const SignedPermutation &b)
    {
        return a.m_window <=> b.m_window;
    }

private:
    std::vector<int> m_window;
};

inline std::string to_string(const SignedPermutation &w)
{
    std::string s;
    for (std::size_t i = 0; i < w.window().size(); ++i) {
        if (i != 0) s += ' ';
        s += std::to_string(w.window()[i]);
    }
    return s;
}

inline std::ostream &operator<<(std::ostream &os, const SignedPermutation &w)
{
    return os << to_string(w);
}

inline SignedPermutation inverse(const SignedPermutation &w)
{
    const int n = w.size();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = w.at(i);
        inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
    }
    return SignedPermutation::unchecked(std::move(inv));
}

inline SignedPermutation compose(const SignedPermutation &a, const SignedPermutation &b)
{
    const int n = a.size();
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] = a(b.at(i));
    return SignedPermutation::unchecked(std::move(r));
}

inline SignedPermutation negate_all(const SignedPermutation &w)
{
    std::vector<int> r = w.window();
    for (int &v : r) v = -v;
    return SignedPermutation::unchecked(std::move(r));
}

// i << j: some letter of [[n]] lies strictly between i and j (0 is not a letter).
inline bool far_below(int i, int j) noexcept
{
    if (i >= j) return false;
    return (i < 0 && j > 0) ? (j - i >= 3) : (j - i >= 2);
}

// Cyclic successor of a position in -n < ... < -1 < 1 < ... < n, with n+ = -n.
inline int cyclic_successor(int i, int n) noexcept
{
    if (i == n) return -n;
    if (i == -1) return 1;
    return i + 1;
}

inline int des_b(const SignedPermutation &w)
{
    int d = 0, prev = 0;
    for (int v : w.window()) {
        if (prev > v) ++d;
        prev = v;
    }
    return d;
}

struct StatRecord {
    int desB = 0;
    int fdes = 0;
    int exc = 0;
    int fneg = 0;
    int fexc = 0;
    int excB = 0;
    int basc = 0;
    int cdes = 0;

    friend bool operator==(const StatRecord &, const StatRecord &) = default;
};

// Big ascent positions, in increasing order, drawn from {-1} u [n].
inline std::vector<int> big_ascent_set(const SignedPermutation &w)
{
    const int n = w.size();
    std::vector<int> out;
    if (w.at(1) >= 2) out.push_back(-1);
    for (int i = 1; i < n; ++i)
        if (far_below(w.at(i), w.at(i + 1))) out.push_back(i);
    if (w.at(n) <= -2) out.push_back(n);
    return out;
}

inline int basc(const SignedPermutation &w)
{
    const int n = w.size();
    int c = w.at(1) >= 2 ? 1 : 0;
    for (int i = 1; i < n; ++i)
        if (far_below(w.at(i), w.at(i + 1))) ++c;
    if (w.at(n) <= -2) ++c;
    return c;
}

// Positions i in [[n]] with w_i > w_{i+} on the complete notation, listed in
// the order -n, ..., -1, 1, ..., n.
inline std::vector<int> circular_descent_set(const SignedPermutation &w)
{
    const int n = w.size();
    std::vector<int> out;
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        if (w(i) > w(cyclic_successor(i, n))) out.push_back(i);
    }
    return out;
}

namespace detail
{

// Index of each letter v in the complete word, stored at slot v + n.
inline std::vector<int> complete_positions(const SignedPermutation &w)
{
    const int n = w.size();
    std::vector<int> pos(static_cast<std::size_t>(2 * n + 1), -1);
    for (int j = 1; j <= n; ++j) {
        const int v = w.at(j);
        pos[static_cast<std::size_t>(v + n)] = n + j - 1;
        pos[static_cast<std::size_t>(-v + n)] = n - j;
    }
    return pos;
}

} // namespace detail

// CDes(w^{-1}) read off the complete word of w: i is a circular descent of the
// inverse iff i+ precedes i in the complete word.
inline std::vector<int> cdes_set_of_inverse(const SignedPermutation &w)
{
    const int n = w.size();
    const auto pos = detail::complete_positions(w);
    std::vector<int> out;
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        const int s = cyclic_successor(i, n);
        if (pos[static_cast<std::size_t>(s + n)] < pos[static_cast<std::size_t>(i + n)]) out.push_back(i);
    }
    return out;
}

inline int cdes(const SignedPermutation &w)
{
    const int n = w.size();
    int c = 0;
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        if (w(i) > w(cyclic_successor(i, n))) ++c;
    }
    return c;
}

inline int cdes_of_inverse(const SignedPermutation &w)
{
    return static_cast<int>(cdes_set_of_inverse(w).size());
}

// fdes, exc, fneg, fexc, excB and desB.
inline StatRecord flag_stats(const SignedPermutation &w)
{
    StatRecord s;
    s.desB = des_b(w);
    s.fdes = 2 * s.desB - (w.at(1) < 0 ? 1 : 0);
    for (int i = 1; i <= w.size(); ++i) {
        if (w.at(i) > i) ++s.exc;
        if (w.at(i) < 0) ++s.fneg;
    }
    s.fexc = 2 * s.exc + s.fneg;
    s.excB = (s.fexc + 1) / 2;
    return s;
}

inline StatRecord all_stats(const SignedPermutation &w)
{
    StatRecord s = flag_stats(w);
    s.basc = basc(w);
    s.cdes = cdes(w);
    return s;
}

namespace detail
{

template <typename F>
void for_each_signed_rec(std::vector<int> &win, std::vector<char> &used, int pos, int n, bool xn_only, F &f)
{
    if (pos == n) {
        if (!xn_only || std::find(win.begin(), win.end(), 1) != win.end()) f(SignedPermutation::unchecked(win));
        return;
    }
    for (int v = -n; v <= n; ++v) {
        if (v == 0) continue;
        const auto a = static_cast<std::size_t>(std::abs(v));
        if (used[a] != 0) continue;
        if (xn_only && v == -1) continue;
        used[a] = 1;
        win[static_cast<std::size_t>(pos)] = v;
        for_each_signed_rec(win, used, pos + 1, n, xn_only, f);
        used[a] = 0;
    }
}

inline void check_n(int n, const Limits &lim)
{
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    check_enumeration_cap(n, lim);
}

} // namespace detail

// Visits every element of B_n in lexicographic window order (-n < ... < -1 < 1 < ... < n).
template <typename F>
void for_each_bn(int n, F &&f, const Limits &lim = default_limits())
{
    detail::check_n(n, lim);
    std::vector<int> win(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    detail::for_each_signed_rec(win, used, 0, n, false, f);
}

// Visits X_n = { w : w^{-1}(1) > 0 } in the same order.
template <typename F>
void for_each_xn(int n, F &&f, const Limits &lim = default_limits())
{
    detail::check_n(n, lim);
    std::vector<int> win(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    detail::for_each_signed_rec(win, used, 0, n, true, f);
}

inline std::vector<SignedPermutation> enumerate_bn(int n, const Limits &lim = default_limits())
{
    std::vector<SignedPermutation> out;
    for_each_bn(n, [&](const SignedPermutation &w) { out.push_back(w); }, lim);
    return out;
}

inline std::vector<SignedPermutation> enumerate_xn(int n, const Limits &lim = default_limits())
{
    std::vector<SignedPermutation> out;
    for_each_xn(n, [&](const SignedPermutation &w) { out.push_back(w); }, lim);
    return out;
}

} // namespace hyplab

#endif
