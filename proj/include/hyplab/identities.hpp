#ifndef HYPLAB_IDENTITIES_HPP
#define HYPLAB_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include <hyplab/alcoves.hpp>
#include <hyplab/bigint.hpp>
#include <hyplab/ehrhart.hpp>
#include <hyplab/eulerian.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/report.hpp>
#include <hyplab/root_system.hpp>
#include <hyplab/series.hpp>
#include <hyplab/signed_permutation.hpp>
#include <hyplab/xn_poset.hpp>

namespace hyplab
{

// census[n][f][d] = number of w with fexc(w) = f and desB(w) = d.
using JointCensus = std::vector<std::vector<std::vector<long long>>>;

// Joint (fexc, desB) census over B_n (or X_n when xn_only) for n = 0..n_max.
// B_0 holds the empty signed permutation; X_0 is taken to be empty.
inline JointCensus fexc_desb_census(int n_max, bool xn_only, const Limits &lim = default_limits())
{
    JointCensus c(static_cast<std::size_t>(n_max) + 1);
    c[0].assign(1, std::vector<long long>(1, xn_only ? 0 : 1));
    for (int n = 1; n <= n_max; ++n) {
        auto &cn = c[static_cast<std::size_t>(n)];
        cn.assign(static_cast<std::size_t>(2 * n) + 1, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
        auto visit = [&](const SignedPermutation &w) {
            const StatRecord s = flag_stats(w);
            ++cn[static_cast<std::size_t>(s.fexc)][static_cast<std::size_t>(s.desB)];
        };
        if (xn_only) {
            for_each_xn(n, visit, lim);
        } else {
            for_each_bn(n, visit, lim);
        }
    }
    return c;
}

namespace detail
{

inline std::string monomial_name(const RationalSeries &ring, const RationalSeries::Exponents &e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!s.empty()) s += ' ';
        s += ring.variables()[i] + "^" + std::to_string(e[i]);
    }
    return s;
}

// Adds one check comparing two series; the detail lists up to five differing monomials.
inline void compare_series(Report &rep, const std::string &name, const RationalSeries &lhs, const RationalSeries &rhs)
{
    const auto diff = series_differences(lhs, rhs);
    std::string detail;
    if (diff.empty()) {
        detail = std::to_string(lhs.size()) + " coefficients agree";
    } else {
        detail = std::to_string(diff.size()) + " coefficients differ, first at";
        for (std::size_t i = 0; i < diff.size() && i < 5; ++i) {
            detail += " [" + monomial_name(lhs, diff[i]) + "; lhs " + lhs.coeff(diff[i]).str() + ", rhs "
                      + rhs.coeff(diff[i]).str() + "]";
        }
    }
    rep.add(name, diff.empty(), detail);
}

// Sum over n of census_n(s, t) u^n / (1-t)^{n+1} in the ring of `like`.
inline RationalSeries census_series(const RationalSeries &like, const JointCensus &census, int n_min)
{
    RationalSeries lhs = RationalSeries::zero_like(like);
    const RationalSeries one = RationalSeries::constant_like(like, 1);
    const RationalSeries inv = (one - RationalSeries::monomial_like(like, "t", 1)).reciprocal();
    const int nu = like.orders()[like.var_index("u")];
    RationalSeries inv_pow = inv;
    for (int n = 0; n <= nu && n < static_cast<int>(census.size()); ++n) {
        if (n >= n_min) {
            RationalSeries p = RationalSeries::zero_like(like);
            const auto &cn = census[static_cast<std::size_t>(n)];
            for (std::size_t f = 0; f < cn.size(); ++f) {
                for (std::size_t d = 0; d < cn[f].size(); ++d) {
                    if (cn[f][d] == 0) continue;
                    RationalSeries::Exponents e(3, 0);
                    e[like.var_index("u")] = n;
                    e[like.var_index("s")] = static_cast<int>(f);
                    e[like.var_index("t")] = static_cast<int>(d);
                    if (like.in_box(e)) p.coeff(e) += cn[f][d];
                }
            }
            lhs += p * inv_pow;
        }
        inv_pow *= inv;
    }
    return lhs;
}

inline RationalSeries var(const RationalSeries &like, const std::string &name)
{
    return RationalSeries::monomial_like(like, name, 1);
}

// (1-u)^{r+1} - s (1-u) (1-us^2)^r, the common denominator of the closed forms.
inline RationalSeries flag_denominator(const RationalSeries &like, int r)
{
    const RationalSeries one = RationalSeries::constant_like(like, 1);
    const RationalSeries u = var(like, "u");
    const RationalSeries s = var(like, "s");
    return pow(one - u, static_cast<unsigned>(r + 1))
           - s * (one - u) * pow(one - u * s * s, static_cast<unsigned>(r));
}

// [(1-us^2)^{r+1} - (1-u)^{r+1}] / ((1+s) denominator).
inline RationalSeries aux_kernel(const RationalSeries &like, int r)
{
    const RationalSeries one = RationalSeries::constant_like(like, 1);
    const RationalSeries u = var(like, "u");
    const RationalSeries s = var(like, "s");
    const RationalSeries num =
        pow(one - u * s * s, static_cast<unsigned>(r + 1)) - pow(one - u, static_cast<unsigned>(r + 1));
    return num * ((one + s) * flag_denominator(like, r)).reciprocal();
}

} // namespace detail

// Joint (fexc, desB) generating function over all B_n against its closed form.
// `tamper` may modify the census before comparison (used to test the comparator).
inline Report verify_fh_joint(int N_u, int N_t, int N_s,
                              const std::function<void(JointCensus &)> &tamper = {},
                              const Limits &lim = default_limits())
{
    Report rep("joint fexc/desB generating function over B_n");
    RationalSeries ring({"u", "t", "s"}, {N_u, N_t, N_s});
    JointCensus census = fexc_desb_census(N_u, false, lim);
    if (tamper) tamper(census);
    const RationalSeries lhs = detail::census_series(ring, census, 0);

    RationalSeries rhs = RationalSeries::zero_like(ring);
    const RationalSeries one = RationalSeries::constant_like(ring, 1);
    const RationalSeries u = detail::var(ring, "u");
    const RationalSeries s = detail::var(ring, "s");
    for (int r = 0; r <= N_t; ++r) {
        const RationalSeries num = (one - s) * pow(one - u * s * s, static_cast<unsigned>(r));
        rhs += num * detail::flag_denominator(ring, r).reciprocal() * RationalSeries::monomial_like(ring, "t", r);
    }
    detail::compare_series(rep, "orders u<=" + std::to_string(N_u) + " t<=" + std::to_string(N_t) + " s<="
                                    + std::to_string(N_s),
                           lhs, rhs);
    return rep;
}

// The same generating function restricted to X_n, n >= 1.
inline Report verify_aux1(int N_u, int N_t, int N_s, const Limits &lim = default_limits())
{
    Report rep("joint fexc/desB generating function over X_n");
    RationalSeries ring({"u", "t", "s"}, {N_u, N_t, N_s});
    const RationalSeries lhs = detail::census_series(ring, fexc_desb_census(N_u, true, lim), 1);
    RationalSeries rhs = RationalSeries::zero_like(ring);
    for (int r = 0; r <= N_t; ++r) rhs += detail::aux_kernel(ring, r) * RationalSeries::monomial_like(ring, "t", r);
    detail::compare_series(rep, "orders u<=" + std::to_string(N_u) + " t<=" + std::to_string(N_t) + " s<="
                                    + std::to_string(N_s),
                           lhs, rhs);
    return rep;
}

// Generating function of the half-open lattice counts at a fixed dilation r.
inline Report verify_aux2(int r, int N_u, int N_s, const Limits &lim = default_limits())
{
    Report rep("half-open lattice counts at dilation " + std::to_string(r));
    RationalSeries ring({"u", "s"}, {N_u, N_s});
    RationalSeries lhs = RationalSeries::zero_like(ring);
    for (int n = 1; n <= N_u; ++n) {
        for (int k = 0; k <= N_s; ++k) {
            // Slices beyond 2n-1 are empty.
            if (k + 1 > 2 * n - 1) continue;
            lhs.coeff({n, k}) = Rational(count_half_open(n, k + 1, r, lim));
        }
    }
    const RationalSeries rhs = detail::aux_kernel(ring, r);
    detail::compare_series(rep, "orders u<=" + std::to_string(N_u) + " s<=" + std::to_string(N_s), lhs, rhs);
    return rep;
}

// Sum_n Psi_{C_{n+1}} x^n / n! against e^{3x(t-1)} Eul_A(t, 2x)^2.
inline Report verify_egf(int n_max, const Limits &lim = default_limits())
{
    Report rep("exponential generating function of Psi_C");
    // The x^n coefficient of the right side has t-degree <= n, so t needs no more than n_max.
    RationalSeries ring({"x", "t"}, {n_max, std::max(n_max, 1)});
    const RationalSeries one = RationalSeries::constant_like(ring, 1);
    const RationalSeries x = detail::var(ring, "x");
    const RationalSeries tm1 = detail::var(ring, "t") - one;

    // (t-1) / (t - e^{x(t-1)}) = 1 / (1 - sum_{m>=1} x^m (t-1)^{m-1} / m!)
    RationalSeries e = RationalSeries::zero_like(ring);
    RationalSeries term = one;
    for (int m = 1; m <= n_max; ++m) {
        term = term * x * Rational(1, m);
        e += term * pow(tm1, static_cast<unsigned>(m - 1));
    }
    const RationalSeries eul = (one - e).reciprocal();

    RationalSeries census_eul = RationalSeries::zero_like(ring);
    for (int n = 0; n <= n_max; ++n) {
        const IntPolynomial ea = eulerian_a(n, lim);
        for (int d = 0; d <= ea.degree(); ++d)
            if (ring.in_box({n, d})) census_eul.coeff({n, d}) = Rational(ea.coeff(d)) / Rational(factorial(n));
    }
    detail::compare_series(rep, "Eulerian EGF closed form vs descent census", eul, census_eul);

    const RationalSeries eul2 = eul.scale_variable("x", 2);
    const RationalSeries rhs = exp(x * tm1 * Rational(3)) * eul2 * eul2;
    const auto psi = psi_table(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<BigInt> c;
        bool integral = true;
        for (int d = 0; d <= ring.orders()[1]; ++d) {
            const Rational v = rhs.coeff({n, d}) * Rational(factorial(n));
            if (denominator(v) != 1) integral = false;
            c.push_back(numerator(v));
        }
        const IntPolynomial got(std::move(c));
        const IntPolynomial want(psi[static_cast<std::size_t>(n + 1)]);
        rep.add("n! [x^" + std::to_string(n) + "] = Psi_C" + std::to_string(n + 1), integral && got == want,
                to_string(got) + (got == want ? "" : " vs " + to_string(want)));
    }
    return rep;
}

// Psi_{C_n}(t) / (1-t)^{n+1} = sum_k (2k+1)^{n-1} (k+1) t^k, first R coefficients.
inline Report verify_worpitzky_c(int n, int R, const Limits &lim = default_limits())
{
    Report rep("Ehrhart series of the parallelepiped for C" + std::to_string(n));
    if (R < 1) throw Error(ErrorCode::InvalidArgument, "R must be positive");
    RationalSeries ring({"t"}, {R - 1});
    const RationalSeries one = RationalSeries::constant_like(ring, 1);
    const IntPolynomial psi = parallelepiped_hstar_from_poset(n, lim);
    const RationalSeries lhs = RationalSeries::from_polynomial(ring, "t", psi)
                               * pow((one - detail::var(ring, "t")).reciprocal(), static_cast<unsigned>(n + 1));
    RationalSeries rhs = RationalSeries::zero_like(ring);
    for (int k = 0; k < R; ++k) {
        BigInt v = k + 1;
        for (int i = 0; i < n - 1; ++i) v *= 2 * k + 1;
        rhs.coeff({k}) = Rational(v);
    }
    detail::compare_series(rep, "first " + std::to_string(R) + " coefficients", lhs, rhs);
    return rep;
}

// Psi_{C_n}(t) + t^n Psi_{C_n}(1/t) = E_{B_n}(t).
inline Report verify_palindrome_sum(int n, const Limits &lim = default_limits())
{
    Report rep("palindromic sum of Psi_C" + std::to_string(n));
    const IntPolynomial psi = parallelepiped_hstar_from_poset(n, lim);
    const IntPolynomial lhs = psi + psi.reflect(n);
    const IntPolynomial eb = eulerian_b(n, lim);
    rep.add("Psi_C + reflection = E_B", lhs == eb, to_string(lhs) + (lhs == eb ? "" : " vs " + to_string(eb)));
    return rep;
}

// Psi_{B_n}(t) + t^n Psi_{B_n}(1/t) = 2 E_{D_n}(t); an open conjecture, so informational.
inline Report verify_bd_conjecture(int n, const Limits &lim = default_limits())
{
    Report rep("B/D palindromic conjecture for n = " + std::to_string(n), true);
    const IntPolynomial psi = psi_polynomial(build_root_system(Family::B, n, lim));
    const IntPolynomial lhs = psi + psi.reflect(n);
    const IntPolynomial rhs = eulerian_d(n, lim) * BigInt(2);
    rep.add("Psi_B + reflection = 2 E_D", lhs == rhs,
            to_string(lhs) + (lhs == rhs ? "" : " vs " + to_string(rhs)));
    return rep;
}

// Psi_n = (1 + (2n-1)t) Psi_{n-1} + 2t(1-t) Psi'_{n-1}, with Psi from the big-ascent census.
inline Report verify_linear_recurrence(int n, const Limits &lim = default_limits())
{
    Report rep("linear recurrence for Psi_C" + std::to_string(n));
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "the recurrence starts at n = 2");
    const IntPolynomial prev = parallelepiped_hstar_from_poset(n - 1, lim);
    const IntPolynomial cur = parallelepiped_hstar_from_poset(n, lim);
    const IntPolynomial rhs = IntPolynomial{1, 2 * n - 1} * prev + IntPolynomial{0, 2, -2} * prev.derivative();
    rep.add("recurrence", rhs == cur, to_string(cur) + (rhs == cur ? "" : " vs " + to_string(rhs)));
    return rep;
}

} // namespace hyplab

#endif
