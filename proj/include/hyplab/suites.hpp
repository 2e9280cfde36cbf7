#ifndef HYPLAB_SUITES_HPP
#define HYPLAB_SUITES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <hyplab/alcoves.hpp>
#include <hyplab/ehrhart.hpp>
#include <hyplab/eulerian.hpp>
#include <hyplab/identities.hpp>
#include <hyplab/limit_sp.hpp>
#include <hyplab/reference_data.hpp>
#include <hyplab/report.hpp>
#include <hyplab/root_system.hpp>
#include <hyplab/sturm.hpp>
#include <hyplab/xn_poset.hpp>

namespace hyplab
{

namespace detail
{

inline std::string nk(int n, int k)
{
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

inline std::string versus(const IntPolynomial &got, const IntPolynomial &want)
{
    return got == want ? to_string(got) : to_string(got) + " expected " + to_string(want);
}

} // namespace detail

// Half-open slices: big-ascent census, flag census and lattice counts against the reference values.
inline Report check_half_open_tables(int n_max = 5, const Limits &lim = default_limits())
{
    Report rep("half-open h* by three methods, n <= " + std::to_string(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const auto basc_h = basc_census(n, lim);
        const auto flag_h = flag_census(n, lim);
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const IntPolynomial want = reference::poly(reference::half_open_hstar_reference()[n][k]);
            const IntPolynomial oracle = hstar_half_open_direct(n, k, lim);
            const auto &a = basc_h[static_cast<std::size_t>(k)];
            const auto &b = flag_h[static_cast<std::size_t>(k)];
            const bool ok = a == want && b == want && oracle == want;
            std::string detail = to_string(want);
            if (!ok) detail = "basc " + to_string(a) + ", flag " + to_string(b) + ", lattice " + to_string(oracle) + " expected " + to_string(want);
            rep.add(detail::nk(n, k), ok, n == 5 && k == 5 ? detail : (ok ? std::string() : detail));
        }
    }
    return rep;
}

// Closed slices: lattice counts and both recursion forms against the reference values.
inline Report check_closed_tables(int n_max = 5, const Limits &lim = default_limits())
{
    Report rep("closed h* by lattice counts and recursion, n <= " + std::to_string(n_max));
    const auto one_step = closed_hstar_table(n_max, RecursionForm::OneStep, lim);
    const auto telescoped = closed_hstar_table(n_max, RecursionForm::Telescoped, lim);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const IntPolynomial want = reference::poly(reference::closed_hstar_reference()[n][k]);
            const IntPolynomial direct = hstar_closed_direct(n, k, lim);
            const auto &a = one_step[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            const auto &b = telescoped[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            const bool ok = direct == want && a == want && b == want;
            std::string detail;
            if (!ok)
                detail = "lattice " + to_string(direct) + ", one-step " + to_string(a) + ", telescoped " + to_string(b)
                         + " expected " + to_string(want);
            else if (n == 4 && k == 4)
                detail = to_string(want);
            rep.add(detail::nk(n, k), ok, detail);
        }
    }
    return rep;
}

// The psi triangle against the reference row, the big-ascent census and the alcove cover census.
inline Report check_psi_triangle(int census_max = 5, int table_max = 7, const Limits &lim = default_limits())
{
    Report rep("psi triangle");
    const auto psi = psi_table(table_max);
    rep.add("psi_{5,2} = 918", psi[5][2] == 918, psi[5][2].str());
    for (int n = 1; n <= table_max; ++n) {
        const IntPolynomial row(psi[static_cast<std::size_t>(n)]);
        const IntPolynomial want = reference::poly(reference::parallelepiped_hstar_reference()[n]);
        rep.add("recurrence row n=" + std::to_string(n), row == want, detail::versus(row, want));
    }
    for (int n = 1; n <= census_max; ++n) {
        const IntPolynomial row(psi[static_cast<std::size_t>(n)]);
        const IntPolynomial census = parallelepiped_hstar_from_poset(n, lim);
        rep.add("big-ascent census n=" + std::to_string(n), census == row, detail::versus(census, row));
        const IntPolynomial alc = psi_polynomial(build_root_system(Family::C, n, lim));
        rep.add("alcove cover census C" + std::to_string(n), alc == row, detail::versus(alc, row));
    }
    return rep;
}

inline Report check_bd_tables(const Limits &lim = default_limits())
{
    Report rep("Psi for types B and D");
    for (int n = 3; n <= 6; ++n) {
        const RootSystem b = build_root_system(Family::B, n, lim);
        const auto eb = enumerate_parallelepiped_alcoves(b);
        const IntPolynomial pb = psi_polynomial(eb);
        rep.add("B" + std::to_string(n), pb == reference::poly(reference::psi_b_reference()[n]),
                detail::versus(pb, reference::poly(reference::psi_b_reference()[n])));
        rep.add("B" + std::to_string(n) + " alcove count", BigInt(eb.alcoves.size()) == expected_alcove_count(b),
                std::to_string(eb.alcoves.size()));
    }
    for (int n = 4; n <= 6; ++n) {
        const RootSystem d = build_root_system(Family::D, n, lim);
        const auto ed = enumerate_parallelepiped_alcoves(d);
        const IntPolynomial pd = psi_polynomial(ed);
        rep.add("D" + std::to_string(n), pd == reference::poly(reference::psi_d_reference()[n]),
                detail::versus(pd, reference::poly(reference::psi_d_reference()[n])));
        rep.add("D" + std::to_string(n) + " alcove count", BigInt(ed.alcoves.size()) == expected_alcove_count(d),
                std::to_string(ed.alcoves.size()));
    }
    return rep;
}

// Slice volumes against the fexc and cdes censuses, and the type B Eulerian decomposition.
inline Report check_volumes(int n_max = 5, const Limits &lim = default_limits())
{
    Report rep("slice volumes, n <= " + std::to_string(n_max));
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> vol(static_cast<std::size_t>(2 * n) + 2, BigInt(0));
        std::vector<long long> by_fexc(static_cast<std::size_t>(2 * n) + 2, 0);
        std::vector<long long> by_cdes(static_cast<std::size_t>(2 * n) + 2, 0);
        for_each_xn(
            n,
            [&](const SignedPermutation &w) {
                ++by_fexc[static_cast<std::size_t>(flag_stats(w).fexc + 1)];
                ++by_cdes[static_cast<std::size_t>(cdes_of_inverse(w))];
            },
            lim);
        bool ok = true;
        for (int k = 1; k <= 2 * n - 1; ++k) {
            vol[static_cast<std::size_t>(k)] = volume(n, k, lim);
            if (vol[static_cast<std::size_t>(k)] != by_fexc[static_cast<std::size_t>(k)]
                || vol[static_cast<std::size_t>(k)] != by_cdes[static_cast<std::size_t>(k)])
                ok = false;
        }
        rep.add("Vol = #fexc = #cdes, n=" + std::to_string(n), ok);
        const IntPolynomial eb = eulerian_b(n, lim);
        bool eul = true;
        for (int k = 0; k <= n; ++k) {
            auto v = [&](int j) { return (j < 1 || j > 2 * n - 1) ? BigInt(0) : vol[static_cast<std::size_t>(j)]; };
            if (eb.coeff(k) != v(2 * k - 1) + 2 * v(2 * k) + v(2 * k + 1)) eul = false;
        }
        rep.add("B_{n,k} from volumes, n=" + std::to_string(n), eul);
    }
    return rep;
}

inline Report check_series(const Limits &lim = default_limits())
{
    Report rep("generating functions");
    rep.merge(verify_fh_joint(5, 7, 10, {}, lim));
    rep.merge(verify_aux1(5, 7, 10, lim));
    for (int r = 0; r <= 4; ++r) rep.merge(verify_aux2(r, 5, 10, lim));
    for (int n = 1; n <= 5; ++n) rep.merge(verify_worpitzky_c(n, 8, lim));
    rep.merge(verify_egf(5, lim));
    return rep;
}

inline Report check_polynomial_identities(const Limits &lim = default_limits())
{
    Report rep("polynomial identities");
    for (int n = 1; n <= 5; ++n) rep.merge(verify_palindrome_sum(n, lim));
    for (int n = 2; n <= 7; ++n) rep.merge(verify_linear_recurrence(n, lim));
    for (int n = 2; n <= 6; ++n) {
        const IntPolynomial prev = eulerian_b(n - 1, lim);
        const IntPolynomial eb = eulerian_b(n, lim);
        const IntPolynomial rhs = IntPolynomial{1, 2 * n - 1} * prev + IntPolynomial{0, 2, -2} * prev.derivative();
        rep.add("E_B satisfies the Psi recurrence, n=" + std::to_string(n), rhs == eb, detail::versus(rhs, eb));
    }
    return rep;
}

inline std::string root_summary(const RealRootCertificate &c)
{
    return std::to_string(c.real_roots_with_multiplicity) + " of " + std::to_string(c.degree) + " roots real";
}

// Real-rootedness: Psi_C for n <= 7 and Psi_D for n = 4..6 gate; Psi_B is compared with the claim only.
inline std::vector<Report> check_real_roots(const Limits &lim = default_limits())
{
    Report gate("real-rootedness of Psi_C and Psi_D");
    for (int n = 1; n <= 7; ++n) {
        const auto cert = real_root_certificate(psi_c_from_recurrence(n));
        gate.add("Psi_C" + std::to_string(n) + " real-rooted", cert.real_rooted, root_summary(cert));
    }
    for (int n = 4; n <= 6; ++n) {
        const auto cert = real_root_certificate(psi_polynomial(build_root_system(Family::D, n, lim)));
        gate.add("Psi_D" + std::to_string(n) + " not real-rooted", !cert.real_rooted, root_summary(cert));
    }
    Report b("real-rootedness of Psi_B against the stated claims", true);
    for (int n = 3; n <= 6; ++n) {
        const auto cert = real_root_certificate(psi_polynomial(build_root_system(Family::B, n, lim)));
        const bool claim = reference::psi_b_real_rooted_claim()[static_cast<std::size_t>(n)] == 1;
        b.add("Psi_B" + std::to_string(n) + (claim ? " real-rooted" : " not real-rooted"), cert.real_rooted == claim,
              root_summary(cert));
    }
    return {gate, b};
}

inline Report check_truncations(int n_max = 6, const Limits &lim = default_limits())
{
    Report rep("strict partition limit, n <= " + std::to_string(n_max));
    std::vector<YIdeal> ys;
    for (int n = 1; n <= n_max + 1; ++n) ys.push_back(y_ideal(n, lim));
    for (int n = 1; n <= n_max; ++n) {
        const YIdeal &y = ys[static_cast<std::size_t>(n - 1)];
        for (int N = 0; N <= n; ++N) {
            const Report t = verify_truncation_iso(y, N);
            std::string detail;
            for (const auto &c : t.checks)
                if (!c.pass) detail += (detail.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
            rep.add("truncation n=" + std::to_string(n) + " N=" + std::to_string(N), t.all_pass(), detail);
        }
        const Report c = verify_chain_counts(y);
        rep.add("chain counts n=" + std::to_string(n), c.all_pass(), c.checks.front().detail);
        const Report e = verify_tau_embedding(y, ys[static_cast<std::size_t>(n)]);
        std::string edetail;
        for (const auto &ch : e.checks)
            if (!ch.pass) edetail += (edetail.empty() ? "" : "; ") + ch.name;
        rep.add("tau embedding and lambda commutation n=" + std::to_string(n), e.all_pass(), edetail);
    }
    return rep;
}

// Covers versus big ascents, tiling of the parallelepiped by A(w), and gradedness.
inline Report check_structure(const Limits &lim = default_limits())
{
    Report rep("poset and alcove structure");
    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        for_each_xn(
            n,
            [&](const SignedPermutation &w) {
                if (static_cast<int>(lower_covers(w).size()) != basc(w)) ok = false;
            },
            lim);
        rep.add("|lower covers| = basc, n=" + std::to_string(n), ok);
        const XnPoset p = build_poset(n, lim);
        rep.add("covers raise rank by one, n=" + std::to_string(n), p.rank_violations == 0 && p.unreachable == 0,
                std::to_string(p.rank_violations) + " violations, " + std::to_string(p.unreachable) + " unreachable");
    }
    for (int n = 1; n <= 4; ++n) {
        const auto e = enumerate_parallelepiped_alcoves(build_root_system(Family::C, n, lim));
        std::set<std::vector<IntVec>> from_arrangement;
        for (const auto &a : e.alcoves) from_arrangement.insert(a.scaled_vertices());
        std::set<std::vector<IntVec>> from_perms;
        bool slices = true;
        for_each_xn(
            n,
            [&](const SignedPermutation &w) {
                const AlcoveSimplex s = alcove_of(w);
                from_perms.insert(s.sorted_vertices());
                const long long k = cdes_of_inverse(w);
                for (const auto &v : s.vertices) {
                    const long long two_xn = v[static_cast<std::size_t>(n - 1)];
                    if (two_xn < k - 1 || two_xn > k) slices = false;
                }
            },
            lim);
        const std::size_t expected = static_cast<std::size_t>(expected_alcove_count(e.rs));
        rep.add("A(w) tiles the parallelepiped, n=" + std::to_string(n),
                from_perms == from_arrangement && from_perms.size() == expected && e.alcoves.size() == expected,
                std::to_string(from_perms.size()) + " images, " + std::to_string(e.alcoves.size()) + " alcoves");
        rep.add("A(w) lies in slice cdes(w^-1), n=" + std::to_string(n), slices);
    }
    return rep;
}

inline Report check_conjecture(const Limits &lim = default_limits())
{
    Report rep("B/D palindromic conjecture", true);
    for (int n = 3; n <= 6; ++n) {
        const Report r = verify_bd_conjecture(n, lim);
        rep.add("n=" + std::to_string(n), r.all_pass(), r.checks.front().detail);
    }
    return rep;
}

enum class Suite { Ehrhart, Series, Alcoves, Limits, Conjecture, All };

inline Suite parse_suite(const std::string &s)
{
    if (s == "ehrhart") return Suite::Ehrhart;
    if (s == "series") return Suite::Series;
    if (s == "alcoves") return Suite::Alcoves;
    if (s == "limits") return Suite::Limits;
    if (s == "conjecture") return Suite::Conjecture;
    if (s == "all") return Suite::All;
    throw Error(ErrorCode::InvalidArgument, "unknown suite " + s);
}

inline std::vector<Report> run_suite(Suite s, const Limits &lim = default_limits())
{
    std::vector<Report> out;
    const bool all = s == Suite::All;
    if (all || s == Suite::Ehrhart) {
        out.push_back(check_half_open_tables(5, lim));
        out.push_back(check_closed_tables(5, lim));
        out.push_back(check_volumes(5, lim));
    }
    if (all || s == Suite::Series) {
        out.push_back(check_psi_triangle(5, 7, lim));
        out.push_back(check_series(lim));
        out.push_back(check_polynomial_identities(lim));
        for (auto &r : check_real_roots(lim)) out.push_back(std::move(r));
    }
    if (all || s == Suite::Alcoves) {
        out.push_back(check_bd_tables(lim));
        out.push_back(check_structure(lim));
    }
    if (all || s == Suite::Limits) out.push_back(check_truncations(6, lim));
    if (all || s == Suite::Conjecture) out.push_back(check_conjecture(lim));
    return out;
}

} // namespace hyplab

#endif
