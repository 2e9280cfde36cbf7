#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include <hyplab/eulerian.hpp>
#include <hyplab/identities.hpp>
#include <hyplab/reference_data.hpp>
#include <hyplab/series.hpp>
#include <hyplab/sturm.hpp>

using namespace hyplab;

namespace
{

RationalSeries random_series(const RationalSeries &like, std::mt19937 &rng, bool unit)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    RationalSeries s = RationalSeries::zero_like(like);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = Rational(num(rng), den(rng));
    if (unit) s[0] = Rational(1 + den(rng), den(rng));
    return s;
}

} // namespace

TEST_CASE("integer polynomials", "[polyseries]")
{
    const IntPolynomial p{1, 3};
    CHECK(p.degree() == 1);
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(p * p == IntPolynomial{1, 6, 9});
    CHECK(IntPolynomial{1, 14, 9}.reflect(3) == IntPolynomial{0, 9, 14, 1});
    CHECK(IntPolynomial{1, 14, 9}.derivative() == IntPolynomial{14, 18});
    CHECK(to_string(IntPolynomial{0, 35, 268, 268, 35}) == "35t + 268t^2 + 268t^3 + 35t^4");
    CHECK(to_string(IntPolynomial{}) == "0");
}

TEST_CASE("Eulerian polynomials", "[polyseries]")
{
    CHECK(eulerian_b(3) == IntPolynomial{1, 23, 23, 1});
    CHECK(eulerian_b(3) == reference::poly(reference::eulerian_b3()));
    CHECK(eulerian_a(2) == IntPolynomial{1, 1});
    CHECK(eulerian_a(4) == IntPolynomial{1, 11, 11, 1});
    CHECK(eulerian_d(4) == IntPolynomial{1, 44, 102, 44, 1});
    CHECK(eulerian_d(4) == reference::poly(reference::eulerian_d4()));
    long long fact = 1;
    for (int n = 2; n <= 6; ++n) {
        fact *= n;
        CHECK(eulerian_d(n).evaluate(BigInt(1)) == BigInt((1LL << (n - 1)) * fact));
        CHECK(eulerian_d(n) == eulerian_d(n).reflect(n));
    }
    // E_B follows the Psi recurrence from 1 + t.
    CHECK(eulerian_b(1) == IntPolynomial{1, 1});
    for (int n = 2; n <= 6; ++n) {
        const IntPolynomial prev = eulerian_b(n - 1);
        CHECK(eulerian_b(n) == IntPolynomial{1, 2 * n - 1} * prev + IntPolynomial{0, 2, -2} * prev.derivative());
    }
}

TEST_CASE("psi triangle", "[polyseries]")
{
    const auto psi = psi_table(7);
    CHECK(psi[5][2] == 918);
    CHECK(psi[2][1] == 3);
    CHECK(psi[1] == std::vector<BigInt>{1});
    CHECK(IntPolynomial(psi[7]) == IntPolynomial{1, 1450, 35239, 136364, 123359, 25418, 729});
    for (int n = 1; n <= 7; ++n)
        CHECK(IntPolynomial(psi[static_cast<std::size_t>(n)]) == reference::poly(reference::parallelepiped_hstar_reference()[n]));
    for (int n = 1; n <= 5; ++n) CHECK(psi_c_from_recurrence(n) == parallelepiped_hstar_from_poset(n));
}

TEST_CASE("real-root certificates", "[polyseries]")
{
    const auto c4 = real_root_certificate(IntPolynomial{1, 49, 115, 27});
    CHECK(c4.real_roots_with_multiplicity == 3);
    CHECK(c4.real_rooted);
    CHECK(real_root_certificate(IntPolynomial{1, 0, 1}).real_roots_with_multiplicity == 0);
    CHECK(real_root_certificate(IntPolynomial{1, 22, 18, 6, 1}).real_roots_with_multiplicity < 4);
    // (t+1)^2 (t-2): multiplicities are kept.
    const auto m = real_root_certificate(IntPolynomial{-2, -3, 0, 1});
    CHECK(m.distinct_real_roots == 2);
    CHECK(m.real_roots_with_multiplicity == 3);
    CHECK(m.real_rooted);
    // (t^2+1)^2 t.
    const auto q = real_root_certificate(IntPolynomial{0, 1, 0, 2, 0, 1});
    CHECK(q.distinct_real_roots == 1);
    CHECK(q.real_roots_with_multiplicity == 1);
    CHECK_FALSE(q.real_rooted);
    CHECK(real_root_certificate(IntPolynomial{7}).real_rooted);
    for (int n = 1; n <= 7; ++n) CHECK(real_root_certificate(psi_c_from_recurrence(n)).real_rooted);
    CHECK_THROWS_AS(real_root_certificate(IntPolynomial{}), Error);
}

TEST_CASE("truncated series ring laws", "[polyseries]")
{
    std::mt19937 rng(20261014);
    const RationalSeries ring({"t", "x"}, {3, 4});
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(ring, rng, false);
        const auto b = random_series(ring, rng, false);
        const auto c = random_series(ring, rng, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        const auto u = random_series(ring, rng, true);
        CHECK(u * u.reciprocal() == RationalSeries::constant_like(ring, 1));
    }
    // exp(f) exp(-f) = 1 for f without constant term.
    auto f = random_series(ring, rng, false);
    f[0] = 0;
    CHECK(exp(f) * exp(-f) == RationalSeries::constant_like(ring, 1));
    // 1/(1 - t) = sum t^k.
    const auto t = RationalSeries::monomial_like(ring, "t", 1);
    const auto geo = (RationalSeries::constant_like(ring, 1) - t).reciprocal();
    for (int k = 0; k <= 3; ++k) CHECK(geo.coeff({k, 0}) == 1);
    CHECK(RationalSeries::monomial_like(ring, "t", 4).nonzero_terms().empty());
    CHECK(t.scale_variable("t", 3).coeff({1, 0}) == 3);
}

TEST_CASE("joint fexc and desB generating function", "[polyseries]")
{
    CHECK(verify_fh_joint(4, 5, 8).all_pass());
    CHECK(verify_fh_joint(1, 1, 1).all_pass());
    const Report broken = verify_fh_joint(3, 4, 6, [](JointCensus &c) { c[2][1][1] += 1; });
    REQUIRE_FALSE(broken.all_pass());
    // The mismatch is reported at u^2 ... s^1; t is free so every t-degree moves.
    CHECK(broken.checks.front().detail.find("u^2") != std::string::npos);
    CHECK(broken.checks.front().detail.find("s^1") != std::string::npos);
}

TEST_CASE("generating functions over X_n and of lattice counts", "[polyseries]")
{
    CHECK(verify_aux1(4, 4, 8).all_pass());
    CHECK(verify_aux2(0, 4, 8).all_pass());
    CHECK(verify_aux2(1, 4, 8).all_pass());
    for (int r = 2; r <= 4; ++r) CHECK(verify_aux2(r, 4, 8).all_pass());
}

TEST_CASE("exponential generating function of Psi_C", "[polyseries]")
{
    const Report r = verify_egf(5);
    CHECK(r.all_pass());
    CHECK(verify_egf(0).all_pass());
    CHECK(verify_egf(1).all_pass());
}

TEST_CASE("expansion of Psi_C over (1-t)^(n+1)", "[polyseries]")
{
    CHECK(verify_worpitzky_c(2, 5).all_pass());
    CHECK(verify_worpitzky_c(1, 3).all_pass());
    CHECK(verify_worpitzky_c(4, 6).all_pass());
    // The sequence itself: (2k+1)(k+1) for n = 2.
    const RationalSeries ring({"t"}, {4});
    const auto lhs = RationalSeries::from_polynomial(ring, "t", IntPolynomial{1, 3})
                     * pow(RationalSeries::constant_like(ring, 1) - RationalSeries::monomial_like(ring, "t", 1), 3).reciprocal();
    const std::vector<long long> want{1, 6, 15, 28, 45};
    for (int k = 0; k <= 4; ++k) CHECK(lhs.coeff({k}) == want[static_cast<std::size_t>(k)]);
}

TEST_CASE("palindromic sums and the recurrence", "[polyseries]")
{
    for (int n = 1; n <= 6; ++n) CHECK(verify_palindrome_sum(n).all_pass());
    const IntPolynomial c3{1, 14, 9};
    CHECK(c3 + c3.reflect(3) == IntPolynomial{1, 23, 23, 1});
    for (int n = 2; n <= 7; ++n) CHECK(verify_linear_recurrence(n).all_pass());
    CHECK(IntPolynomial{1, 5} * IntPolynomial{1, 3} + IntPolynomial{0, 2, -2} * IntPolynomial{3} == c3);
    CHECK_THROWS_AS(verify_linear_recurrence(1), Error);
}

TEST_CASE("B/D conjecture is informational", "[polyseries]")
{
    for (int n = 3; n <= 6; ++n) {
        const Report r = verify_bd_conjecture(n);
        CHECK(r.informational);
        CHECK(r.all_pass());
    }
}

TEST_CASE("fexc + 1 and cdes agree in distribution on X_n but not on B_n", "[polyseries]")
{
    for (int n = 1; n <= 5; ++n) {
        std::map<int, int> a, b;
        for_each_xn(n, [&](const SignedPermutation &w) {
            ++a[flag_stats(w).fexc + 1];
            ++b[cdes_of_inverse(w)];
        });
        CHECK(a == b);
        std::map<int, int> fb, cb;
        for_each_bn(n, [&](const SignedPermutation &w) {
            ++fb[flag_stats(w).fexc + 1];
            ++cb[cdes(w)];
        });
        CHECK(fb.size() == static_cast<std::size_t>(2 * n));
        CHECK(cb.size() == static_cast<std::size_t>(2 * n - 1));
    }
}
