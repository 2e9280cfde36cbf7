#include <catch2/catch_amalgamated.hpp>

#include <hyplab/ehrhart.hpp>
#include <hyplab/eulerian.hpp>
#include <hyplab/reference_data.hpp>

#include "oracles.hpp"

using namespace hyplab;

namespace
{

auto has_code(ErrorCode c)
{
    return Catch::Matchers::Predicate<Error>([c](const Error &e) { return e.code() == c; }, error_code_name(c));
}

} // namespace

TEST_CASE("half-open counts", "[ehrhart]")
{
    CHECK(count_half_open(2, 2, 1) == 2);
    CHECK(count_half_open(3, 3, 1) == 5);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k) CHECK(count_half_open(n, k, 0) == (k == 1 ? 1 : 0));
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k)
            for (long long r = 0; r <= 3; ++r) {
                const long long want = k == 1 ? oracle::lattice_points(n, r, 0, r)
                                              : oracle::lattice_points(n, r, (k - 1) * r, k * r, true);
                CHECK(count_half_open(n, k, r) == want);
            }
}

TEST_CASE("closed counts", "[ehrhart]")
{
    CHECK(count_closed(2, 1, 1) == 3);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k) {
            CHECK(count_closed(n, k, 0) == 1);
            for (long long r = 0; r <= 3; ++r)
                CHECK(count_closed(n, k, r) == oracle::lattice_points(n, r, (k - 1) * r, k * r));
        }
    // Closed minus half-open is the facet 2x_n = k-1 (one dimension lower).
    for (long long r = 0; r <= 4; ++r)
        CHECK(count_closed(3, 2, r) - count_half_open(3, 2, r) == oracle::lattice_points(3, r, r, r));
    // Closed counts grow with the dilation.
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k)
            for (long long r = 0; r < 4; ++r) CHECK(count_closed(n, k, r) <= count_closed(n, k, r + 1));
}

TEST_CASE("parallelepiped counts", "[ehrhart]")
{
    CHECK(count_parallelepiped(2, 1) == 6);
    CHECK(count_parallelepiped(3, 2) == 75);
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_parallelepiped(n, 0) == 1);
        for (long long r = 0; r <= 6; ++r) {
            BigInt want = r + 1;
            for (int i = 1; i < n; ++i) want *= 2 * r + 1;
            CHECK(count_parallelepiped(n, r) == want);
            BigInt sum = 0;
            for (int k = 1; k <= 2 * n - 1; ++k) sum += count_half_open(n, k, r);
            CHECK(sum == want);
        }
    }
}

TEST_CASE("h* from counts", "[ehrhart]")
{
    CHECK(hstar_from_counts(half_open_counts(3, 3)) == IntPolynomial{0, 5, 5});
    CHECK(hstar_from_counts(parallelepiped_counts(2)) == IntPolynomial{1, 3});
    CHECK(hstar_from_counts(CountTable{1, 0, true, {1, 2, 3}}) == IntPolynomial{1});
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k) {
            std::vector<long long> L;
            for (long long r = 0; r <= n; ++r) L.push_back(oracle::lattice_points(n, r, (k - 1) * r, k * r));
            CHECK(hstar_closed_direct(n, k) == oracle::hstar_by_series(L, n));
        }
    CHECK_THROWS_MATCHES(hstar_from_counts(CountTable{1, 0, true, {1, 0, 0}}), Error, has_code(ErrorCode::NegativeCoefficient));
    CHECK_THROWS_MATCHES(hstar_from_counts(CountTable{1, 0, true, {1, 2, 4}}), Error, has_code(ErrorCode::InconsistentCounts));
    CHECK_THROWS_MATCHES(hstar_from_counts(CountTable{2, 0, true, {1, 2}}), Error, has_code(ErrorCode::InvalidArgument));
}

TEST_CASE("half-open h* reproduces the reference table", "[ehrhart]")
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const IntPolynomial h = hstar_half_open_direct(n, k);
            CHECK(h == reference::poly(reference::half_open_hstar_reference()[n][k]));
            CHECK(h.degree() <= n);
            CHECK(h.all_nonnegative());
        }
    CHECK(hstar_half_open_direct(5, 5) == IntPolynomial{0, 35, 268, 268, 35});
}

TEST_CASE("closed h*", "[ehrhart]")
{
    CHECK(hstar_closed_direct(3, 2) == IntPolynomial{1, 4, 1});
    CHECK(hstar_closed_direct(3, 4) == IntPolynomial{1, 4, 1});
    CHECK(hstar_closed_direct(4, 4) == IntPolynomial{1, 21, 39, 7});
    CHECK(hstar_closed_via_recursion(3, 2) == IntPolynomial{1, 4, 1});
    CHECK(hstar_closed_via_recursion(3, 4) == IntPolynomial{1, 4, 1});
    CHECK(hstar_closed_via_recursion(2, 1) == hstar_closed_direct(2, 1));
    const auto one = closed_hstar_table(5, RecursionForm::OneStep);
    const auto tel = closed_hstar_table(5, RecursionForm::Telescoped);
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const IntPolynomial direct = hstar_closed_direct(n, k);
            CHECK(direct == reference::poly(reference::closed_hstar_reference()[n][k]));
            CHECK(one[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] == direct);
            CHECK(tel[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] == direct);
            CHECK(direct.all_nonnegative());
        }
}

TEST_CASE("h* tables beyond n = 5", "[ehrhart][slow]")
{
    for (int n = 6; n <= 7; ++n) {
        const auto one = closed_hstar_table(n, RecursionForm::OneStep);
        for (int k = 1; k <= 2 * n - 1; ++k) {
            CHECK(hstar_half_open_basc(n, k) == reference::poly(reference::half_open_hstar_reference()[n][k]));
            CHECK(one[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]
                  == reference::poly(reference::closed_hstar_reference()[n][k]));
        }
    }
    for (int k = 1; k <= 11; ++k)
        CHECK(hstar_half_open_direct(6, k) == reference::poly(reference::half_open_hstar_reference()[6][k]));
}

TEST_CASE("volumes", "[ehrhart]")
{
    CHECK(volume(2, 2) == 2);
    CHECK(volume(3, 3) == 10);
    for (int n = 1; n <= 6; ++n) CHECK(volume(n, 1) == 1);
    for (int n = 1; n <= 5; ++n) {
        std::vector<BigInt> vol(static_cast<std::size_t>(2 * n + 2), BigInt(0));
        for (int k = 1; k <= 2 * n - 1; ++k) {
            vol[static_cast<std::size_t>(k)] = volume(n, k);
            long long fexc = 0, cd = 0;
            for_each_xn(n, [&](const SignedPermutation &w) {
                fexc += flag_stats(w).fexc == k - 1 ? 1 : 0;
                cd += cdes_of_inverse(w) == k ? 1 : 0;
            });
            CHECK(vol[static_cast<std::size_t>(k)] == fexc);
            CHECK(vol[static_cast<std::size_t>(k)] == cd);
        }
        const IntPolynomial eb = eulerian_b(n);
        auto v = [&](int j) { return j < 1 || j > 2 * n - 1 ? BigInt(0) : vol[static_cast<std::size_t>(j)]; };
        for (int k = 0; k <= n; ++k) CHECK(eb.coeff(k) == v(2 * k - 1) + 2 * v(2 * k) + v(2 * k + 1));
    }
}

TEST_CASE("range and resource errors", "[ehrhart]")
{
    CHECK_THROWS_MATCHES(count_half_open(2, 0, 1), Error, has_code(ErrorCode::KOutOfRange));
    CHECK_THROWS_MATCHES(count_closed(2, 4, 1), Error, has_code(ErrorCode::KOutOfRange));
    CHECK_THROWS_MATCHES(hstar_closed_via_recursion(3, 6), Error, has_code(ErrorCode::KOutOfRange));
    CHECK_THROWS_MATCHES(volume(1, 2), Error, has_code(ErrorCode::KOutOfRange));
    Limits lim;
    lim.max_cells = 100;
    CHECK_THROWS_MATCHES(count_parallelepiped(5, 4, lim), Error, has_code(ErrorCode::ResourceLimit));
    CHECK(count_parallelepiped(2, 4, lim) == 45);
}
