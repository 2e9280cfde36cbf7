#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <functional>
#include <sstream>

#include <hyplab/cli.hpp>
#include <hyplab/hyplab.hpp>

using namespace hyplab;

namespace
{

std::optional<ErrorCode> code_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("every error code is reachable", "[errors]")
{
    const std::vector<std::pair<ErrorCode, std::function<void()>>> cases{
        {ErrorCode::EmptyWindow, [] { (void)SignedPermutation::from_window(std::span<const int>()); }},
        {ErrorCode::ZeroEntry, [] { (void)SignedPermutation::from_window({0}); }},
        {ErrorCode::OutOfRangeEntry, [] { (void)SignedPermutation::from_window({1, -5}); }},
        {ErrorCode::DuplicateAbsValue, [] { (void)SignedPermutation::from_window({-1, 1}); }},
        {ErrorCode::ResourceLimit, [] { (void)enumerate_xn(10); }},
        {ErrorCode::NotInXn, [] { (void)lower_covers(SignedPermutation::from_window({-1, 2})); }},
        {ErrorCode::KOutOfRange, [] { (void)hstar_half_open_direct(3, 6); }},
        {ErrorCode::UnsupportedRank, [] { (void)build_root_system(Family::D, 1); }},
        {ErrorCode::NegativeCoefficient, [] { (void)hstar_from_counts(CountTable{1, 0, true, {1, 0, 0}}); }},
        {ErrorCode::InconsistentCounts, [] { (void)hstar_from_counts(CountTable{1, 0, true, {1, 2, 4}}); }},
        {ErrorCode::NotInYIdeal, [] { (void)lambda_map(SignedPermutation::from_window({2, 1})); }},
        {ErrorCode::BadFormat, [] { (void)cli::parse_format("xml"); }},
        {ErrorCode::InvalidArgument, [] { (void)parse_family("E"); }},
    };
    std::set<ErrorCode> seen;
    for (const auto &[want, f] : cases) {
        INFO(error_code_name(want));
        CHECK(code_of(f) == want);
        seen.insert(want);
    }
    CHECK(seen.size() == 13);
}

TEST_CASE("error messages and indices", "[errors]")
{
    try {
        (void)SignedPermutation::from_window({1, 2, 2});
        FAIL("no exception");
    } catch (const Error &e) {
        CHECK(e.index() == std::optional<std::size_t>(2));
        CHECK(std::string(e.what()).size() > 0);
    }
    CHECK(std::string(error_code_name(ErrorCode::KOutOfRange)) == "KOutOfRange");
}

TEST_CASE("cell cap from the environment", "[errors]")
{
    ::setenv("HYPLAB_MAX_CELLS", "50", 1);
    const Limits small = Limits::from_env();
    CHECK(small.max_cells == 50);
    CHECK(code_of([&] { (void)count_closed(3, 2, 5, small); }) == ErrorCode::ResourceLimit);
    ::setenv("HYPLAB_MAX_CELLS", "ten", 1);
    CHECK(code_of([] { (void)Limits::from_env(); }) == ErrorCode::InvalidArgument);
    ::setenv("HYPLAB_MAX_CELLS", "0", 1);
    CHECK(code_of([] { (void)Limits::from_env(); }) == ErrorCode::InvalidArgument);
    ::unsetenv("HYPLAB_MAX_CELLS");
    CHECK(Limits::from_env().max_cells == Limits{}.max_cells);
}

TEST_CASE("max-n caps", "[errors]")
{
    const Limits l = Limits{}.with_max_n(3);
    CHECK(code_of([&] { (void)enumerate_bn(4, l); }) == ErrorCode::ResourceLimit);
    CHECK(code_of([&] { (void)build_root_system(Family::C, 4, l); }) == ErrorCode::ResourceLimit);
    CHECK(enumerate_bn(3, l).size() == 48);
}

TEST_CASE("the command layer maps errors to exit code 2", "[errors]")
{
    std::ostringstream out, err;
    cli::RunConfig c;
    c.command = "hstar";
    c.n = 3;
    c.k = 9;
    CHECK(cli::run(c, out, err) == cli::exit_error);
    CHECK(err.str().find("KOutOfRange") != std::string::npos);

    std::ostringstream out2, err2;
    cli::RunConfig d;
    d.command = "poset";
    d.n = 3;
    d.format = cli::Format::Csv;
    d.max_n = 2;
    CHECK(cli::run(d, out2, err2) == cli::exit_error);
    CHECK(err2.str().find("ResourceLimit") != std::string::npos);

    std::ostringstream out3, err3;
    cli::RunConfig s;
    s.command = "psi";
    s.n = 3;
    s.format = cli::Format::Dot;
    CHECK(cli::run(s, out3, err3) == cli::exit_error);
    CHECK(err3.str().find("BadFormat") != std::string::npos);
}
