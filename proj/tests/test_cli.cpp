#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include <hyplab/cli.hpp>

using namespace hyplab;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(cli::RunConfig c)
{
    std::ostringstream out, err;
    const int code = cli::run(c, out, err);
    return {code, out.str(), err.str()};
}

cli::RunConfig cfg(std::string command, std::optional<int> n = std::nullopt)
{
    cli::RunConfig c;
    c.command = std::move(command);
    c.n = n;
    return c;
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

} // namespace

TEST_CASE("stats", "[cli]")
{
    auto c = cfg("stats", 2);
    c.format = cli::Format::Csv;
    const Result r = run(c);
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "window,desB,fdes,fexc,excB,basc,cdes,cdes_inv");
    CHECK(lines(run([] {
                        auto one = cfg("stats", 1);
                        one.format = cli::Format::Csv;
                        return one;
                    }())
                    .out)
              .size()
          == 2);

    auto filtered = cfg("stats", 3);
    filtered.cdes_inv = 3;
    const Result f = run(filtered);
    CHECK(f.out.find("10 rows") != std::string::npos);

    auto bn = cfg("stats", 2);
    bn.whole_group = true;
    CHECK(run(bn).out.find("8 rows") != std::string::npos);

    auto js = cfg("stats", 2);
    js.format = cli::Format::Json;
    const auto j = cli::Json::parse(run(js).out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["rows"].size() == 4);
}

TEST_CASE("output is deterministic", "[cli]")
{
    for (const char *cmd : {"stats", "hstar", "poset", "psi"}) {
        auto c = cfg(cmd, 3);
        CHECK(run(c).out == run(c).out);
    }
}

TEST_CASE("hstar", "[cli]")
{
    auto single = cfg("hstar", 2);
    single.k = 2;
    single.method = "oracle";
    const Result s = run(single);
    CHECK(s.code == 0);
    CHECK(s.out == "2t\n");

    const Result all = run(cfg("hstar", 3));
    CHECK(all.code == 0);
    CHECK(all.out.find("AGREE") != std::string::npos);
    CHECK(all.out.find("DISAGREE") == std::string::npos);

    auto js = cfg("hstar", 4);
    js.format = cli::Format::Json;
    js.r = 2;
    const auto j = cli::Json::parse(run(js).out);
    CHECK(j["verdict"] == "AGREE");
    CHECK(j["schema_version"] == "1");

    auto bad = cfg("hstar", 3);
    bad.method = "magic";
    CHECK(run(bad).code == cli::exit_error);
    CHECK(run(cfg("hstar")).code == cli::exit_error);
}

TEST_CASE("poset", "[cli]")
{
    const Result two = run(cfg("poset", 2));
    REQUIRE(two.code == 0);
    CHECK(two.out.rfind("digraph", 0) == 0);
    CHECK(two.out.find("rankdir=BT") != std::string::npos);
    int nodes = 0, edges = 0;
    for (const auto &l : lines(two.out)) {
        if (l.find("[label=") != std::string::npos) ++nodes;
        if (l.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 4);
    CHECK(edges == 3);

    // Node colors follow cdes(w^-1): slice sizes 1, 6, 10, 6, 1 for n = 3.
    const Result three = run(cfg("poset", 3));
    std::map<std::string, int> groups;
    for (const auto &l : lines(three.out)) {
        const auto p = l.find("cdes_inv=");
        if (p != std::string::npos) ++groups[l.substr(p + 9, 1)];
    }
    CHECK(groups == std::map<std::string, int>{{"1", 1}, {"2", 6}, {"3", 10}, {"4", 6}, {"5", 1}});

    CHECK(run(cfg("poset", 6)).code == cli::exit_error);
    auto js = cfg("poset", 6);
    js.format = cli::Format::Json;
    const auto j = cli::Json::parse(run(js).out);
    CHECK(j["nodes"].size() == 23040);
    CHECK(j["graded"] == true);
}

TEST_CASE("psi", "[cli]")
{
    auto b3 = cfg("psi", 3);
    b3.family = Family::B;
    const Result r = run(b3);
    CHECK(r.out.find("1 + 15t + 7t^2 + t^3") != std::string::npos);
    CHECK(r.out.find("not real-rooted") != std::string::npos);

    auto c4 = cfg("psi", 4);
    c4.format = cli::Format::Json;
    const auto j = cli::Json::parse(run(c4).out);
    CHECK(j["psi"] == cli::Json::array({1, 49, 115, 27}));
    CHECK(j["real_rooted"] == true);

    auto d4 = cfg("psi", 4);
    d4.family = Family::D;
    d4.format = cli::Format::Csv;
    CHECK(run(d4).out.find("D,4,1 22 18 6 1,4,") != std::string::npos);
}

TEST_CASE("verify", "[cli]")
{
    auto e = cfg("verify");
    e.suite = "ehrhart";
    const Result r = run(e);
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "PASS");

    // The conjecture is informational and never fails the command.
    auto conj = cfg("verify");
    conj.suite = "conjecture";
    CHECK(run(conj).code == 0);

    auto bad = cfg("verify");
    bad.suite = "everything";
    CHECK(run(bad).code == cli::exit_error);
}
