#ifndef HYPLAB_CLI_HPP
#define HYPLAB_CLI_HPP

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <hyplab/alcoves.hpp>
#include <hyplab/ehrhart.hpp>
#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/report.hpp>
#include <hyplab/root_system.hpp>
#include <hyplab/signed_permutation.hpp>
#include <hyplab/sturm.hpp>
#include <hyplab/suites.hpp>
#include <hyplab/xn_poset.hpp>

namespace hyplab::cli
{

using Json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv, Dot };

inline Format parse_format(const std::string &s)
{
    if (s == "plain") return Format::Plain;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "dot") return Format::Dot;
    throw Error(ErrorCode::BadFormat, "unknown format " + s);
}

inline const char *format_name(Format f)
{
    switch (f) {
        case Format::Plain: return "plain";
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Dot: return "dot";
    }
    return "plain";
}

struct RunConfig {
    std::string command;
    Family family = Family::C;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<long long> r;
    std::string method = "all";
    std::optional<Format> format;
    std::optional<int> max_n;
    std::string out;
    std::string suite = "all";
    // stats only: enumerate B_n instead of X_n, and keep rows with cdes(w^-1) = value.
    bool whole_group = false;
    std::optional<int> cdes_inv;
};

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_claim_failed = 1;
constexpr int exit_error = 2;

namespace detail
{

inline Json big_json(const BigInt &b)
{
    if (b >= BigInt(std::numeric_limits<long long>::min()) && b <= BigInt(std::numeric_limits<long long>::max()))
        return Json(static_cast<long long>(b));
    return Json(b.str());
}

inline Json poly_json(const IntPolynomial &p)
{
    Json a = Json::array();
    for (const auto &c : p.coefficients()) a.push_back(big_json(c));
    return a;
}

// Low-to-high coefficients separated by spaces, for CSV cells.
inline std::string poly_cells(const IntPolynomial &p)
{
    std::string s;
    for (const auto &c : p.coefficients()) s += (s.empty() ? "" : " ") + c.str();
    return s.empty() ? "0" : s;
}

inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline Json window_json(const SignedPermutation &w)
{
    return Json(w.window());
}

inline std::string join(const std::vector<int> &v, const char *sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline Json envelope(const RunConfig &c)
{
    Json j;
    j["schema_version"] = "1";
    j["command"] = c.command;
    return j;
}

inline int require_n(const RunConfig &c)
{
    if (!c.n) throw Error(ErrorCode::InvalidArgument, c.command + " needs --n");
    return *c.n;
}

inline Format format_or(const RunConfig &c, Format dflt, std::initializer_list<Format> allowed)
{
    const Format f = c.format.value_or(dflt);
    for (Format a : allowed)
        if (a == f) return f;
    throw Error(ErrorCode::BadFormat, std::string("format ") + format_name(f) + " is not available for " + c.command);
}

} // namespace detail

inline int cmd_stats(const RunConfig &c, const Limits &lim, std::ostream &os)
{
    const int n = detail::require_n(c);
    const Format f = detail::format_or(c, Format::Plain, {Format::Plain, Format::Csv, Format::Json});
    std::vector<std::pair<SignedPermutation, StatRecord>> rows;
    auto visit = [&](const SignedPermutation &w) {
        const StatRecord s = all_stats(w);
        if (c.cdes_inv && cdes_of_inverse(w) != *c.cdes_inv) return;
        rows.emplace_back(w, s);
    };
    if (c.whole_group)
        for_each_bn(n, visit, lim);
    else
        for_each_xn(n, visit, lim);

    const char *hdr[] = {"window", "desB", "fdes", "fexc", "excB", "basc", "cdes", "cdes_inv"};
    auto values = [](const SignedPermutation &w, const StatRecord &s) {
        return std::array<int, 7>{s.desB, s.fdes, s.fexc, s.excB, s.basc, s.cdes, cdes_of_inverse(w)};
    };
    if (f == Format::Json) {
        Json j = detail::envelope(c);
        j["group"] = c.whole_group ? "B" : "X";
        j["n"] = n;
        if (c.cdes_inv) j["cdes_inv"] = *c.cdes_inv;
        Json arr = Json::array();
        for (const auto &[w, s] : rows) {
            Json row;
            row["window"] = detail::window_json(w);
            const auto v = values(w, s);
            for (std::size_t i = 0; i < v.size(); ++i) row[hdr[i + 1]] = v[i];
            arr.push_back(row);
        }
        j["rows"] = arr;
        os << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        for (std::size_t i = 0; i < 8; ++i) os << (i ? "," : "") << hdr[i];
        os << '\n';
        for (const auto &[w, s] : rows) {
            os << to_string(w);
            for (int v : values(w, s)) os << ',' << v;
            os << '\n';
        }
    } else {
        std::size_t width = 6;
        for (const auto &row : rows) width = std::max(width, to_string(row.first).size());
        os << std::string("window") << std::string(width - 6 + 2, ' ');
        for (std::size_t i = 1; i < 8; ++i) os << hdr[i] << (i == 7 ? "" : "  ");
        os << '\n';
        for (const auto &[w, s] : rows) {
            const std::string ws = to_string(w);
            os << ws << std::string(width - ws.size() + 2, ' ');
            const auto v = values(w, s);
            for (std::size_t i = 0; i < v.size(); ++i) {
                const std::string cell = std::to_string(v[i]);
                const std::size_t colw = std::string(hdr[i + 1]).size();
                os << std::string(colw - std::min(colw, cell.size()), ' ') << cell << (i + 1 == v.size() ? "" : "  ");
            }
            os << '\n';
        }
        os << rows.size() << " rows\n";
    }
    return exit_ok;
}

namespace detail
{

struct HstarRow {
    int k;
    bool closed;
    std::vector<std::pair<std::string, IntPolynomial>> by_method;
    std::optional<BigInt> points;

    bool agree() const
    {
        for (const auto &m : by_method)
            if (m.second != by_method.front().second) return false;
        return true;
    }
};

inline std::vector<std::string> methods_for(const std::string &m)
{
    if (m == "all") return {"basc", "flag", "oracle"};
    if (m == "basc" || m == "flag" || m == "oracle") return {m};
    throw Error(ErrorCode::InvalidArgument, "unknown method " + m);
}

} // namespace detail

inline int cmd_hstar(const RunConfig &c, const Limits &lim, std::ostream &os)
{
    const int n = detail::require_n(c);
    const Format f = detail::format_or(c, Format::Plain, {Format::Plain, Format::Csv, Format::Json});
    const auto methods = detail::methods_for(c.method);
    if (c.k) ::hyplab::detail::check_k(n, *c.k);

    std::vector<detail::HstarRow> rows;
    std::vector<IntPolynomial> basc_h, flag_h;
    std::vector<std::vector<IntPolynomial>> closed_rec;
    auto half = [&](const std::string &m, int k) -> IntPolynomial {
        if (m == "basc") {
            if (basc_h.empty()) basc_h = basc_census(n, lim);
            return basc_h[static_cast<std::size_t>(k)];
        }
        if (m == "flag") {
            if (flag_h.empty()) flag_h = flag_census(n, lim);
            return flag_h[static_cast<std::size_t>(k)];
        }
        return hstar_half_open_direct(n, k, lim);
    };
    auto closed = [&](const std::string &m, int k) -> IntPolynomial {
        if (m == "oracle") return hstar_closed_direct(n, k, lim);
        if (closed_rec.empty()) closed_rec = closed_hstar_table(n, RecursionForm::OneStep, lim);
        return closed_rec[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };

    const int k_lo = c.k ? *c.k : 1;
    const int k_hi = c.k ? *c.k : 2 * n - 1;
    for (int k = k_lo; k <= k_hi; ++k) {
        detail::HstarRow row{k, false, {}, {}};
        for (const auto &m : methods) row.by_method.emplace_back(m, half(m, k));
        if (c.r) row.points = count_half_open(n, k, *c.r, lim);
        rows.push_back(std::move(row));
    }
    // The closed column is printed when k is omitted or a dilation was asked for.
    for (int k = k_lo; k <= k_hi && (!c.k || c.r); ++k) {
        detail::HstarRow row{k, true, {}, {}};
        // basc and flag both reach the closed body through the recursion.
        std::vector<std::string> cm;
        for (const auto &m : methods) {
            const std::string tag = m == "oracle" ? "oracle" : "recursion";
            if (std::find(cm.begin(), cm.end(), tag) == cm.end()) cm.push_back(tag);
        }
        for (const auto &m : cm) row.by_method.emplace_back(m, closed(m == "oracle" ? "oracle" : "basc", k));
        if (c.r) row.points = count_closed(n, k, *c.r, lim);
        rows.push_back(std::move(row));
    }

    bool agree = true;
    for (const auto &r : rows) agree = agree && r.agree();
    const bool verdict = methods.size() > 1;

    if (f == Format::Json) {
        Json j = detail::envelope(c);
        j["n"] = n;
        j["method"] = c.method;
        if (c.r) j["r"] = *c.r;
        Json arr = Json::array();
        for (const auto &r : rows) {
            Json o;
            o["k"] = r.k;
            o["body"] = r.closed ? "closed" : "half-open";
            Json ms;
            for (const auto &[m, p] : r.by_method) ms[m] = detail::poly_json(p);
            o["hstar"] = ms;
            if (r.points) o["lattice_points"] = detail::big_json(*r.points);
            if (verdict) o["agree"] = r.agree();
            arr.push_back(o);
        }
        j["rows"] = arr;
        if (verdict) j["verdict"] = agree ? "AGREE" : "DISAGREE";
        os << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        os << "n,k,body,method,coefficients" << (c.r ? ",lattice_points" : "") << '\n';
        for (const auto &r : rows)
            for (const auto &[m, p] : r.by_method) {
                os << n << ',' << r.k << ',' << (r.closed ? "closed" : "half-open") << ',' << m << ','
                   << detail::poly_cells(p);
                if (r.points) os << ',' << r.points->str();
                os << '\n';
            }
    } else if (c.k && methods.size() == 1 && !c.r) {
        os << to_string(rows.front().by_method.front().second) << '\n';
    } else {
        for (const auto &r : rows) {
            os << (r.closed ? "closed    " : "half-open ") << "n=" << n << " k=" << r.k;
            if (r.points) os << "  L(" << *c.r << ")=" << r.points->str();
            os << '\n';
            for (const auto &[m, p] : r.by_method) os << "  " << m << std::string(10 - m.size(), ' ') << to_string(p) << '\n';
        }
        if (verdict) os << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
    return agree ? exit_ok : exit_claim_failed;
}

namespace detail
{

// Fixed 16-color cycle, indexed by cdes(w^-1).
inline const std::array<const char *, 16> &palette()
{
    static const std::array<const char *, 16> p = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
                                                  "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
                                                  "#9a6324", "#fffac8", "#800000", "#aaffc3"};
    return p;
}

// Window with a caret after every letter that opens a big ascent; a leading
// caret marks the position before w_1.
inline std::string marked_window(const SignedPermutation &w)
{
    const auto b = big_ascent_set(w);
    auto has = [&](int i) { return std::find(b.begin(), b.end(), i) != b.end(); };
    std::string s = has(-1) ? "^ " : "";
    for (int i = 1; i <= w.size(); ++i) {
        s += std::to_string(w.at(i));
        if (has(i)) s += '^';
        if (i < w.size()) s += ' ';
    }
    return s;
}

} // namespace detail

inline int cmd_poset(const RunConfig &c, const Limits &lim, std::ostream &os)
{
    const int n = detail::require_n(c);
    const Format f = detail::format_or(c, Format::Dot, {Format::Dot, Format::Plain, Format::Csv, Format::Json});
    if (f == Format::Dot && n > 5) throw Error(ErrorCode::ResourceLimit, "dot output is limited to n <= 5");
    const XnPoset p = build_poset(n, lim);
    std::vector<int> cd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) cd[i] = cdes_of_inverse(p.elements[i]);

    if (f == Format::Dot) {
        os << "digraph X" << n << " {\n  rankdir=BT;\n  node [shape=box, style=filled, fontname=\"monospace\"];\n";
        std::map<long long, std::vector<std::size_t>> levels;
        for (std::size_t i = 0; i < p.size(); ++i) levels[p.rank_of[i]].push_back(i);
        for (std::size_t i = 0; i < p.size(); ++i)
            os << "  v" << i << " [label=\"" << detail::marked_window(p.elements[i]) << "\", fillcolor=\""
               << detail::palette()[static_cast<std::size_t>(cd[i]) % 16] << "\", cdes_inv=" << cd[i] << "];\n";
        for (const auto &[rank, ids] : levels) {
            os << "  { rank=same;";
            for (std::size_t i : ids) os << " v" << i << ';';
            os << " }\n";
        }
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::uint32_t j : p.lower[i]) os << "  v" << j << " -> v" << i << ";\n";
        os << "}\n";
    } else if (f == Format::Json) {
        Json j = detail::envelope(c);
        j["n"] = n;
        Json nodes = Json::array();
        for (std::size_t i = 0; i < p.size(); ++i) {
            Json o;
            o["id"] = i;
            o["window"] = detail::window_json(p.elements[i]);
            o["rank"] = p.rank_of[i];
            o["cdes_inv"] = cd[i];
            o["big_ascents"] = big_ascent_set(p.elements[i]);
            nodes.push_back(o);
        }
        Json edges = Json::array();
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::uint32_t l : p.lower[i]) edges.push_back(Json::array({l, i}));
        j["nodes"] = nodes;
        j["edges"] = edges;
        j["graded"] = p.rank_violations == 0 && p.unreachable == 0;
        os << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        os << "id,window,rank,cdes_inv,big_ascents,lower_covers\n";
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::vector<int> lc(p.lower[i].begin(), p.lower[i].end());
            os << i << ',' << to_string(p.elements[i]) << ',' << p.rank_of[i] << ',' << cd[i] << ','
               << detail::join(big_ascent_set(p.elements[i]), " ") << ',' << detail::join(lc, " ") << '\n';
        }
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            os << "rank " << p.rank_of[i] << "  cdes_inv " << cd[i] << "  " << detail::marked_window(p.elements[i]);
            if (!p.lower[i].empty()) {
                os << "  covers:";
                for (std::uint32_t j : p.lower[i]) os << " [" << to_string(p.elements[j]) << ']';
            }
            os << '\n';
        }
        os << p.size() << " elements, graded: " << (p.rank_violations == 0 && p.unreachable == 0 ? "yes" : "no") << '\n';
    }
    return exit_ok;
}

inline int cmd_verify(const RunConfig &c, const Limits &lim, std::ostream &os)
{
    const Format f = detail::format_or(c, Format::Plain, {Format::Plain, Format::Csv, Format::Json});
    const auto reports = run_suite(parse_suite(c.suite), lim);
    bool ok = true;
    for (const auto &r : reports) ok = ok && r.passed();
    if (f == Format::Json) {
        Json j = detail::envelope(c);
        j["suite"] = c.suite;
        Json arr = Json::array();
        for (const auto &r : reports) {
            Json o;
            o["title"] = r.title;
            o["informational"] = r.informational;
            o["pass"] = r.all_pass();
            Json checks = Json::array();
            for (const auto &ch : r.checks) checks.push_back(Json{{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
            o["checks"] = checks;
            arr.push_back(o);
        }
        j["reports"] = arr;
        j["verdict"] = ok ? "PASS" : "FAIL";
        os << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        os << "report,informational,check,pass,detail\n";
        for (const auto &r : reports)
            for (const auto &ch : r.checks)
                os << detail::csv_field(r.title) << ',' << (r.informational ? 1 : 0) << ',' << detail::csv_field(ch.name)
                   << ',' << (ch.pass ? 1 : 0) << ',' << detail::csv_field(ch.detail) << '\n';
    } else {
        for (const auto &r : reports) os << r;
        os << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? exit_ok : exit_claim_failed;
}

inline int cmd_psi(const RunConfig &c, const Limits &lim, std::ostream &os)
{
    const int n = detail::require_n(c);
    const Format f = detail::format_or(c, Format::Plain, {Format::Plain, Format::Csv, Format::Json});
    const RootSystem rs = build_root_system(c.family, n, lim);
    const IntPolynomial psi = psi_polynomial(rs);
    const RealRootCertificate cert = real_root_certificate(psi);
    if (f == Format::Json) {
        Json j = detail::envelope(c);
        j["family"] = std::string(1, family_letter(c.family));
        j["n"] = n;
        j["psi"] = detail::poly_json(psi);
        j["degree"] = cert.degree;
        j["real_roots"] = cert.real_roots_with_multiplicity;
        j["distinct_real_roots"] = cert.distinct_real_roots;
        j["real_rooted"] = cert.real_rooted;
        os << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        os << "family,n,coefficients,degree,real_roots,real_rooted\n"
           << family_letter(c.family) << ',' << n << ',' << detail::poly_cells(psi) << ',' << cert.degree << ','
           << cert.real_roots_with_multiplicity << ',' << (cert.real_rooted ? 1 : 0) << '\n';
    } else {
        os << "Psi_" << rs.name() << "(t) = " << to_string(psi) << '\n'
           << "real roots: " << cert.real_roots_with_multiplicity << " of " << cert.degree << ", "
           << (cert.real_rooted ? "real-rooted" : "not real-rooted") << '\n';
    }
    return exit_ok;
}

inline Limits limits_for(const RunConfig &c)
{
    Limits lim = Limits::from_env();
    if (c.max_n) {
        if (*c.max_n < 1) throw Error(ErrorCode::InvalidArgument, "--max-n must be positive");
        lim = lim.with_max_n(*c.max_n);
    }
    return lim;
}

// Runs one command; errors become a message on `err` and exit code 2.
inline int run(const RunConfig &c, std::ostream &os, std::ostream &err)
{
    try {
        const Limits lim = limits_for(c);
        if (c.command == "stats") return cmd_stats(c, lim, os);
        if (c.command == "hstar") return cmd_hstar(c, lim, os);
        if (c.command == "poset") return cmd_poset(c, lim, os);
        if (c.command == "verify") return cmd_verify(c, lim, os);
        if (c.command == "psi") return cmd_psi(c, lim, os);
        throw Error(ErrorCode::InvalidArgument, "unknown command " + c.command);
    } catch (const Error &e) {
        err << "hyplab: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace hyplab::cli

#endif
