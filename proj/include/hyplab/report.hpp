#ifndef HYPLAB_REPORT_HPP
#define HYPLAB_REPORT_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hyplab
{

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Outcome of one verification. Informational reports (open conjectures, or
// claims that are computed and compared without gating) never count as failures.
struct Report {
    std::string title;
    bool informational = false;
    std::vector<Check> checks;

    Report() = default;
    explicit Report(std::string t, bool info = false) : title(std::move(t)), informational(info) {}

    void add(std::string name, bool pass, std::string detail = {})
    {
        checks.push_back(Check{std::move(name), pass, std::move(detail)});
    }

    void merge(const Report &o)
    {
        for (const auto &c : o.checks) checks.push_back(Check{o.title + ": " + c.name, c.pass, c.detail});
    }

    bool all_pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
    }

    // Gating verdict: informational reports always pass.
    bool passed() const
    {
        return informational || all_pass();
    }

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; }));
    }
};

inline std::ostream &operator<<(std::ostream &os, const Report &r)
{
    os << r.title << (r.informational ? " [informational]" : "") << ": "
       << (r.all_pass() ? "PASS" : (r.informational ? "MISMATCH" : "FAIL")) << " (" << r.checks.size() - r.failures()
       << "/" << r.checks.size() << ")\n";
    for (const auto &c : r.checks) {
        if (c.pass && c.detail.empty()) continue;
        os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    return os;
}

} // namespace hyplab

#endif
