#ifndef HYPLAB_LIMITS_HPP
#define HYPLAB_LIMITS_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

#include <hyplab/error.hpp>

namespace hyplab
{

// Resource caps checked before any enumeration starts.
struct Limits {
    // Largest n for which signed permutations of B_n / X_n are enumerated.
    int max_n = 9;
    // Largest number of raw lattice cells a single Ehrhart count may visit.
    std::uint64_t max_cells = 100'000'000ULL;
    // Largest rank per root-system family for alcove enumeration.
    int max_rank_a = 7;
    int max_rank_b = 6;
    int max_rank_c = 7;
    int max_rank_d = 6;

    // Defaults, with HYPLAB_MAX_CELLS overriding the cell cap.
    static Limits from_env()
    {
        Limits l;
        if (const char *s = std::getenv("HYPLAB_MAX_CELLS"); s != nullptr && *s != '\0') {
            char *end = nullptr;
            const unsigned long long v = std::strtoull(s, &end, 10);
            if (end == nullptr || *end != '\0' || v == 0) {
                throw Error(ErrorCode::InvalidArgument, std::string("HYPLAB_MAX_CELLS is not a positive integer: ") + s);
            }
            l.max_cells = v;
        }
        return l;
    }

    // Sets every rank/enumeration cap to `n` (the CLI --max-n flag).
    Limits with_max_n(int n) const
    {
        Limits l = *this;
        l.max_n = n;
        l.max_rank_a = l.max_rank_b = l.max_rank_c = l.max_rank_d = n;
        return l;
    }
};

inline const Limits &default_limits()
{
    static const Limits l = Limits::from_env();
    return l;
}

inline void check_enumeration_cap(int n, const Limits &lim)
{
    if (n > lim.max_n) {
        throw Error(ErrorCode::ResourceLimit,
                    "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(lim.max_n));
    }
}

} // namespace hyplab

#endif
