#ifndef HYPLAB_ERROR_HPP
#define HYPLAB_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace hyplab
{

enum class ErrorCode {
    EmptyWindow,
    ZeroEntry,
    OutOfRangeEntry,
    DuplicateAbsValue,
    ResourceLimit,
    NotInXn,
    KOutOfRange,
    UnsupportedRank,
    NegativeCoefficient,
    InconsistentCounts,
    NotInYIdeal,
    BadFormat,
    InvalidArgument,
};

inline const char *error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::EmptyWindow: return "EmptyWindow";
        case ErrorCode::ZeroEntry: return "ZeroEntry";
        case ErrorCode::OutOfRangeEntry: return "OutOfRangeEntry";
        case ErrorCode::DuplicateAbsValue: return "DuplicateAbsValue";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::NotInXn: return "NotInXn";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::UnsupportedRank: return "UnsupportedRank";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::InconsistentCounts: return "InconsistentCounts";
        case ErrorCode::NotInYIdeal: return "NotInYIdeal";
        case ErrorCode::BadFormat: return "BadFormat";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// All library failures surface as this exception. `index()` is set when the
// failure is attributable to a single position of an input sequence.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), m_code(code), m_index(index)
    {
    }

    ErrorCode code() const noexcept
    {
        return m_code;
    }
    std::optional<std::size_t> index() const noexcept
    {
        return m_index;
    }

private:
    ErrorCode m_code;
    std::optional<std::size_t> m_index;
};

} // namespace hyplab

#endif
