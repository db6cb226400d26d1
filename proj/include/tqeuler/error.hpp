#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqeuler {

enum class errc {
    non_divisible,
    not_invertible,
    zero_denominator,
    cutoff_exceeded,
    invalid_endpoint,
    out_of_range,
};

inline std::string_view to_string(errc code)
{
    switch (code) {
    case errc::non_divisible: return "NON_DIVISIBLE";
    case errc::not_invertible: return "NOT_INVERTIBLE";
    case errc::zero_denominator: return "ZERO_DENOMINATOR";
    case errc::cutoff_exceeded: return "CUTOFF_EXCEEDED";
    case errc::invalid_endpoint: return "INVALID_ENDPOINT";
    case errc::out_of_range: return "RANGE";
    }
    return "UNKNOWN";
}

// Every failure in the library is reported through this type; the code is the
// machine-readable part, the message carries the offending values.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace tqeuler
