#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyckham {

enum class Errc {
    RequestTooLarge,
    SourceExhausted,
    RangeNotPowerOfTwo,
    IndexOutOfDomain,
    IndexOutOfRange,
    StreamOverflow,
    TypeOutOfRange,
    LengthMismatch,
    DivisibilityViolation,
    BadArgument,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::uint64_t position = 0)
        : std::runtime_error(what), code_(code), position_(position) {}

    Errc code() const { return code_; }
    std::uint64_t position() const { return position_; }

private:
    Errc code_;
    std::uint64_t position_;
};

} // namespace dyckham
