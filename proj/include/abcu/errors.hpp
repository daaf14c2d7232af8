#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abcu {

// An input violated a documented precondition: malformed file, mismatched
// dimensions, index out of range, probability outside [0,1], ...
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An inherently exponential path would exceed its configured cap. The
// offending size is kept so callers can report it or retry with a larger cap.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::uint64_t attempted, std::uint64_t cap)
        : std::runtime_error(what), attempted_(attempted), cap_(cap) {}

    std::uint64_t attempted() const { return attempted_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t attempted_;
    std::uint64_t cap_;
};

}  // namespace abcu
