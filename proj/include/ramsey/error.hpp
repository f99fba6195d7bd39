#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

enum class ErrorCode {
    invalid_argument,     // precondition or invariant violation in the input
    signature_mismatch,
    composition_mismatch,
    cap_exceeded,         // search or construction would exceed a configured cap
    empty_word,           // partial substitution truncated everything away
    unsupported,
    internal,             // a postcondition failed; indicates a bug
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown when a search needs more than its cap allows. `required` is the
/// size the search would have needed (colorings, classes or points).
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
        : Error(ErrorCode::cap_exceeded, what), required_(required), cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace ramsey
