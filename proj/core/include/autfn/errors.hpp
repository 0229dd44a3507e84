#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autfn {

// Invalid arguments, malformed input files, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration outgrew its cap; the generated object may be infinite.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An intermediate word grew past the guard length, which almost always
// means an infinite group is being enumerated.
class WordLengthExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity the library asserts unconditionally was violated on valid
// input. Reaching this is a falsification of the encoded theory (or a bug),
// never a user error.
class Falsification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text that could not be parsed; byte_offset() locates the failure.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : InputError(what), byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

}  // namespace autfn
