#pragma once

#include <stdexcept>
#include <string>

namespace hopspan {

enum class Errc {
    InvalidArgument,
    OutOfInterval,
    NotSorted,
    OutOfRange,
    UnknownVertex,
    Unspannable,
    TooLarge,
    KindMismatch,
    NoRegion,
    Parse,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this type; `code()` tells
// callers which contract was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hopspan
