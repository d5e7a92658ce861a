#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/* Failure classes surfaced by the library.  The CLI maps each kind to a
   distinct exit code, so new kinds must be added there as well. */
enum class ErrorKind {
    Parse,        // malformed input text / file
    Shape,        // dimension or index mismatch between arguments
    Invariant,    // object violates a structural invariant it claims to satisfy
    Reject,       // input is well-formed but mathematically outside the domain
    Instability,  // truncation caps too small; reported ranks did not stabilize
    Internal,     // "cannot happen" -- indicates a bug, not a bad input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond)
        fail(kind, msg);
}

}  // namespace hodge
