#pragma once

#include <stdexcept>
#include <string>

namespace ratmod {

// Categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
    usage,       // bad input shape, parse failures
    axiom,       // a CDGA / module / morphism / duality axiom fails
    hypothesis,  // a structural hypothesis of a construction fails
    internal,    // an invariant the library guarantees was broken
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ratmod
