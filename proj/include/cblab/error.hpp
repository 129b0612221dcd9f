#pragma once

#include <stdexcept>
#include <string>

namespace cblab {

// Error taxonomy shared across the toolkit. The kind determines the CLI
// exit code: math_assertion -> 1 (a checked mathematical statement failed,
// i.e. a potential counterexample or bug), everything else -> 2.
enum class ErrorKind {
    degenerate_input,
    unsupported_field,
    dimension_mismatch,
    genericity_exhausted,
    no_curve,
    math_assertion,
    usage,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::degenerate_input: return "degenerate_input";
        case ErrorKind::unsupported_field: return "unsupported_field";
        case ErrorKind::dimension_mismatch: return "dimension_mismatch";
        case ErrorKind::genericity_exhausted: return "genericity_exhausted";
        case ErrorKind::no_curve: return "no_curve";
        case ErrorKind::math_assertion: return "math_assertion";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

// Checks a mathematical invariant that the library itself promises. A failure
// here is either a bug or a counterexample to a certified statement, and is
// reported loudly rather than papered over.
inline void math_check(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::math_assertion, what);
}

inline void require(bool ok, ErrorKind kind, const std::string& what) {
    if (!ok) throw Error(kind, what);
}

}  // namespace cblab
