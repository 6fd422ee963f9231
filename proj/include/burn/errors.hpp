#pragma once

#include <stdexcept>

namespace burn {

// Thrown when an instance exceeds a configured size guard.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed input files (edge lists, graph6, batch specs).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Always-on invariant check; these guard algorithmic invariants that are
// supposed to be theorems, so a failure signals a bug rather than bad input.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

}  // namespace burn
