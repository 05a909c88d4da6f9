#ifndef REPLIHAM_ERRORS_HPP
#define REPLIHAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace repliham {

// Bad user input: malformed shape or tileset files, unmet premises.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a documented premise
// (disconnected shape, holes, feature size below the bound, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent configuration: unknown glue labels, bad flag combinations.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant breach (stale attachment site, impossible state).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace repliham

#endif
