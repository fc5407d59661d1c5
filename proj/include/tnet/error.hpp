#ifndef TNET_ERROR_HPP
#define TNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input document is not well-formed (bad JSON, bad encoding).
struct ParseError : Error {
    using Error::Error;
};

// Document parses but violates the schema (missing/extra/ill-typed fields,
// unresolvable link endpoints, malformed triples).
struct SchemaError : Error {
    using Error::Error;
};

// Network data violates a semantic invariant (consistency condition,
// latency positivity, intervals outside the lifetime).
struct ValidationError : Error {
    using Error::Error;
};

// Two raw pieces of a temporal quantity intersect with different values.
struct OverlapError : Error {
    using Error::Error;
};

// A latency value below 1 reached an operation that requires strictly
// positive travel times.
struct NonPositiveLatency : Error {
    using Error::Error;
};

struct UnknownNode : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// A matrix closure failed to stabilize (a non-expanding cycle slipped in,
// or the iteration bound was exhausted).
struct ClosureDiverged : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

}  // namespace tnet

#endif  // TNET_ERROR_HPP
