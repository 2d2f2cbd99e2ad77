#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed something invalid: bad rank, index out of range,
// non-dominant weight where a dominant one is required, and so on.
class UsageError : public Error {
public:
    using Error::Error;
};

// A graph or orbit closure exceeded the configured node cap.
class NodeCapError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed.  Seeing this means the engine
// itself is broken (or a document was tampered with), not the caller.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A serialized document does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace crystal
