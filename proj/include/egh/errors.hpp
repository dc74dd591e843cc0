#pragma once

#include <stdexcept>
#include <string>

namespace egh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed inputs: wrong table shapes, schema mismatches, sets that are not
// groups, maps with out-of-range entries.
class StructuralError : public Error {
public:
    using Error::Error;
};

// An operation's stated precondition does not hold; the message carries the
// measured gap.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A fact that is a theorem on valid inputs failed to hold. Reaching this is a
// bug, never a data problem; the CLI maps it to exit code 2.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

} // namespace egh
