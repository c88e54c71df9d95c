#pragma once

#include <stdexcept>
#include <string>

namespace pathcover {

// Bad arguments or a violated precondition (maps to CLI exit code 2).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input: graph6 lines, edge lists, sequences (exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input is larger than a table or search the operation supports (exit code 3).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A builder's solver-checked postcondition failed, or a witness search came up empty.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pathcover
