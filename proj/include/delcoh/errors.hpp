#pragma once

#include <stdexcept>
#include <string>

namespace delcoh {

// Malformed input: bad shapes, simplices missing from a complex, non-cocycles.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A name that does not resolve (complex, map, character, cycle).
class UnknownReference : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace delcoh
