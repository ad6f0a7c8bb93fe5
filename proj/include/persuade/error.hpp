#pragma once

#include <stdexcept>
#include <string>

namespace persuade {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside its admissible range.
class DomainError : public Error {
public:
    using Error::Error;
};

// Input is well-typed but carries no usable information (all-zero density,
// cost exactly 0 or 1, two point-mass marginals, ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Input violates a structural invariant (non-normalized density, bad config).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Caller broke an operation's precondition (wrong shape class, unordered chain).
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// Two independent numerical routes disagree beyond tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class NotApplicableError : public Error {
public:
    using Error::Error;
};

}  // namespace persuade
