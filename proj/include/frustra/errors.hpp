#pragma once

#include <stdexcept>
#include <string>

namespace frustra {

// Invalid argument combination (wrong channel for L, special q passed to a pair routine, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but the quantity is undefined there (e.g. imaginary geometric mean).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Problem size exceeds a dense or enumeration cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Bloch loop touches the origin, so the normalized loop does not exist.
class SingularLoopError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace frustra
