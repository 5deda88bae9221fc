#pragma once

#include <stdexcept>
#include <string>

namespace vacrad {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid physical parameters or special-function arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation requested on (or too close to) a cavity resonance or pole.
class ResonanceError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Two independent evaluation routes disagree beyond tolerance.
class CrossValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace vacrad
