#pragma once

#include <stdexcept>
#include <string>

namespace spnodes {

/// Node family requested with an incompatible degree (e.g. ND1 with even s).
class ParityError : public std::invalid_argument {
public:
    explicit ParityError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A root bracket failed to contain a sign change. The bracket layout is
/// guaranteed analytically, so this always indicates an implementation bug.
class BracketError : public std::logic_error {
public:
    explicit BracketError(const std::string& msg) : std::logic_error(msg) {}
};

class IntervalError : public std::invalid_argument {
public:
    explicit IntervalError(const std::string& msg) : std::invalid_argument(msg) {}
};

class LengthMismatch : public std::invalid_argument {
public:
    explicit LengthMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

class UnknownFunction : public std::invalid_argument {
public:
    explicit UnknownFunction(const std::string& msg) : std::invalid_argument(msg) {}
};

class KernelSingular : public std::runtime_error {
public:
    explicit KernelSingular(const std::string& msg) : std::runtime_error(msg) {}
};

class QuadratureFailure : public std::runtime_error {
public:
    explicit QuadratureFailure(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularMatrix : public std::runtime_error {
public:
    explicit SingularMatrix(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spnodes
