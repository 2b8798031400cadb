#pragma once

#include <stdexcept>
#include <string>

namespace choicepa {

// Base for every error raised by the library. kind() is a stable
// machine-readable tag used by the CLI error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error("overflow", what) {}
};

// A tracked degree reached the threshold-vector cap K_max.
class KmaxExceeded : public Error {
public:
    explicit KmaxExceeded(const std::string& what) : Error("kmax_exceeded", what) {}
};

// N_j(k) > F_j(k) observed in a coupled run.
class CouplingViolation : public Error {
public:
    explicit CouplingViolation(const std::string& what) : Error("coupling_violation", what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("io", what) {}
};

} // namespace choicepa
