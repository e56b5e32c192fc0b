#pragma once

#include <stdexcept>
#include <string>

namespace cvxtw {

// Base of every error raised by the library. `exit_code` follows the CLI
// contract: 1 bound/validation failure, 2 input error, 3 internal assertion.
class Error : public std::runtime_error {
public:
    Error(const std::string& what, int exit_code)
        : std::runtime_error(what), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what, 2),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what, 2) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what, 2) {}
};

// The drawing fails the outer min-k-planarity check. Carries the witness.
class NotMinKPlanar : public Error {
public:
    NotMinKPlanar(const std::string& what, int edge_a, int edge_b)
        : Error(what, 1), edge_a(edge_a), edge_b(edge_b) {}
    int edge_a;
    int edge_b;
};

class ThreeConcurrentEdges : public Error {
public:
    ThreeConcurrentEdges(const std::string& what, int e, int f, int g)
        : Error(what, 3), e(e), f(f), g(g) {}
    int e, f, g;
};

// A proven bound (dual depth, bag size, existence of a balanced edge)
// was violated. Always a pipeline bug.
class InternalBoundViolation : public Error {
public:
    explicit InternalBoundViolation(const std::string& what) : Error(what, 3) {}
};

class DepthBoundViolated : public InternalBoundViolation {
public:
    using InternalBoundViolation::InternalBoundViolation;
};

class BagBoundViolated : public InternalBoundViolation {
public:
    using InternalBoundViolation::InternalBoundViolation;
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what, 2) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what, 1) {}
};

}  // namespace cvxtw
