#pragma once

#include <stdexcept>
#include <string>

namespace ppg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CycleDetected : Error {
    explicit CycleDetected(const std::string& msg) : Error(msg) {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& msg) : Error(msg) {}
};

struct DuplicateVertex : Error {
    explicit DuplicateVertex(const std::string& msg) : Error(msg) {}
};

// Operation requires a disjoint-union-of-chains poset and the board is not one.
struct NotChainPoset : Error {
    explicit NotChainPoset(const std::string& msg) : Error(msg) {}
};

// Maker-Breaker-only operation called on a Maker-Maker game or vice versa.
struct ConventionMismatch : Error {
    explicit ConventionMismatch(const std::string& msg) : Error(msg) {}
};

// A solver was called on an instance outside its declared class.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

struct BoardTooLarge : Error {
    explicit BoardTooLarge(const std::string& msg) : Error(msg) {}
};

struct GameOver : Error {
    explicit GameOver(const std::string& msg) : Error(msg) {}
};

struct SyntaxError : Error {
    SyntaxError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct InfeasibleSpec : Error {
    explicit InfeasibleSpec(const std::string& msg) : Error(msg) {}
};

struct InvalidBudget : Error {
    explicit InvalidBudget(const std::string& msg) : Error(msg) {}
};

struct NoSolverApplicable : Error {
    explicit NoSolverApplicable(const std::string& msg) : Error(msg) {}
};

}  // namespace ppg
