#pragma once

#include <stdexcept>
#include <string>

namespace argdial {

// Error taxonomy shared by the whole library. The C API turns these into
// status codes and the CLI turns them into exit codes, so every failure path
// below must stay distinguishable.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text: APX, TGF, dialogue files, JSON documents.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ", col " +
                               std::to_string(column) + ": " + what
                         : what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Violated precondition or cross-reference: unknown argument, universe
// mismatch, invalid context wiring, and similar caller mistakes.
class DomainError : public Error {
public:
    using Error::Error;
};

// Request exceeds a configured enumeration limit (oracle size, atlas size).
class CapacityError : public Error {
public:
    using Error::Error;
};

// An event cascade ran past the per-cascade step budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Simultaneously selected events carry contradictory effects. With a sound
// priority table this is unreachable; reaching it means the table is broken.
class ConflictError : public Error {
public:
    using Error::Error;
};

// Internal consistency violation surfaced to the caller instead of being
// papered over (for example a state that labels an argument both ways).
class IntegrityError : public Error {
public:
    using Error::Error;
};

}  // namespace argdial
