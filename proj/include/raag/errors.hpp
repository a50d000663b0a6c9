#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Malformed input values: unknown labels, duplicate vertices, empty graph
/// where a nonempty one is required, and similar.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition does not hold. The message names the
/// violated condition.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input could not be parsed. Carries the 1-based line number of the
/// offending line; what() renders as "<reason> at line <n>".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& reason, int line)
        : std::runtime_error(reason + " at line " + std::to_string(line)), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace raag
