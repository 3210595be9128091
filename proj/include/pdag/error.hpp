#ifndef PDAG_ERROR_HPP
#define PDAG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdag {

// Caller violated a documented precondition (dead vertex, bad id, guard exceeded).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The input graph does not satisfy what the operation assumes, e.g. a
// non-extendable PDAG handed to a maximal-orientation routine.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed edge-list or suite text. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pdag

#endif  // PDAG_ERROR_HPP
