#pragma once

#include <stdexcept>
#include <string>

namespace ocd {

// Malformed or inconsistent input (bad edges, bad files, violated preconditions).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure in one of the text formats; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An exhaustive search was asked to run beyond its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ocd
