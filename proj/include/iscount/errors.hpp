#pragma once

#include <stdexcept>
#include <string>

namespace iscount {

// Malformed user input: unreadable files, bad graph/potential syntax,
// out-of-range CLI parameters. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold (caller bug).
struct precondition_error : std::logic_error {
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// An invariant the implementation relies on failed (library bug).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace iscount
