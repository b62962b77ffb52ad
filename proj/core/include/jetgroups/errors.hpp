#pragma once

#include <stdexcept>
#include <string>

namespace jetgroups {

// Bad arguments, malformed files, mismatched dimensions or orders.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A square matrix (or a group part) that has no inverse.
struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

// A matrix that should lie in the span of an algebra basis does not.
struct RepresentationError : std::domain_error {
    explicit RepresentationError(const std::string& what) : std::domain_error(what) {}
};

} // namespace jetgroups
