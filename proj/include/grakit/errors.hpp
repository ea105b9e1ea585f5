#pragma once

#include <stdexcept>
#include <string>

namespace grakit {

// Bad user input: malformed session text, invalid parameters, semantic
// violations (inhomogeneous generator, even characteristic, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A degree-capped Groebner basis was asked a question it cannot answer.
class incomplete_basis_error : public std::runtime_error {
public:
    explicit incomplete_basis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Wall-clock or matrix-size budget exceeded; carries how far we got.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& msg, int completed_prefix)
        : std::runtime_error(msg), completed_prefix(completed_prefix) {}
    int completed_prefix;
};

// Unsupported mathematical situation (characteristic 2 deviations).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure: indicates a bug, never a user mistake.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace grakit
