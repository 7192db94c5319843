#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Raised when a diagram fails edge consistency or has a pair of pipes
// crossing twice.
class invalid_diagram : public std::runtime_error {
public:
    explicit invalid_diagram(const std::string& what)
        : std::runtime_error("invalid diagram: " + what) {}
};

class invalid_sequence : public std::runtime_error {
public:
    explicit invalid_sequence(const std::string& what)
        : std::runtime_error("invalid compatible sequence: " + what) {}
};

class empty_diagram : public std::runtime_error {
public:
    explicit empty_diagram(const std::string& what)
        : std::runtime_error("empty diagram: " + what) {}
};

// An illegal droop / swap / min-droop configuration.
class move_error : public std::runtime_error {
public:
    explicit move_error(const std::string& what)
        : std::runtime_error("illegal move: " + what) {}
};

using argument_error = std::invalid_argument;

// Broken internal invariant; never expected on valid input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what)
        : std::logic_error("internal error: " + what) {}
};

} // namespace schubert
