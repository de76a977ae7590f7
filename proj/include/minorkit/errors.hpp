#pragma once

#include <stdexcept>
#include <string>

namespace minorkit {

// Search/enumeration budget exhausted. Distinct from a negative answer.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (graph6, JSON, td files).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation outside the implemented class of inputs.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A required plug-in or constant was not provided.
class configuration_error : public std::runtime_error {
public:
    explicit configuration_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency assertion failed. Must never fire on legal input.
class construction_bug : public std::logic_error {
public:
    explicit construction_bug(const std::string& what) : std::logic_error(what) {}
};

}  // namespace minorkit
