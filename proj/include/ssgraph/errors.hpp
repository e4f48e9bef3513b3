#pragma once

#include <stdexcept>
#include <string>

namespace ssgraph {

// Malformed input text (modular polynomial files, cached JSON).
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Input data that parses but fails a stated invariant of its type.
class validation_error : public std::runtime_error {
public:
    validation_error(const std::string& invariant, const std::string& what)
        : std::runtime_error("validation failed [" + invariant + "]: " + what),
          invariant_(invariant) {}

    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

// A mathematical identity that must hold for correct data has failed.
// Signals corrupted coefficient data or an internal bug, never bad usage.
class invariant_violation : public std::runtime_error {
public:
    invariant_violation(const std::string& invariant, const std::string& what)
        : std::runtime_error("invariant violated [" + invariant + "]: " + what),
          invariant_(invariant) {}

    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

} // namespace ssgraph
