#pragma once

#include <stdexcept>
#include <string>

namespace utd {

/// Malformed input text (diagram, series or matrix files). Carries the
/// source location so the CLI can report `file:line: message`.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& msg)
        : std::runtime_error(file.empty() ? msg
                                          : file + ":" + std::to_string(line) + ": " + msg),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// Structurally invalid diagram or series (bad valence, disconnected input,
/// dangling slot, color set mismatch, ...).
class InvalidDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (same-color struts where the
/// pairing requires none, struts on both sides, singular linking matrix,
/// non-primitive input to exp, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace utd
