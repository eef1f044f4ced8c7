#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A handle was passed to a universe that did not create it.
class ForeignHandleError : public Error {
public:
    using Error::Error;
};

/// A configured size/depth guard was exceeded.
class LimitError : public Error {
public:
    using Error::Error;
};

/// A presentation graph contains a cycle reachable from its root.
class CyclicError : public Error {
public:
    CyclicError(std::vector<std::size_t> cycle);

    /// Vertices of the offending cycle, in edge order; the first vertex is
    /// not repeated at the end.
    const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::size_t> cycle_;
};

/// Which axiom of an order structure failed validation.
enum class Axiom { Shape, Wellfoundedness, Extensionality, Transitivity };

const char* to_string(Axiom a) noexcept;

/// Validation failure of an ordinal or mewo, with a witness.
///
/// Witness layout depends on the axiom: the cycle for wellfoundedness, the
/// pair (x, y) for extensionality, the triple (x, y, z) for transitivity.
class ValidationError : public Error {
public:
    ValidationError(Axiom axiom, std::vector<std::size_t> witness, const std::string& what);

    Axiom axiom() const noexcept { return axiom_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    Axiom axiom_;
    std::vector<std::size_t> witness_;
};

class NotAnOrdinalError : public Error {
public:
    using Error::Error;
};

} // namespace hfkit

namespace hfkit {

/// Syntax error with a 1-based source position and the set of tokens that
/// would have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

} // namespace hfkit
