// ============================================================================
// errors.hpp — error types surfaced by parsing, abstraction, and evaluation
// ============================================================================
//
// Every rejection of user input is an exception derived from Error, so the
// CLI can catch one type, render a message, and exit with the right code.
// Resource exhaustion in the engine is *not* an exception: the engine returns
// an INDETERMINATE verdict instead (see engine.hpp).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reqlint {

// Base class for all reqlint-specific errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Malformed textual input (requirements file or neutral LTL syntax).
// Carries the position and the set of tokens that would have been accepted.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string found,
               std::vector<std::string> expected)
        : Error(format(line, column, found, expected)),
          line_(line),
          column_(column),
          found_(std::move(found)),
          expected_(std::move(expected)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& found() const { return found_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t line, std::size_t column,
                              const std::string& found,
                              const std::vector<std::string>& expected) {
        std::string msg = "parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(column);
        if (!expected.empty()) {
            msg += ": expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
                msg += expected[i];
            }
        }
        if (!found.empty()) msg += ", found " + found;
        return msg;
    }

    std::size_t line_;
    std::size_t column_;
    std::string found_;
    std::vector<std::string> expected_;
};

// Two requirements share the same identifier.
class DuplicateIdError : public Error {
public:
    DuplicateIdError(std::string id, std::size_t line)
        : Error("duplicate requirement id '" + id + "' at line " + std::to_string(line)),
          id_(std::move(id)),
          line_(line) {}

    const std::string& id() const { return id_; }
    std::size_t line() const { return line_; }

private:
    std::string id_;
    std::size_t line_;
};

// A (scope, pattern) combination outside the implemented mapping table.
class UnsupportedCombinationError : public Error {
public:
    explicit UnsupportedCombinationError(const std::string& what_arg) : Error(what_arg) {}
};

// The same name is used both as a boolean proposition and as a numeric
// variable somewhere in the conjoined specification.
class MixedUseError : public Error {
public:
    explicit MixedUseError(std::string name)
        : Error("name '" + name + "' is used both as a boolean proposition and as a "
                "numeric variable"),
          name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// A trace state fails to assign a proposition (or numeric variable) that the
// evaluated formula mentions.
class UncoveredPropositionError : public Error {
public:
    explicit UncoveredPropositionError(std::string name)
        : Error("trace state does not assign '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Witness concretization found a state whose region propositions for some
// variable do not single out exactly one region.
class NoActiveRegionError : public Error {
public:
    NoActiveRegionError(std::string var, std::size_t active_count)
        : Error("witness state has " + std::to_string(active_count) +
                " active regions for variable '" + var + "' (expected exactly 1)"),
          var_(std::move(var)) {}

    const std::string& variable() const { return var_; }

private:
    std::string var_;
};

} // namespace reqlint
