#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace moricone {

// Domain violations carry a stable slug so callers (and the CLI exit-code
// mapping) can branch on the kind of failure without parsing prose.
class DomainError : public std::domain_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::domain_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed textual input (rationals, class specs, config files).
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string code, const std::string& detail)
        : std::invalid_argument(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace moricone
