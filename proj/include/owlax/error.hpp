#pragma once

#include <stdexcept>
#include <string>

namespace owlax {

/// Base for every failure the library reports by exception. `code()` is one of
/// the stable upper-case identifiers (PARSE_ERROR, UNKNOWN_CLASS, ...) that the
/// CLI and the HTTP service surface verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace owlax
