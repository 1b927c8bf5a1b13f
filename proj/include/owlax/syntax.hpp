#pragma once

#include <string>
#include <string_view>

#include "owlax/axiom.hpp"
#include "owlax/error.hpp"
#include "owlax/ontology.hpp"

namespace owlax {

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("PARSE_ERROR", std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnsupportedConstruct : public Error {
public:
    UnsupportedConstruct(std::string construct, std::size_t line)
        : Error("UNSUPPORTED_CONSTRUCT", construct + (line ? " (line " + std::to_string(line) + ")" : std::string())
                                                        + " is outside the supported OWL fragment"),
          construct_(std::move(construct)), line_(line) {}

    const std::string& construct() const { return construct_; }
    std::size_t line() const { return line_; }

private:
    std::string construct_;
    std::size_t line_;
};

std::string entity_to_iri(const Entity& e, const PrefixEnvironment& env);

// Manchester syntax, display only.
std::string render_manchester(const Axiom& a, const PrefixEnvironment& env = {});
std::string render_manchester(const ClassExpression& c, const PrefixEnvironment& env = {});

// Functional-style syntax. Entity names in the default namespace render as `:name`.
std::string to_functional(const Axiom& a);
std::string to_functional(const ClassExpression& c);
std::string render_functional(const Ontology& o);

Ontology parse_functional(std::string_view document);

/// Parses one axiom as it appears on a line of a rendered document (the form
/// stored in review files). Prefixed names resolve against `env`.
Axiom parse_functional_axiom(std::string_view text, const PrefixEnvironment& env = {});

}  // namespace owlax
