#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "owlax/axiom.hpp"

namespace owlax {

inline constexpr std::string_view kDefaultBaseIri = "http://example.org/onto#";
inline constexpr std::string_view kOwlNamespace = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kRdfsNamespace = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";

/// The default `:` namespace plus the fixed owl:, rdfs: and xsd: prefixes.
class PrefixEnvironment {
public:
    PrefixEnvironment();
    /// Throws Error("BAD_BASE_IRI") unless `base_iri` is absolute and ends in '#' or '/'.
    explicit PrefixEnvironment(std::string base_iri);

    const std::string& base_iri() const { return base_iri_; }

    bool operator==(const PrefixEnvironment&) const = default;

private:
    std::string base_iri_;
};

/// A de-duplicated axiom set with explicit entity declarations. Iteration is
/// always in canonical order regardless of insertion order.
class Ontology {
public:
    Ontology() = default;
    explicit Ontology(PrefixEnvironment prefixes) : prefixes_(std::move(prefixes)) {}

    const PrefixEnvironment& prefixes() const { return prefixes_; }
    void set_prefixes(PrefixEnvironment prefixes) { prefixes_ = std::move(prefixes); }

    const std::optional<std::string>& ontology_iri() const { return ontology_iri_; }
    void set_ontology_iri(std::optional<std::string> iri) { ontology_iri_ = std::move(iri); }

    /// Returns false when a structurally equal axiom is already present.
    bool add(const Axiom& axiom);
    bool remove(const Axiom& axiom);
    bool contains(const Axiom& axiom) const;

    void declare(Entity entity);
    const std::set<Entity>& declarations() const { return declarations_; }

    std::vector<Axiom> axioms() const;
    std::size_t size() const { return axioms_.size(); }
    bool empty() const { return axioms_.empty(); }

    /// Declared entities plus the signature of every axiom, sorted by kind then name.
    std::set<Entity> entities() const;

    bool operator==(const Ontology& other) const;

private:
    using Key = std::pair<int, std::string>;

    PrefixEnvironment prefixes_;
    std::optional<std::string> ontology_iri_;
    std::map<Key, Axiom> axioms_;
    std::set<Entity> declarations_;
};

}  // namespace owlax
