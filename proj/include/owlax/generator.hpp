#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owlax/axiom.hpp"
#include "owlax/diagram.hpp"

namespace owlax {

enum class SchemaCode { DOM, SDOM, RAN, SRAN, EX, IEX, FUN, QFUN, IFUN, QIFUN, TYPE, SUBC, DISJ };

std::string_view to_string(SchemaCode code);
std::optional<SchemaCode> schema_from_string(std::string_view s);

enum class CandidateStatus { New, Existing };

struct CandidateAxiom {
    std::string id;
    Axiom axiom;
    // Empty for axioms that only come from an existing ontology.
    std::optional<SchemaCode> schema;
    // Edge id, or the two class labels of a disjointness pair.
    std::vector<std::string> provenance;
    CandidateStatus status = CandidateStatus::New;
};

/// Thrown by generate() when the diagram does not validate.
class InvalidDiagram : public Error {
public:
    explicit InvalidDiagram(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Candidate axioms for every edge (in edge order, schema order within an
/// edge), then disjointness for every unordered pair of classes not linked by a
/// SubClassOf path in either direction. Structural duplicates keep their first
/// occurrence.
std::vector<CandidateAxiom> generate(const Diagram& d);

/// Same value as generate(d).size() without building the candidates' text.
std::size_t candidate_count(const Diagram& d);

}  // namespace owlax
