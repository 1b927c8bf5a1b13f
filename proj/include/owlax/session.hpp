#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owlax/diagram.hpp"
#include "owlax/generator.hpp"
#include "owlax/ontology.hpp"

namespace owlax {

struct ReviewEntry {
    CandidateAxiom candidate;
    std::string manchester;
    bool accept = false;
};

struct ReviewList {
    std::vector<ReviewEntry> entries;

    const ReviewEntry* find(std::string_view id) const;
};

struct SessionState {
    Diagram diagram;
    Ontology ontology;
    std::optional<ReviewList> last_review;
};

class UnknownCandidateIds : public Error {
public:
    explicit UnknownCandidateIds(std::vector<std::string> ids);
    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::vector<std::string> ids_;
};

/// Marks candidates already in `o` as Existing (checked) and appends the
/// ontology's remaining axioms, in canonical order, as `ont#<i>` entries.
ReviewList merge_existing(const std::vector<CandidateAxiom>& candidates, const Ontology& o);

/// Adds every accepted axiom and drops every Existing axiom left unchecked.
Ontology integrate(const ReviewList& review, const Ontology& o);

/// Declares every class, property and individual named in the diagram.
void declare_entities(const Diagram& d, Ontology& o);

/// Throws UnknownCandidateIds listing every id absent from `review`.
ReviewList apply_selection(const ReviewList& review, const std::map<std::string, bool>& decisions);

/// Review file: {"entries":[{"id","axiom","manchester","schema","status","accept"}]}.
/// The functional-syntax axiom string is authoritative when loading.
std::string review_to_json(const ReviewList& review);
ReviewList review_from_json(std::string_view text, const PrefixEnvironment& env = {});

class ReviewFormatError : public Error {
public:
    explicit ReviewFormatError(const std::string& message) : Error("MALFORMED_REVIEW", message) {}
};

}  // namespace owlax
