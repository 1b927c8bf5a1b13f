#include "owlax/session.hpp"

#include <algorithm>
#include <set>

#include "owlax/syntax.hpp"

namespace owlax {

namespace {

std::string join(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids)
        out += (out.empty() ? "" : ", ") + id;
    return out;
}

}  // namespace

const ReviewEntry* ReviewList::find(std::string_view id) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const ReviewEntry& e) { return e.candidate.id == id; });
    return it == entries.end() ? nullptr : &*it;
}

UnknownCandidateIds::UnknownCandidateIds(std::vector<std::string> ids)
    : Error("UNKNOWN_CANDIDATE_ID", "unknown candidate id(s): " + join(ids)), ids_(std::move(ids)) {}

ReviewList merge_existing(const std::vector<CandidateAxiom>& candidates, const Ontology& o) {
    ReviewList review;
    Ontology matched;
    for (const auto& c : candidates) {
        ReviewEntry entry{c, render_manchester(c.axiom, o.prefixes()), false};
        if (o.contains(c.axiom)) {
            entry.candidate.status = CandidateStatus::Existing;
            entry.accept = true;
            matched.add(c.axiom);
        } else {
            entry.candidate.status = CandidateStatus::New;
        }
        review.entries.push_back(std::move(entry));
    }

    std::size_t index = 0;
    for (const auto& axiom : o.axioms()) {
        if (matched.contains(axiom))
            continue;
        CandidateAxiom c{"ont#" + std::to_string(index++), axiom, std::nullopt, {}, CandidateStatus::Existing};
        review.entries.push_back({std::move(c), render_manchester(axiom, o.prefixes()), true});
    }
    return review;
}

Ontology integrate(const ReviewList& review, const Ontology& o) {
    Ontology result = o;
    for (const auto& e : review.entries)
        if (!e.accept && e.candidate.status == CandidateStatus::Existing)
            result.remove(e.candidate.axiom);
    for (const auto& e : review.entries)
        if (e.accept)
            result.add(e.candidate.axiom);
    return result;
}

void declare_entities(const Diagram& d, Ontology& o) {
    const auto inventory = entities_of(d);
    for (const auto& n : inventory.classes)
        o.declare({EntityKind::Class, n});
    for (const auto& n : inventory.object_properties)
        o.declare({EntityKind::ObjectProperty, n});
    for (const auto& n : inventory.data_properties)
        o.declare({EntityKind::DataProperty, n});
    for (const auto& n : inventory.individuals)
        o.declare({EntityKind::NamedIndividual, n});
}

ReviewList apply_selection(const ReviewList& review, const std::map<std::string, bool>& decisions) {
    std::set<std::string> known;
    for (const auto& e : review.entries)
        known.insert(e.candidate.id);
    std::vector<std::string> unknown;
    for (const auto& [id, accept] : decisions)
        if (!known.contains(id))
            unknown.push_back(id);
    if (!unknown.empty())
        throw UnknownCandidateIds(std::move(unknown));

    ReviewList out = review;
    for (auto& e : out.entries)
        if (auto it = decisions.find(e.candidate.id); it != decisions.end())
            e.accept = it->second;
    return out;
}

}  // namespace owlax
