#include "owlax/ontology.hpp"

#include "owlax/error.hpp"
#include "owlax/syntax.hpp"

namespace owlax {

namespace {

bool is_absolute_iri(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0)
        return false;
    for (std::size_t i = 0; i < colon; ++i) {
        char c = s[i];
        bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        if (!alpha && (i == 0 || !((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.')))
            return false;
    }
    return s.find_first_of("<>\" \t\r\n{}|\\^`") == std::string_view::npos;
}

}  // namespace

PrefixEnvironment::PrefixEnvironment() : base_iri_(kDefaultBaseIri) {}

PrefixEnvironment::PrefixEnvironment(std::string base_iri) : base_iri_(std::move(base_iri)) {
    if (!is_absolute_iri(base_iri_) || !(base_iri_.ends_with('#') || base_iri_.ends_with('/')))
        throw Error("BAD_BASE_IRI", "base IRI '" + base_iri_ + "' must be absolute and end in '#' or '/'");
}

bool Ontology::add(const Axiom& axiom) {
    return axioms_.try_emplace(Key{axiom.kind_rank(), to_functional(axiom)}, axiom).second;
}

bool Ontology::remove(const Axiom& axiom) { return axioms_.erase(Key{axiom.kind_rank(), to_functional(axiom)}) > 0; }

bool Ontology::contains(const Axiom& axiom) const {
    return axioms_.contains(Key{axiom.kind_rank(), to_functional(axiom)});
}

void Ontology::declare(Entity entity) { declarations_.insert(std::move(entity)); }

std::vector<Axiom> Ontology::axioms() const {
    std::vector<Axiom> out;
    out.reserve(axioms_.size());
    for (const auto& [key, axiom] : axioms_)
        out.push_back(axiom);
    return out;
}

std::set<Entity> Ontology::entities() const {
    std::set<Entity> out = declarations_;
    for (const auto& [key, axiom] : axioms_)
        for (auto& e : signature(axiom))
            out.insert(std::move(e));
    return out;
}

bool Ontology::operator==(const Ontology& other) const {
    if (prefixes_ != other.prefixes_ || ontology_iri_ != other.ontology_iri_ || entities() != other.entities())
        return false;
    if (axioms_.size() != other.axioms_.size())
        return false;
    auto it = other.axioms_.begin();
    for (const auto& [key, axiom] : axioms_) {
        if (key != it->first || !(axiom == it->second))
            return false;
        ++it;
    }
    return true;
}

}  // namespace owlax
