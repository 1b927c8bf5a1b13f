#include "owlax/generator.hpp"

#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include "owlax/syntax.hpp"

namespace owlax {

namespace {

constexpr std::array<std::string_view, 13> kSchemaNames = {"DOM",  "SDOM", "RAN",  "SRAN", "EX",   "IEX", "FUN",
                                                           "QFUN", "IFUN", "QIFUN", "TYPE", "SUBC", "DISJ"};

struct Instantiation {
    SchemaCode schema;
    Axiom axiom;
};

std::vector<Instantiation> object_to_class(const std::string& a, const std::string& r, const std::string& b) {
    using namespace ce;
    return {
        {SchemaCode::DOM, SubClassOf{some(prop(r), thing()), named(a)}},
        {SchemaCode::SDOM, SubClassOf{some(prop(r), named(b)), named(a)}},
        {SchemaCode::RAN, SubClassOf{thing(), only(prop(r), named(b))}},
        {SchemaCode::SRAN, SubClassOf{named(a), only(prop(r), named(b))}},
        {SchemaCode::EX, SubClassOf{named(a), some(prop(r), named(b))}},
        {SchemaCode::IEX, SubClassOf{named(b), some(inverse(r), named(a))}},
        {SchemaCode::FUN, SubClassOf{named(a), max(1, prop(r), thing())}},
        {SchemaCode::QFUN, SubClassOf{named(a), max(1, prop(r), named(b))}},
        {SchemaCode::IFUN, SubClassOf{named(b), max(1, inverse(r), thing())}},
        {SchemaCode::QIFUN, SubClassOf{named(b), max(1, inverse(r), named(a))}},
    };
}

std::vector<Instantiation> object_to_individual(const std::string& a, const std::string& r, const std::string& c) {
    using namespace ce;
    return {
        {SchemaCode::DOM, SubClassOf{some(prop(r), thing()), named(a)}},
        {SchemaCode::SDOM, SubClassOf{some(prop(r), nominal(c)), named(a)}},
        {SchemaCode::RAN, SubClassOf{thing(), only(prop(r), nominal(c))}},
        {SchemaCode::SRAN, SubClassOf{named(a), only(prop(r), nominal(c))}},
        {SchemaCode::EX, SubClassOf{named(a), some(prop(r), nominal(c))}},
        {SchemaCode::FUN, SubClassOf{named(a), max(1, prop(r), thing())}},
        {SchemaCode::QFUN, SubClassOf{named(a), max(1, prop(r), nominal(c))}},
    };
}

// Shared by datatype and literal targets; `filler` is M or {l}.
std::vector<Instantiation> data_edge(const std::string& a, const std::string& q, const DataRange& filler) {
    using namespace ce;
    return {
        {SchemaCode::DOM, SubClassOf{data_some(q, top_datatype()), named(a)}},
        {SchemaCode::SDOM, SubClassOf{data_some(q, filler), named(a)}},
        {SchemaCode::RAN, SubClassOf{thing(), data_only(q, filler)}},
        {SchemaCode::SRAN, SubClassOf{named(a), data_only(q, filler)}},
        {SchemaCode::EX, SubClassOf{named(a), data_some(q, filler)}},
        {SchemaCode::FUN, SubClassOf{named(a), data_max(1, q, top_datatype())}},
        {SchemaCode::QFUN, SubClassOf{named(a), data_max(1, q, filler)}},
    };
}

std::vector<Instantiation> instantiate(const Edge& e, const Node& source, const Node& target) {
    switch (e.kind) {
    case EdgeKind::ObjectProperty:
        if (target.kind == NodeKind::Class)
            return object_to_class(source.label, *e.property_label, target.label);
        return object_to_individual(source.label, *e.property_label, target.label);
    case EdgeKind::DataProperty:
        if (target.kind == NodeKind::Datatype)
            return data_edge(source.label, *e.property_label, ce::datatype(target.label));
        return data_edge(source.label, *e.property_label,
                         ce::data_nominal(Literal{target.label, *target.literal_datatype}));
    case EdgeKind::Type:
        return {{SchemaCode::TYPE, ClassAssertion{target.label, source.label}}};
    case EdgeKind::SubClassOf:
        return {{SchemaCode::SUBC, SubClassOf{ce::named(source.label), ce::named(target.label)}}};
    }
    return {};
}

/// Reachability over SubClassOf edges between class labels, computed once.
class SubclassClosure {
public:
    explicit SubclassClosure(const Diagram& d) {
        std::map<std::string, std::vector<std::string>> successors;
        for (const auto& e : d.edges) {
            if (e.kind != EdgeKind::SubClassOf)
                continue;
            successors[d.find_node(e.source)->label].push_back(d.find_node(e.target)->label);
        }
        for (const auto& [start, next] : successors) {
            auto& seen = reach_[start];
            std::vector<std::string> stack(next.begin(), next.end());
            while (!stack.empty()) {
                auto current = std::move(stack.back());
                stack.pop_back();
                if (!seen.insert(current).second)
                    continue;
                if (auto it = successors.find(current); it != successors.end())
                    stack.insert(stack.end(), it->second.begin(), it->second.end());
            }
        }
    }

    bool reachable(const std::string& from, const std::string& to) const {
        if (from == to)
            return true;
        auto it = reach_.find(from);
        return it != reach_.end() && it->second.contains(to);
    }

private:
    std::map<std::string, std::set<std::string>> reach_;
};

void require_valid(const Diagram& d) {
    auto report = validate_diagram(d);
    if (!report.valid())
        throw InvalidDiagram(std::move(report));
}

std::vector<std::pair<std::string, std::string>> disjoint_pairs(const Diagram& d) {
    const auto classes = entities_of(d).classes;  // sorted, unique
    const SubclassClosure closure(d);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (!closure.reachable(classes[i], classes[j]) && !closure.reachable(classes[j], classes[i]))
                pairs.emplace_back(classes[i], classes[j]);
    return pairs;
}

}  // namespace

std::string_view to_string(SchemaCode code) { return kSchemaNames[static_cast<std::size_t>(code)]; }

std::optional<SchemaCode> schema_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kSchemaNames.size(); ++i)
        if (kSchemaNames[i] == s)
            return static_cast<SchemaCode>(i);
    return std::nullopt;
}

InvalidDiagram::InvalidDiagram(ValidationReport report)
    : Error("INVALID_DIAGRAM", "diagram has " + std::to_string(report.errors.size()) + " validation error(s)"),
      report_(std::move(report)) {}

std::vector<CandidateAxiom> generate(const Diagram& d) {
    require_valid(d);

    std::vector<CandidateAxiom> out;
    std::unordered_set<std::string> seen;
    for (const auto& e : d.edges) {
        const Node& source = *d.find_node(e.source);
        const Node& target = *d.find_node(e.target);
        for (auto& inst : instantiate(e, source, target)) {
            if (!seen.insert(to_functional(inst.axiom)).second)
                continue;
            out.push_back(CandidateAxiom{e.id + "#" + std::string(to_string(inst.schema)), std::move(inst.axiom),
                                         inst.schema, {e.id}, CandidateStatus::New});
        }
    }
    for (auto& [a, b] : disjoint_pairs(d))
        out.push_back(CandidateAxiom{"disj#" + a + "#" + b, DisjointClasses{a, b}, SchemaCode::DISJ, {a, b},
                                     CandidateStatus::New});
    return out;
}

std::size_t candidate_count(const Diagram& d) {
    require_valid(d);

    // Each key identifies one distinct axiom: the schema plus exactly the
    // parameters its axiom mentions. Schemas never collide across families.
    std::set<std::vector<std::string>> keys;
    for (const auto& e : d.edges) {
        const Node& s = *d.find_node(e.source);
        const Node& t = *d.find_node(e.target);
        const std::string a = s.label;
        switch (e.kind) {
        case EdgeKind::ObjectProperty: {
            const std::string& r = *e.property_label;
            const bool to_class = t.kind == NodeKind::Class;
            const std::string f = (to_class ? "class:" : "ind:") + t.label;
            for (auto schema : {"DOM", "FUN"})
                keys.insert({"obj", schema, a, r});
            for (auto schema : {"SDOM", "SRAN", "EX", "QFUN"})
                keys.insert({"obj", schema, a, r, f});
            keys.insert({"obj", "RAN", r, f});
            if (to_class) {
                keys.insert({"obj", "IEX", t.label, r, a});
                keys.insert({"obj", "IFUN", t.label, r});
                keys.insert({"obj", "QIFUN", t.label, r, a});
            }
            break;
        }
        case EdgeKind::DataProperty: {
            const std::string& q = *e.property_label;
            const std::string f = t.kind == NodeKind::Datatype
                                      ? "dt:" + canonical_datatype(t.label)
                                      : "lit:" + canonical_datatype(*t.literal_datatype) + ":" + t.label;
            for (auto schema : {"DOM", "FUN"})
                keys.insert({"data", schema, a, q});
            for (auto schema : {"SDOM", "SRAN", "EX", "QFUN"})
                keys.insert({"data", schema, a, q, f});
            keys.insert({"data", "RAN", q, f});
            break;
        }
        case EdgeKind::Type: keys.insert({"TYPE", t.label, a}); break;
        case EdgeKind::SubClassOf: keys.insert({"SUBC", a, t.label}); break;
        }
    }
    return keys.size() + disjoint_pairs(d).size();
}

}  // namespace owlax
