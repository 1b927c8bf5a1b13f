#include "owlax/axiom.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "owlax/ontology.hpp"
#include "owlax/syntax.hpp"

namespace owlax {

std::string canonical_datatype(std::string_view name) {
    static const std::set<std::string_view> xsd = {"string", "integer", "decimal", "float", "double",
                                                   "boolean", "dateTime", "date", "anyURI"};
    if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
        auto iri = name.substr(1, name.size() - 2);
        if (iri.starts_with(kXsdNamespace)) {
            auto local = iri.substr(kXsdNamespace.size());
            if (xsd.contains(local))
                return std::string(local);
        }
    }
    return std::string(name);
}

namespace ce {
ClassExpression named(std::string name) { return NamedClass{std::move(name)}; }
ClassExpression thing() { return Thing{}; }
ClassExpression some(ObjectPropertyExpr p, ClassExpression filler) {
    return ObjectSomeValuesFrom{std::move(p), std::move(filler)};
}
ClassExpression only(ObjectPropertyExpr p, ClassExpression filler) {
    return ObjectAllValuesFrom{std::move(p), std::move(filler)};
}
ClassExpression max(unsigned n, ObjectPropertyExpr p, ClassExpression filler) {
    return ObjectMaxCardinality{n, std::move(p), std::move(filler)};
}
ClassExpression nominal(std::string individual) { return ObjectOneOf{std::move(individual)}; }
ClassExpression data_some(std::string q, DataRange range) { return DataSomeValuesFrom{std::move(q), std::move(range)}; }
ClassExpression data_only(std::string q, DataRange range) { return DataAllValuesFrom{std::move(q), std::move(range)}; }
ClassExpression data_max(unsigned n, std::string q, DataRange range) {
    return DataMaxCardinality{n, std::move(q), std::move(range)};
}
ObjectPropertyExpr prop(std::string name) { return {std::move(name), false}; }
ObjectPropertyExpr inverse(std::string name) { return {std::move(name), true}; }
DataRange datatype(std::string name) { return NamedDatatype{canonical_datatype(name)}; }
DataRange top_datatype() { return TopDatatype{}; }
DataRange data_nominal(Literal value) {
    value.datatype = canonical_datatype(value.datatype);
    return DataOneOf{std::move(value)};
}
}  // namespace ce

DisjointClasses::DisjointClasses(std::string a, std::string b) {
    if (b < a)
        std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
}

std::strong_ordering canonical_compare(const Axiom& a, const Axiom& b) {
    if (auto c = a.kind_rank() <=> b.kind_rank(); c != 0)
        return c;
    if (a == b)
        return std::strong_ordering::equal;
    return to_functional(a) <=> to_functional(b);
}

std::size_t AxiomHash::operator()(const Axiom& a) const { return std::hash<std::string>{}(to_functional(a)); }

namespace {

struct SignatureCollector {
    std::set<Entity>& out;

    void range(const DataRange& r) {
        if (auto* n = std::get_if<NamedDatatype>(&r))
            out.insert({EntityKind::Datatype, n->name});
        else if (auto* o = std::get_if<DataOneOf>(&r))
            out.insert({EntityKind::Datatype, o->value.datatype});
    }

    void expr(const ClassExpression& c) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, NamedClass>) {
                    out.insert({EntityKind::Class, node.name});
                } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
                    out.insert({EntityKind::NamedIndividual, node.individual});
                } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> || std::is_same_v<T, ObjectAllValuesFrom> ||
                                     std::is_same_v<T, ObjectMaxCardinality>) {
                    out.insert({EntityKind::ObjectProperty, node.property.name});
                    expr(*node.filler);
                } else if constexpr (std::is_same_v<T, DataSomeValuesFrom> || std::is_same_v<T, DataAllValuesFrom> ||
                                     std::is_same_v<T, DataMaxCardinality>) {
                    out.insert({EntityKind::DataProperty, node.property});
                    range(node.range);
                }
            },
            c.node());
    }
};

}  // namespace

std::vector<Entity> signature(const Axiom& a) {
    std::set<Entity> out;
    SignatureCollector collect{out};
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SubClassOf>) {
                collect.expr(node.sub);
                collect.expr(node.sup);
            } else if constexpr (std::is_same_v<T, DisjointClasses>) {
                out.insert({EntityKind::Class, node.first()});
                out.insert({EntityKind::Class, node.second()});
            } else {
                out.insert({EntityKind::Class, node.cls});
                out.insert({EntityKind::NamedIndividual, node.individual});
            }
        },
        a.node());
    return {out.begin(), out.end()};
}

}  // namespace owlax
