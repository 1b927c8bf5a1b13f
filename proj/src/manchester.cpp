#include <type_traits>

#include "owlax/syntax.hpp"

namespace owlax {

namespace {

std::string datatype_name(const std::string& name) {
    if (!name.empty() && name.front() == '<')
        return name;
    return "xsd:" + name;
}

std::string quote(const std::string& lexical) {
    std::string out = "\"";
    for (char c : lexical) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

std::string literal(const Literal& l) { return quote(l.lexical) + "^^" + datatype_name(l.datatype); }

std::string property(const ObjectPropertyExpr& p) { return p.inverse ? "inverse (" + p.name + ")" : p.name; }

std::string data_range(const DataRange& r, bool as_value) {
    if (auto* n = std::get_if<NamedDatatype>(&r))
        return datatype_name(n->name);
    if (std::holds_alternative<TopDatatype>(r))
        return "rdfs:Literal";
    const auto& lit = std::get<DataOneOf>(r).value;
    return as_value ? literal(lit) : "{" + literal(lit) + "}";
}

// Fillers stay atomic so no grouping parentheses are ever needed.
std::string filler(const ClassExpression& c) {
    if (auto* n = c.as<NamedClass>())
        return n->name;
    if (c.as<Thing>())
        return "owl:Thing";
    if (auto* o = c.as<ObjectOneOf>())
        return "{" + o->individual + "}";
    throw UnsupportedConstruct("nested class expression restriction", 0);
}

std::string expression(const ClassExpression& c) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NamedClass>) {
                return node.name;
            } else if constexpr (std::is_same_v<T, Thing>) {
                return "owl:Thing";
            } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
                return "{" + node.individual + "}";
            } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom>) {
                if (auto* o = node.filler->template as<ObjectOneOf>())
                    return property(node.property) + " value " + o->individual;
                return property(node.property) + " some " + filler(*node.filler);
            } else if constexpr (std::is_same_v<T, ObjectAllValuesFrom>) {
                return property(node.property) + " only " + filler(*node.filler);
            } else if constexpr (std::is_same_v<T, ObjectMaxCardinality>) {
                return property(node.property) + " max " + std::to_string(node.cardinality) + " " +
                       filler(*node.filler);
            } else if constexpr (std::is_same_v<T, DataSomeValuesFrom>) {
                if (std::holds_alternative<DataOneOf>(node.range))
                    return node.property + " value " + data_range(node.range, true);
                return node.property + " some " + data_range(node.range, false);
            } else if constexpr (std::is_same_v<T, DataAllValuesFrom>) {
                return node.property + " only " + data_range(node.range, false);
            } else {
                static_assert(std::is_same_v<T, DataMaxCardinality>);
                return node.property + " max " + std::to_string(node.cardinality) + " " +
                       data_range(node.range, false);
            }
        },
        c.node());
}

}  // namespace

std::string render_manchester(const ClassExpression& c, const PrefixEnvironment&) { return expression(c); }

std::string render_manchester(const Axiom& a, const PrefixEnvironment&) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SubClassOf>)
                return expression(node.sub) + " SubClassOf " + expression(node.sup);
            else if constexpr (std::is_same_v<T, DisjointClasses>)
                return node.first() + " DisjointWith " + node.second();
            else
                return node.individual + " Type " + node.cls;
        },
        a.node());
}

}  // namespace owlax
