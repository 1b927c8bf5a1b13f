#include "owlax/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

namespace owlax {

namespace {

constexpr std::array<std::string_view, 9> kXsdDatatypes = {
    "string", "integer", "decimal", "float", "double", "boolean", "dateTime", "date", "anyURI"};

struct Configuration {
    NodeKind source;
    EdgeKind edge;
    NodeKind target;
};

constexpr std::array<Configuration, 6> kLegalConfigurations = {{
    {NodeKind::Class, EdgeKind::ObjectProperty, NodeKind::Class},
    {NodeKind::Class, EdgeKind::ObjectProperty, NodeKind::Individual},
    {NodeKind::Class, EdgeKind::DataProperty, NodeKind::Datatype},
    {NodeKind::Class, EdgeKind::DataProperty, NodeKind::Literal},
    {NodeKind::Individual, EdgeKind::Type, NodeKind::Class},
    {NodeKind::Class, EdgeKind::SubClassOf, NodeKind::Class},
}};

bool is_legal(NodeKind source, EdgeKind edge, NodeKind target) {
    return std::any_of(kLegalConfigurations.begin(), kLegalConfigurations.end(), [&](const Configuration& c) {
        return c.source == source && c.edge == edge && c.target == target;
    });
}

bool is_property_edge(EdgeKind kind) {
    return kind == EdgeKind::ObjectProperty || kind == EdgeKind::DataProperty;
}

bool is_absolute_iri(std::string_view s) {
    // scheme ":" rest, scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." )
    auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == s.size())
        return false;
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    if (!is_alpha(s[0]))
        return false;
    for (std::size_t i = 1; i < colon; ++i) {
        char c = s[i];
        if (!is_alpha(c) && !(c >= '0' && c <= '9') && c != '+' && c != '-' && c != '.')
            return false;
    }
    for (char c : s) {
        if (c == '<' || c == '>' || c == '"' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
            c == '{' || c == '}' || c == '|' || c == '\\' || c == '^' || c == '`')
            return false;
    }
    return true;
}

class FindingSink {
public:
    void error(std::string code, std::string element, std::string message) {
        report_.errors.push_back({std::move(code), std::move(element), std::move(message)});
    }
    void warning(std::string code, std::string element, std::string message) {
        report_.warnings.push_back({std::move(code), std::move(element), std::move(message)});
    }

    ValidationReport finish() {
        auto by_element = [](const Finding& a, const Finding& b) {
            return std::tie(a.element, a.code, a.message) < std::tie(b.element, b.code, b.message);
        };
        std::sort(report_.errors.begin(), report_.errors.end(), by_element);
        std::sort(report_.warnings.begin(), report_.warnings.end(), by_element);
        return std::move(report_);
    }

private:
    ValidationReport report_;
};

void check_node(const Node& n, FindingSink& sink) {
    const std::string where = n.id.empty() ? "-" : n.id;
    if (n.id.empty())
        sink.error("BAD_ID", where, "node id must not be empty");

    switch (n.kind) {
    case NodeKind::Class:
    case NodeKind::Individual:
        if (!is_identifier(n.label))
            sink.error("BAD_NAME", where,
                       std::string(to_string(n.kind)) + " label '" + n.label +
                           "' does not match [A-Za-z_][A-Za-z0-9_.-]*");
        break;
    case NodeKind::Datatype:
        if (!is_supported_datatype(n.label))
            sink.error("BAD_DATATYPE", where, "unsupported datatype '" + n.label + "'");
        break;
    case NodeKind::Literal:
        if (n.label.empty())
            sink.error("BAD_NAME", where, "literal label must not be empty");
        if (!n.literal_datatype)
            sink.error("MISSING_DATATYPE", where, "literal node requires a literalDatatype");
        else if (!is_supported_datatype(*n.literal_datatype))
            sink.error("BAD_DATATYPE", where, "unsupported literal datatype '" + *n.literal_datatype + "'");
        break;
    }
    if (n.kind != NodeKind::Literal && n.literal_datatype)
        sink.error("UNEXPECTED_DATATYPE", where, "only literal nodes carry a literalDatatype");
}

}  // namespace

std::string_view to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Class: return "class";
    case NodeKind::Datatype: return "datatype";
    case NodeKind::Individual: return "individual";
    case NodeKind::Literal: return "literal";
    }
    return "?";
}

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
    case EdgeKind::ObjectProperty: return "objectProperty";
    case EdgeKind::DataProperty: return "dataProperty";
    case EdgeKind::Type: return "type";
    case EdgeKind::SubClassOf: return "subClassOf";
    }
    return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s) {
    for (auto k : {NodeKind::Class, NodeKind::Datatype, NodeKind::Individual, NodeKind::Literal})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view s) {
    for (auto k : {EdgeKind::ObjectProperty, EdgeKind::DataProperty, EdgeKind::Type, EdgeKind::SubClassOf})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

const Node* Diagram::find_node(std::string_view id) const {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.id == id; });
    return it == nodes.end() ? nullptr : &*it;
}

bool is_identifier(std::string_view s) {
    if (s.empty())
        return false;
    auto head = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!head(s[0]))
        return false;
    return std::all_of(s.begin() + 1, s.end(), [&](char c) {
        return head(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
    });
}

bool is_supported_datatype(std::string_view s) {
    if (std::find(kXsdDatatypes.begin(), kXsdDatatypes.end(), s) != kXsdDatatypes.end())
        return true;
    return s.size() > 2 && s.front() == '<' && s.back() == '>' && is_absolute_iri(s.substr(1, s.size() - 2));
}

ValidationReport validate_diagram(const Diagram& d) {
    FindingSink sink;

    if (d.nodes.empty())
        sink.error("EMPTY_DIAGRAM", "-", "diagram must contain at least one node");

    std::map<std::string, int> node_ids;
    for (const auto& n : d.nodes) {
        check_node(n, sink);
        if (!n.id.empty())
            ++node_ids[n.id];
    }
    for (const auto& [id, count] : node_ids)
        if (count > 1)
            sink.error("DUPLICATE_ID", id, "node id used " + std::to_string(count) + " times");

    // (kind, label, literal datatype) -> node ids
    std::map<std::tuple<NodeKind, std::string, std::string>, std::vector<std::string>> entities;
    for (const auto& n : d.nodes)
        entities[{n.kind, n.label, n.literal_datatype.value_or("")}].push_back(n.id);
    for (auto& [key, ids] : entities) {
        if (ids.size() < 2)
            continue;
        std::sort(ids.begin(), ids.end());
        std::string joined;
        for (const auto& id : ids)
            joined += (joined.empty() ? "" : ", ") + id;
        sink.warning("DUPLICATE_ENTITY", ids.front(),
                     std::string(to_string(std::get<0>(key))) + " '" + std::get<1>(key) +
                         "' appears on nodes " + joined + "; they denote the same entity");
    }

    std::map<std::string, int> edge_ids;
    std::map<std::string, std::set<EdgeKind>> property_uses;
    std::map<std::string, std::string> property_first_edge;
    for (const auto& e : d.edges) {
        const std::string where = e.id.empty() ? "-" : e.id;
        if (e.id.empty())
            sink.error("BAD_ID", where, "edge id must not be empty");
        else
            ++edge_ids[e.id];

        if (is_property_edge(e.kind)) {
            if (!e.property_label)
                sink.error("BAD_NAME", where, std::string(to_string(e.kind)) + " edge requires a property label");
            else if (!is_identifier(*e.property_label))
                sink.error("BAD_NAME", where,
                           "property label '" + *e.property_label + "' does not match [A-Za-z_][A-Za-z0-9_.-]*");
            else {
                property_uses[*e.property_label].insert(e.kind);
                auto [it, inserted] = property_first_edge.emplace(*e.property_label, where);
                if (!inserted && where < it->second)
                    it->second = where;
            }
        } else if (e.property_label) {
            sink.error("UNEXPECTED_PROPERTY", where,
                       std::string(to_string(e.kind)) + " edge must not carry a property label");
        }

        const Node* source = d.find_node(e.source);
        const Node* target = d.find_node(e.target);
        if (!source || !target) {
            std::string missing;
            if (!source)
                missing = "source '" + e.source + "'";
            if (!target)
                missing += std::string(missing.empty() ? "" : " and ") + "target '" + e.target + "'";
            sink.error("DANGLING_EDGE", where, "edge references missing " + missing);
            continue;
        }
        if (!is_legal(source->kind, e.kind, target->kind))
            sink.error("ILLEGAL_CONFIGURATION", where,
                       std::string(to_string(source->kind)) + " -" + std::string(to_string(e.kind)) + "-> " +
                           std::string(to_string(target->kind)) + " is not an allowed configuration");
    }
    for (const auto& [id, count] : edge_ids)
        if (count > 1)
            sink.error("DUPLICATE_ID", id, "edge id used " + std::to_string(count) + " times");
    for (const auto& [label, kinds] : property_uses)
        if (kinds.size() > 1)
            sink.error("PROPERTY_KIND_CONFLICT", property_first_edge[label],
                       "property '" + label + "' is used both as object and data property");

    return sink.finish();
}

bool subclass_reachable(const Diagram& d, std::string_view from, std::string_view to) {
    std::set<std::string, std::less<>> classes;
    for (const auto& n : d.nodes)
        if (n.kind == NodeKind::Class)
            classes.insert(n.label);
    for (auto label : {from, to})
        if (!classes.contains(label))
            throw Error("UNKNOWN_CLASS", "'" + std::string(label) + "' is not a class in the diagram");
    if (from == to)
        return true;

    std::map<std::string, std::vector<std::string>, std::less<>> successors;
    for (const auto& e : d.edges) {
        if (e.kind != EdgeKind::SubClassOf)
            continue;
        const Node* s = d.find_node(e.source);
        const Node* t = d.find_node(e.target);
        if (s && t && s->kind == NodeKind::Class && t->kind == NodeKind::Class)
            successors[s->label].push_back(t->label);
    }

    std::set<std::string, std::less<>> seen{std::string(from)};
    std::vector<std::string> stack{std::string(from)};
    while (!stack.empty()) {
        auto current = std::move(stack.back());
        stack.pop_back();
        auto it = successors.find(current);
        if (it == successors.end())
            continue;
        for (const auto& next : it->second) {
            if (next == to)
                return true;
            if (seen.insert(next).second)
                stack.push_back(next);
        }
    }
    return false;
}

EntityInventory entities_of(const Diagram& d) {
    std::set<std::string> classes, object_properties, data_properties, individuals, datatypes;
    for (const auto& n : d.nodes) {
        switch (n.kind) {
        case NodeKind::Class: classes.insert(n.label); break;
        case NodeKind::Individual: individuals.insert(n.label); break;
        case NodeKind::Datatype: datatypes.insert(n.label); break;
        case NodeKind::Literal:
            if (n.literal_datatype)
                datatypes.insert(*n.literal_datatype);
            break;
        }
    }
    for (const auto& e : d.edges) {
        if (!e.property_label)
            continue;
        if (e.kind == EdgeKind::ObjectProperty)
            object_properties.insert(*e.property_label);
        else if (e.kind == EdgeKind::DataProperty)
            data_properties.insert(*e.property_label);
    }
    auto to_vector = [](const std::set<std::string>& s) { return std::vector<std::string>(s.begin(), s.end()); };
    return {to_vector(classes), to_vector(object_properties), to_vector(data_properties), to_vector(individuals),
            to_vector(datatypes)};
}

}  // namespace owlax
