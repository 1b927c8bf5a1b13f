#include <set>

#include <json.hpp>

#include "owlax/diagram.hpp"

namespace owlax {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& object, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : object.items())
        if (!allowed.contains(key))
            throw DiagramFormatError(where + ": unknown field '" + key + "'");
}

const json& require(const json& object, const std::string& key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end())
        throw DiagramFormatError(where + ": missing field '" + key + "'");
    return *it;
}

std::string require_string(const json& object, const std::string& key, const std::string& where) {
    const json& v = require(object, key, where);
    if (!v.is_string())
        throw DiagramFormatError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& object, const std::string& key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end())
        return std::nullopt;
    if (!it->is_string())
        throw DiagramFormatError(where + ": field '" + key + "' must be a string");
    return it->get<std::string>();
}

Node node_from_json(const json& j, std::size_t index) {
    const std::string where = "nodes[" + std::to_string(index) + "]";
    if (!j.is_object())
        throw DiagramFormatError(where + ": expected an object");
    reject_unknown_fields(j, {"id", "kind", "label", "literalDatatype", "x", "y"}, where);

    Node n;
    n.id = require_string(j, "id", where);
    const auto kind = require_string(j, "kind", where);
    auto parsed = node_kind_from_string(kind);
    if (!parsed)
        throw DiagramFormatError(where + ": field 'kind' has unknown value '" + kind +
                                 "' (expected class|datatype|individual|literal)");
    n.kind = *parsed;
    n.label = require_string(j, "label", where);
    n.literal_datatype = optional_string(j, "literalDatatype", where);

    const bool has_x = j.contains("x");
    const bool has_y = j.contains("y");
    if (has_x != has_y)
        throw DiagramFormatError(where + ": fields 'x' and 'y' must be given together");
    if (has_x) {
        if (!j["x"].is_number() || !j["y"].is_number())
            throw DiagramFormatError(where + ": fields 'x' and 'y' must be numbers");
        n.position = Position{j["x"].get<double>(), j["y"].get<double>()};
    }
    return n;
}

Edge edge_from_json(const json& j, std::size_t index) {
    const std::string where = "edges[" + std::to_string(index) + "]";
    if (!j.is_object())
        throw DiagramFormatError(where + ": expected an object");
    reject_unknown_fields(j, {"id", "kind", "property", "source", "target"}, where);

    Edge e;
    e.id = require_string(j, "id", where);
    const auto kind = require_string(j, "kind", where);
    auto parsed = edge_kind_from_string(kind);
    if (!parsed)
        throw DiagramFormatError(where + ": field 'kind' has unknown value '" + kind +
                                 "' (expected objectProperty|dataProperty|type|subClassOf)");
    e.kind = *parsed;
    e.property_label = optional_string(j, "property", where);
    e.source = require_string(j, "source", where);
    e.target = require_string(j, "target", where);
    return e;
}

}  // namespace

Diagram diagram_from_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw DiagramFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw DiagramFormatError("diagram: expected a JSON object");
    reject_unknown_fields(root, {"nodes", "edges"}, "diagram");

    const json& nodes = require(root, "nodes", "diagram");
    const json& edges = require(root, "edges", "diagram");
    if (!nodes.is_array())
        throw DiagramFormatError("diagram: field 'nodes' must be an array");
    if (!edges.is_array())
        throw DiagramFormatError("diagram: field 'edges' must be an array");

    Diagram d;
    d.nodes.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        d.nodes.push_back(node_from_json(nodes[i], i));
    d.edges.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        d.edges.push_back(edge_from_json(edges[i], i));
    return d;
}

std::string diagram_to_json(const Diagram& d) {
    using ojson = nlohmann::ordered_json;
    ojson nodes = ojson::array();
    for (const auto& n : d.nodes) {
        ojson j;
        j["id"] = n.id;
        j["kind"] = to_string(n.kind);
        j["label"] = n.label;
        if (n.literal_datatype)
            j["literalDatatype"] = *n.literal_datatype;
        if (n.position) {
            j["x"] = n.position->x;
            j["y"] = n.position->y;
        }
        nodes.push_back(std::move(j));
    }
    ojson edges = ojson::array();
    for (const auto& e : d.edges) {
        ojson j;
        j["id"] = e.id;
        j["kind"] = to_string(e.kind);
        if (e.property_label)
            j["property"] = *e.property_label;
        j["source"] = e.source;
        j["target"] = e.target;
        edges.push_back(std::move(j));
    }
    ojson root;
    root["nodes"] = std::move(nodes);
    root["edges"] = std::move(edges);
    return root.dump(2);
}

}  // namespace owlax
