#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owlax/error.hpp"

namespace owlax {

enum class NodeKind { Class, Datatype, Individual, Literal };
enum class EdgeKind { ObjectProperty, DataProperty, Type, SubClassOf };

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view s);
std::optional<EdgeKind> edge_kind_from_string(std::string_view s);

struct Position {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Position&) const = default;
};

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Class;
    // Class/Individual: entity name. Datatype: xsd short name or <absolute IRI>.
    // Literal: the lexical form.
    std::string label;
    std::optional<std::string> literal_datatype;
    std::optional<Position> position;

    bool operator==(const Node&) const = default;
};

struct Edge {
    std::string id;
    EdgeKind kind = EdgeKind::ObjectProperty;
    std::optional<std::string> property_label;
    std::string source;
    std::string target;

    bool operator==(const Edge&) const = default;
};

struct Diagram {
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    const Node* find_node(std::string_view id) const;

    bool operator==(const Diagram&) const = default;
};

struct Finding {
    std::string code;
    std::string element;  // node/edge id, or "-" for diagram-wide findings
    std::string message;

    auto operator<=>(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    bool valid() const { return errors.empty(); }
};

/// Identifier pattern shared by class, individual and property names:
/// `[A-Za-z_][A-Za-z0-9_.-]*`.
bool is_identifier(std::string_view s);

/// True for the supported xsd short names (string, integer, ...) and for a
/// bracketed absolute IRI such as `<http://example.org/dt#km>`.
bool is_supported_datatype(std::string_view s);

/// Checks the structural constraints on a diagram. Never throws; findings are
/// sorted so the report does not depend on node or edge storage order.
ValidationReport validate_diagram(const Diagram& d);

/// Reflexive-transitive reachability over SubClassOf edges, with nodes that
/// share a class label merged. Throws Error("UNKNOWN_CLASS") when either label
/// is not a class in `d`.
bool subclass_reachable(const Diagram& d, std::string_view from, std::string_view to);

struct EntityInventory {
    std::vector<std::string> classes;
    std::vector<std::string> object_properties;
    std::vector<std::string> data_properties;
    std::vector<std::string> individuals;
    std::vector<std::string> datatypes;

    bool operator==(const EntityInventory&) const = default;
};

EntityInventory entities_of(const Diagram& d);

/// Thrown by the JSON reader on malformed input; the message names the field.
class DiagramFormatError : public Error {
public:
    explicit DiagramFormatError(const std::string& message) : Error("MALFORMED_DIAGRAM", message) {}
};

Diagram diagram_from_json(std::string_view text);
std::string diagram_to_json(const Diagram& d);

}  // namespace owlax
