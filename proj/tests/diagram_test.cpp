#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "owlax/diagram.hpp"
#include "support/oracle.hpp"

using namespace owlax;
using owlax::testing::ClosureOracle;

namespace {

Node cls(std::string id, std::string label) { return {std::move(id), NodeKind::Class, std::move(label), {}, {}}; }
Node ind(std::string id, std::string label) { return {std::move(id), NodeKind::Individual, std::move(label), {}, {}}; }

Edge edge(std::string id, EdgeKind kind, std::string source, std::string target,
          std::optional<std::string> property = std::nullopt) {
    return {std::move(id), kind, std::move(property), std::move(source), std::move(target)};
}

std::vector<std::string> codes(const std::vector<Finding>& findings) {
    std::vector<std::string> out;
    for (const auto& f : findings)
        out.push_back(f.code);
    return out;
}

Diagram subclass_chain() {
    return {{cls("a", "A"), cls("b", "B"), cls("c", "C")},
            {edge("e1", EdgeKind::SubClassOf, "a", "b"), edge("e2", EdgeKind::SubClassOf, "b", "c")}};
}

}  // namespace

TEST(ValidateDiagram, EmptyDiagramIsTheOnlyError) {
    auto report = validate_diagram(Diagram{});
    ASSERT_EQ(report.errors.size(), 1u);
    EXPECT_EQ(report.errors[0].code, "EMPTY_DIAGRAM");
    EXPECT_EQ(report.errors[0].element, "-");
    EXPECT_FALSE(report.valid());
}

TEST(ValidateDiagram, SingleClassIsClean) {
    auto report = validate_diagram({{cls("n1", "Person")}, {}});
    EXPECT_TRUE(report.errors.empty());
    EXPECT_TRUE(report.warnings.empty());
    EXPECT_TRUE(report.valid());
}

TEST(ValidateDiagram, IndividualWithObjectPropertyToClassIsIllegal) {
    Diagram d{{ind("m", "mary"), cls("p", "Person")}, {edge("e1", EdgeKind::ObjectProperty, "m", "p", "knows")}};
    auto report = validate_diagram(d);
    ASSERT_EQ(report.errors.size(), 1u);
    EXPECT_EQ(report.errors[0].code, "ILLEGAL_CONFIGURATION");
    EXPECT_EQ(report.errors[0].element, "e1");
}

TEST(ValidateDiagram, BadNamesAndDanglingEdges) {
    Diagram d{{cls("a", "1Person"), ind("b", "has space")},
              {edge("e1", EdgeKind::ObjectProperty, "a", "zz", "knows"),
               edge("e2", EdgeKind::ObjectProperty, "a", "a", "bad name")}};
    auto report = validate_diagram(d);
    auto c = codes(report.errors);
    EXPECT_EQ(std::count(c.begin(), c.end(), "BAD_NAME"), 3);
    EXPECT_EQ(std::count(c.begin(), c.end(), "DANGLING_EDGE"), 1);
}

TEST(ValidateDiagram, PropertyLabelRules) {
    Diagram d{{cls("a", "A"), cls("b", "B")},
              {edge("e1", EdgeKind::SubClassOf, "a", "b", "oops"), edge("e2", EdgeKind::ObjectProperty, "a", "b")}};
    auto report = validate_diagram(d);
    EXPECT_EQ(codes(report.errors), (std::vector<std::string>{"UNEXPECTED_PROPERTY", "BAD_NAME"}));
}

TEST(ValidateDiagram, DatatypeAndLiteralRules) {
    Node good_dt{"d1", NodeKind::Datatype, "string", {}, {}};
    Node iri_dt{"d2", NodeKind::Datatype, "<http://example.org/dt#km>", {}, {}};
    Node bad_dt{"d3", NodeKind::Datatype, "varchar", {}, {}};
    Node no_dt_literal{"l1", NodeKind::Literal, "42", {}, {}};
    Node class_with_dt{"c1", NodeKind::Class, "C", std::string("string"), {}};
    auto report = validate_diagram({{good_dt, iri_dt, bad_dt, no_dt_literal, class_with_dt}, {}});
    EXPECT_EQ(codes(report.errors),
              (std::vector<std::string>{"UNEXPECTED_DATATYPE", "BAD_DATATYPE", "MISSING_DATATYPE"}));
}

TEST(ValidateDiagram, DuplicateEntitiesWarnOnce) {
    Diagram d{{cls("x2", "Person"), cls("x1", "Person"), cls("x3", "Person")}, {}};
    auto report = validate_diagram(d);
    EXPECT_TRUE(report.valid());
    ASSERT_EQ(report.warnings.size(), 1u);
    EXPECT_EQ(report.warnings[0].code, "DUPLICATE_ENTITY");
    EXPECT_EQ(report.warnings[0].element, "x1");
}

TEST(ValidateDiagram, DuplicateIdsAndPropertyKindConflict) {
    Node lit{"l", NodeKind::Literal, "x", std::string("string"), {}};
    Diagram d{{cls("a", "A"), cls("a", "B"), lit},
              {edge("e1", EdgeKind::ObjectProperty, "a", "a", "p"), edge("e2", EdgeKind::DataProperty, "a", "l", "p")}};
    auto c = codes(validate_diagram(d).errors);
    EXPECT_NE(std::find(c.begin(), c.end(), "DUPLICATE_ID"), c.end());
    EXPECT_NE(std::find(c.begin(), c.end(), "PROPERTY_KIND_CONFLICT"), c.end());
}

TEST(ValidateDiagram, SelfLoopIsLegal) {
    Diagram d{{cls("a", "A")}, {edge("e1", EdgeKind::ObjectProperty, "a", "a", "partOf")}};
    EXPECT_TRUE(validate_diagram(d).valid());
}

TEST(ValidateDiagram, ReportIsInvariantUnderStoragePermutation) {
    std::mt19937 rng(7);
    for (int round = 0; round < 200; ++round) {
        // Mix of legal and illegal edges.
        Diagram d = owlax::testing::random_valid_diagram(rng);
        if (!d.edges.empty())
            std::swap(d.edges.front().source, d.edges.front().target);
        d.nodes.push_back(cls(d.nodes.front().id, "Dup"));
        const auto reference = validate_diagram(d);
        for (int k = 0; k < 5; ++k) {
            Diagram p = d;
            std::shuffle(p.nodes.begin(), p.nodes.end(), rng);
            std::shuffle(p.edges.begin(), p.edges.end(), rng);
            auto r = validate_diagram(p);
            EXPECT_EQ(r.errors, reference.errors);
            EXPECT_EQ(r.warnings, reference.warnings);
        }
    }
}

TEST(SubclassReachable, Chain) {
    auto d = subclass_chain();
    EXPECT_TRUE(subclass_reachable(d, "A", "C"));
    EXPECT_FALSE(subclass_reachable(d, "C", "A"));
}

TEST(SubclassReachable, ReflexiveWithoutEdges) {
    Diagram d{{cls("a", "A")}, {}};
    EXPECT_TRUE(subclass_reachable(d, "A", "A"));
}

TEST(SubclassReachable, SiblingsAreUnrelated) {
    Diagram d{{cls("a", "A"), cls("b", "B"), cls("c", "C")},
              {edge("e1", EdgeKind::SubClassOf, "b", "a"), edge("e2", EdgeKind::SubClassOf, "c", "a")}};
    EXPECT_FALSE(subclass_reachable(d, "B", "C"));
    EXPECT_FALSE(subclass_reachable(d, "C", "B"));
}

TEST(SubclassReachable, DuplicateLabelsMerge) {
    // A -> B (first B box), second B box -> C
    Diagram d{{cls("a", "A"), cls("b1", "B"), cls("b2", "B"), cls("c", "C")},
              {edge("e1", EdgeKind::SubClassOf, "a", "b1"), edge("e2", EdgeKind::SubClassOf, "b2", "c")}};
    EXPECT_TRUE(subclass_reachable(d, "A", "C"));
}

TEST(SubclassReachable, UnknownClass) {
    Diagram d{{cls("a", "A"), ind("m", "mary")}, {}};
    try {
        subclass_reachable(d, "A", "mary");
        FAIL() << "expected UNKNOWN_CLASS";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "UNKNOWN_CLASS");
    }
}

TEST(SubclassReachable, MatchesClosureOracleAndIgnoresPropertyEdges) {
    std::mt19937 rng(11);
    for (int round = 0; round < 300; ++round) {
        Diagram d = owlax::testing::random_class_hierarchy(rng, 6, 8);
        ClosureOracle oracle(d);
        Diagram noisy = d;
        for (int k = 0; k < 4; ++k) {
            const auto& s = noisy.nodes[rng() % noisy.nodes.size()].id;
            const auto& t = noisy.nodes[rng() % noisy.nodes.size()].id;
            noisy.edges.push_back(edge("p" + std::to_string(k), EdgeKind::ObjectProperty, s, t, "rel"));
        }
        for (const auto& x : oracle.classes())
            for (const auto& y : oracle.classes()) {
                EXPECT_EQ(subclass_reachable(d, x, y), oracle.reachable(x, y));
                EXPECT_EQ(subclass_reachable(noisy, x, y), oracle.reachable(x, y));
            }
    }
}

TEST(EntitiesOf, ObjectPropertyEdge) {
    Diagram d{{cls("p", "Person"), cls("a", "Address")},
              {edge("e1", EdgeKind::ObjectProperty, "p", "a", "hasAddress")}};
    auto inv = entities_of(d);
    EXPECT_EQ(inv.classes, (std::vector<std::string>{"Address", "Person"}));
    EXPECT_EQ(inv.object_properties, (std::vector<std::string>{"hasAddress"}));
    EXPECT_TRUE(inv.data_properties.empty());
}

TEST(EntitiesOf, DuplicateNodesMerge) {
    Diagram once{{cls("p1", "Person")}, {}};
    Diagram twice{{cls("p1", "Person"), cls("p2", "Person")}, {}};
    EXPECT_EQ(entities_of(twice).classes, (std::vector<std::string>{"Person"}));
    EXPECT_EQ(entities_of(once), entities_of(twice));
}

TEST(EntitiesOf, TypeEdge) {
    Diagram d{{ind("m", "mary"), cls("p", "Person")}, {edge("e1", EdgeKind::Type, "m", "p")}};
    auto inv = entities_of(d);
    EXPECT_EQ(inv.classes, (std::vector<std::string>{"Person"}));
    EXPECT_EQ(inv.individuals, (std::vector<std::string>{"mary"}));
}

TEST(DiagramJson, RoundTripPreservesEverything) {
    std::mt19937 rng(3);
    for (int round = 0; round < 100; ++round) {
        Diagram d = owlax::testing::random_valid_diagram(rng);
        d.nodes.front().position = Position{12.5, -3};
        EXPECT_EQ(diagram_from_json(diagram_to_json(d)), d);
    }
}

TEST(DiagramJson, RejectsMalformedInput) {
    auto rejects = [](const std::string& text, const std::string& fragment) {
        try {
            diagram_from_json(text);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const DiagramFormatError& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    rejects(R"({"nodes": 5, "edges": []})", "nodes");
    rejects(R"({"nodes": [{"id":"a","kind":"enum","label":"X"}], "edges": []})", "kind");
    rejects(R"({"nodes": [{"id":"a","kind":"class","label":"X","color":"red"}], "edges": []})", "color");
    rejects(R"({"nodes": [], "edges": [], "extra": 1})", "extra");
    rejects(R"({"nodes": [{"id":"a","kind":"class"}], "edges": []})", "label");
    rejects(R"({"nodes": [{"id":"a","kind":"class","label":"X","x":1}], "edges": []})", "'y'");
    rejects(R"({"nodes": [], "edges": [{"id":"e","kind":"isA","source":"a","target":"b"}]})", "kind");
    rejects("{not json", "invalid JSON");
}

TEST(DiagramJson, ReadsCanonicalExample) {
    auto d = diagram_from_json(R"({"nodes":[{"id":"n1","kind":"class","label":"Person","x":10,"y":20},
        {"id":"n2","kind":"literal","label":"42","literalDatatype":"integer"}],
        "edges":[{"id":"e1","kind":"dataProperty","property":"age","source":"n1","target":"n2"}]})");
    ASSERT_EQ(d.nodes.size(), 2u);
    EXPECT_EQ(d.nodes[1].literal_datatype, "integer");
    EXPECT_EQ(d.nodes[0].position, (Position{10, 20}));
    EXPECT_EQ(d.edges[0].property_label, "age");
    EXPECT_TRUE(validate_diagram(d).valid());
}
