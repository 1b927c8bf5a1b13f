#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "owlax/generator.hpp"
#include "owlax/syntax.hpp"
#include "support/oracle.hpp"

using namespace owlax;
using namespace owlax::ce;
namespace oracle = owlax::testing;

namespace {

const char* kPrefixBlock =
    "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
    "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
    "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
    "Prefix(:=<http://example.org/onto#>)\n";

Ontology ontology_of(const std::vector<Axiom>& axioms) {
    Ontology o;
    for (const auto& a : axioms)
        o.add(a);
    return o;
}

}  // namespace

TEST(Manchester, DomainAxiom) {
    EXPECT_EQ(render_manchester(SubClassOf{some(prop("hasAddress"), thing()), named("Person")}),
              "hasAddress some owl:Thing SubClassOf Person");
}

TEST(Manchester, ClassAssertion) { EXPECT_EQ(render_manchester(ClassAssertion{"Person", "mary"}), "mary Type Person"); }

TEST(Manchester, InverseExistential) {
    Axiom a = SubClassOf{named("Address"), some(inverse("hasAddress"), named("Person"))};
    EXPECT_EQ(render_manchester(a), "Address SubClassOf inverse (hasAddress) some Person");
    // cross-check against the functional form of the same axiom
    EXPECT_EQ(parse_functional_axiom(
                  "SubClassOf(:Address ObjectSomeValuesFrom(ObjectInverseOf(:hasAddress) :Person))"),
              a);
}

TEST(Manchester, RemainingProductions) {
    EXPECT_EQ(render_manchester(SubClassOf{thing(), only(prop("R"), named("B"))}), "owl:Thing SubClassOf R only B");
    EXPECT_EQ(render_manchester(SubClassOf{named("A"), max(1, prop("R"), thing())}),
              "A SubClassOf R max 1 owl:Thing");
    EXPECT_EQ(render_manchester(SubClassOf{named("B"), max(1, inverse("R"), named("A"))}),
              "B SubClassOf inverse (R) max 1 A");
    EXPECT_EQ(render_manchester(SubClassOf{data_some("q", top_datatype()), named("A")}),
              "q some rdfs:Literal SubClassOf A");
    EXPECT_EQ(render_manchester(SubClassOf{named("A"), data_only("q", datatype("string"))}),
              "A SubClassOf q only xsd:string");
    EXPECT_EQ(render_manchester(SubClassOf{named("A"), max(1, prop("R"), nominal("c"))}),
              "A SubClassOf R max 1 {c}");
    EXPECT_EQ(render_manchester(SubClassOf{named("A"), data_only("q", data_nominal(Literal{"x", "string"}))}),
              "A SubClassOf q only {\"x\"^^xsd:string}");
    EXPECT_EQ(render_manchester(DisjointClasses{"Person", "Address"}), "Address DisjointWith Person");
    EXPECT_EQ(render_manchester(SubClassOf{named("B"), named("A")}), "B SubClassOf A");
}

TEST(Manchester, NestedRestrictionIsUnsupported) {
    Axiom a = SubClassOf{named("A"), some(prop("R"), some(prop("S"), thing()))};
    EXPECT_THROW(render_manchester(a), UnsupportedConstruct);
}

TEST(EntityToIri, Examples) {
    PrefixEnvironment env;
    EXPECT_EQ(entity_to_iri({EntityKind::Class, "Person"}, env), "http://example.org/onto#Person");
    EXPECT_EQ(entity_to_iri({EntityKind::Datatype, "string"}, env), "http://www.w3.org/2001/XMLSchema#string");
    EXPECT_EQ(entity_to_iri({EntityKind::Class, "owl:Thing"}, env), "http://www.w3.org/2002/07/owl#Thing");
    EXPECT_EQ(entity_to_iri({EntityKind::Datatype, "rdfs:Literal"}, env),
              "http://www.w3.org/2000/01/rdf-schema#Literal");
    // a user class that happens to be called Thing stays in the default namespace
    EXPECT_EQ(entity_to_iri({EntityKind::Class, "Thing"}, env), "http://example.org/onto#Thing");
    EXPECT_EQ(entity_to_iri({EntityKind::Class, "Person"}, PrefixEnvironment("http://x.org/a/")),
              "http://x.org/a/Person");
}

TEST(PrefixEnvironment, RejectsBadBase) {
    EXPECT_THROW(PrefixEnvironment("not an iri"), Error);
    EXPECT_THROW(PrefixEnvironment("http://example.org/onto"), Error);
    EXPECT_NO_THROW(PrefixEnvironment("urn:x:y#"));
}

TEST(Functional, EmptyOntologyDocument) {
    EXPECT_EQ(render_functional(Ontology{}), std::string(kPrefixBlock) + "\nOntology(\n)\n");
}

TEST(Functional, DomainAxiomLine) {
    Ontology o = ontology_of({SubClassOf{some(prop("hasAddress"), thing()), named("Person")}});
    const std::string doc = render_functional(o);
    EXPECT_NE(doc.find("\nSubClassOf(ObjectSomeValuesFrom(:hasAddress owl:Thing) :Person)\n"), std::string::npos)
        << doc;
    EXPECT_NE(doc.find("Declaration(Class(:Person))"), std::string::npos);
    EXPECT_NE(doc.find("Declaration(ObjectProperty(:hasAddress))"), std::string::npos);
}

TEST(Functional, AxiomSpellings) {
    EXPECT_EQ(to_functional(ClassAssertion{"Person", "mary"}), "ClassAssertion(:Person :mary)");
    EXPECT_EQ(to_functional(DisjointClasses{"B", "A"}), "DisjointClasses(:A :B)");
    EXPECT_EQ(to_functional(SubClassOf{named("A"), max(1, inverse("R"), thing())}),
              "SubClassOf(:A ObjectMaxCardinality(1 ObjectInverseOf(:R) owl:Thing))");
    EXPECT_EQ(to_functional(SubClassOf{named("A"), data_some("q", data_nominal(Literal{"4\"2", "integer"}))}),
              "SubClassOf(:A DataSomeValuesFrom(:q DataOneOf(\"4\\\"2\"^^xsd:integer)))");
    EXPECT_EQ(to_functional(SubClassOf{named("A"), data_max(1, "q", top_datatype())}),
              "SubClassOf(:A DataMaxCardinality(1 :q rdfs:Literal))");
}

TEST(Functional, ArityErrorIsParseError) {
    std::string doc = std::string(kPrefixBlock) + "Ontology(\nSubClassOf(:A :B :C)\n)\n";
    try {
        parse_functional(doc);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), "PARSE_ERROR");
        EXPECT_EQ(e.line(), 6u);
    }
}

TEST(Functional, EquivalentClassesIsUnsupported) {
    std::string doc = std::string(kPrefixBlock) + "Ontology(\nEquivalentClasses(:A :B)\n)\n";
    try {
        parse_functional(doc);
        FAIL();
    } catch (const UnsupportedConstruct& e) {
        EXPECT_EQ(e.code(), "UNSUPPORTED_CONSTRUCT");
        EXPECT_EQ(e.construct(), "EquivalentClasses");
    }
}

TEST(Functional, MalformedInputs) {
    for (const char* body : {"SubClassOf(:A", "SubClassOf(:A :B))", "Frobnicate(:A)", "SubClassOf(:A \"lit\")",
                             "ClassAssertion(:A)", "DisjointClasses(:A :B :C)"}) {
        std::string doc = std::string(kPrefixBlock) + "Ontology(\n" + body + "\n)\n";
        EXPECT_THROW(parse_functional(doc), Error) << body;
    }
    EXPECT_THROW(parse_functional("Ontology("), ParseError);
    EXPECT_THROW(parse_functional(""), ParseError);
}

TEST(Functional, ForeignNamespaceIsUnsupported) {
    std::string doc = std::string(kPrefixBlock) + "Ontology(\nSubClassOf(<http://other.org/A> :B)\n)\n";
    EXPECT_THROW(parse_functional(doc), UnsupportedConstruct);
}

TEST(Functional, CommentsAndWhitespaceAreIgnored) {
    std::string doc = std::string(kPrefixBlock) +
                      "# a comment\nOntology(   <http://example.org/onto>\n"
                      "  SubClassOf( :B   :A ) # trailing\n\n"
                      "ClassAssertion(:A :a))";
    Ontology o = parse_functional(doc);
    EXPECT_EQ(o.size(), 2u);
    EXPECT_TRUE(o.contains(SubClassOf{named("B"), named("A")}));
    EXPECT_EQ(o.ontology_iri(), "http://example.org/onto");
}

TEST(Functional, DomainAndRangeAxiomsNormalize) {
    std::string doc = std::string(kPrefixBlock) +
                      "Ontology(\nObjectPropertyDomain(:R :A)\nObjectPropertyRange(:R :B)\n"
                      "DataPropertyRange(:q xsd:string)\n)\n";
    Ontology o = parse_functional(doc);
    EXPECT_TRUE(o.contains(SubClassOf{some(prop("R"), thing()), named("A")}));
    EXPECT_TRUE(o.contains(SubClassOf{thing(), only(prop("R"), named("B"))}));
    EXPECT_TRUE(o.contains(SubClassOf{thing(), data_only("q", datatype("string"))}));
}

TEST(Functional, CustomBaseRoundTrips) {
    Ontology o{PrefixEnvironment("http://x.org/zoo/")};
    o.add(SubClassOf{named("Lion"), named("Cat")});
    o.declare({EntityKind::NamedIndividual, "leo"});
    auto doc = render_functional(o);
    EXPECT_NE(doc.find("Prefix(:=<http://x.org/zoo/>)"), std::string::npos);
    EXPECT_EQ(parse_functional(doc), o);
}

TEST(Functional, LiteralEscapingRoundTrips) {
    Ontology o;
    for (std::string lex : {"plain", "with \"quotes\"", "back\\slash", "", "trailing\\"})
        o.add(SubClassOf{named("A"), data_some("q", data_nominal(Literal{lex, "string"}))});
    o.add(SubClassOf{named("A"), data_only("q", datatype("<http://example.org/dt#km>"))});
    Ontology back = parse_functional(render_functional(o));
    EXPECT_EQ(back, o);
}

TEST(Functional, RoundTripOnGeneratorOntologies) {
    std::mt19937 rng(31);
    for (int round = 0; round < 300; ++round) {
        Diagram d = oracle::random_valid_diagram(rng);
        Ontology o;
        for (const auto& c : generate(d))
            if (std::bernoulli_distribution(0.7)(rng))
                o.add(c.axiom);
        const std::string doc = render_functional(o);
        Ontology back = parse_functional(doc);
        ASSERT_EQ(back, o) << doc;
        // fixed point
        EXPECT_EQ(render_functional(back), doc);
    }
}

TEST(Functional, RenderingIgnoresInsertionOrder) {
    std::mt19937 rng(32);
    for (int round = 0; round < 200; ++round) {
        std::vector<Axiom> axioms;
        for (int i = 0; i < 15; ++i)
            axioms.push_back(oracle::random_axiom(rng));
        auto reference = render_functional(ontology_of(axioms));
        std::shuffle(axioms.begin(), axioms.end(), rng);
        EXPECT_EQ(render_functional(ontology_of(axioms)), reference);
    }
}

TEST(Functional, DistinctAxiomSetsRenderDistinctly) {
    std::mt19937 rng(33);
    for (int round = 0; round < 300; ++round) {
        std::vector<Axiom> a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back(oracle::random_axiom(rng));
            b.push_back(oracle::random_axiom(rng));
        }
        Ontology oa = ontology_of(a), ob = ontology_of(b);
        EXPECT_EQ(oracle::same_axiom_set(oa.axioms(), ob.axioms()), render_functional(oa) == render_functional(ob));
    }
}

TEST(Functional, SingleAxiomParseMatchesRender) {
    std::mt19937 rng(34);
    for (int i = 0; i < 1000; ++i) {
        auto a = oracle::random_axiom(rng);
        EXPECT_EQ(parse_functional_axiom(to_functional(a)), a) << to_functional(a);
    }
}
