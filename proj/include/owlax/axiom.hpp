#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace owlax {

enum class EntityKind { Class, ObjectProperty, DataProperty, NamedIndividual, Datatype };

struct Entity {
    EntityKind kind = EntityKind::Class;
    std::string name;

    auto operator<=>(const Entity&) const = default;
};

/// Maps `<http://www.w3.org/2001/XMLSchema#string>` and friends onto their
/// short names; leaves every other datatype name untouched.
std::string canonical_datatype(std::string_view name);

/// Immutable shared node for the recursive parts of the AST. Copies share the
/// pointee; equality is structural.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

    const T& operator*() const { return *ptr_; }
    const T* operator->() const { return ptr_.get(); }

    bool operator==(const Box& other) const { return ptr_ == other.ptr_ || *ptr_ == *other.ptr_; }

private:
    std::shared_ptr<const T> ptr_;
};

struct Literal {
    std::string lexical;
    std::string datatype;  // canonical datatype name

    bool operator==(const Literal&) const = default;
};

struct NamedDatatype {
    std::string name;
    bool operator==(const NamedDatatype&) const = default;
};
struct TopDatatype {
    bool operator==(const TopDatatype&) const = default;
};
struct DataOneOf {
    Literal value;
    bool operator==(const DataOneOf&) const = default;
};

using DataRange = std::variant<NamedDatatype, TopDatatype, DataOneOf>;

struct ObjectPropertyExpr {
    std::string name;
    bool inverse = false;

    bool operator==(const ObjectPropertyExpr&) const = default;
};

class ClassExpression;

struct NamedClass {
    std::string name;
    bool operator==(const NamedClass&) const = default;
};
struct Thing {
    bool operator==(const Thing&) const = default;
};
struct ObjectSomeValuesFrom {
    ObjectPropertyExpr property;
    Box<ClassExpression> filler;
    bool operator==(const ObjectSomeValuesFrom&) const = default;
};
struct ObjectAllValuesFrom {
    ObjectPropertyExpr property;
    Box<ClassExpression> filler;
    bool operator==(const ObjectAllValuesFrom&) const = default;
};
struct ObjectMaxCardinality {
    unsigned cardinality = 1;
    ObjectPropertyExpr property;
    Box<ClassExpression> filler;
    bool operator==(const ObjectMaxCardinality&) const = default;
};
struct ObjectOneOf {
    std::string individual;
    bool operator==(const ObjectOneOf&) const = default;
};
struct DataSomeValuesFrom {
    std::string property;
    DataRange range;
    bool operator==(const DataSomeValuesFrom&) const = default;
};
struct DataAllValuesFrom {
    std::string property;
    DataRange range;
    bool operator==(const DataAllValuesFrom&) const = default;
};
struct DataMaxCardinality {
    unsigned cardinality = 1;
    std::string property;
    DataRange range;
    bool operator==(const DataMaxCardinality&) const = default;
};

class ClassExpression {
public:
    using Node = std::variant<NamedClass, Thing, ObjectSomeValuesFrom, ObjectAllValuesFrom, ObjectMaxCardinality,
                              ObjectOneOf, DataSomeValuesFrom, DataAllValuesFrom, DataMaxCardinality>;

    template <class T>
        requires std::is_constructible_v<Node, T>
    ClassExpression(T node) : node_(std::move(node)) {}

    const Node& node() const { return node_; }

    template <class T>
    const T* as() const { return std::get_if<T>(&node_); }

    bool operator==(const ClassExpression&) const = default;

private:
    Node node_;
};

// Builders for the constructors the generator uses.
namespace ce {
ClassExpression named(std::string name);
ClassExpression thing();
ClassExpression some(ObjectPropertyExpr p, ClassExpression filler);
ClassExpression only(ObjectPropertyExpr p, ClassExpression filler);
ClassExpression max(unsigned n, ObjectPropertyExpr p, ClassExpression filler);
ClassExpression nominal(std::string individual);
ClassExpression data_some(std::string q, DataRange range);
ClassExpression data_only(std::string q, DataRange range);
ClassExpression data_max(unsigned n, std::string q, DataRange range);
ObjectPropertyExpr prop(std::string name);
ObjectPropertyExpr inverse(std::string name);
DataRange datatype(std::string name);
DataRange top_datatype();
DataRange data_nominal(Literal value);
}  // namespace ce

struct SubClassOf {
    ClassExpression sub;
    ClassExpression sup;
    bool operator==(const SubClassOf&) const = default;
};

/// Unordered pair of class names, stored with first() <= second().
class DisjointClasses {
public:
    DisjointClasses(std::string a, std::string b);

    const std::string& first() const { return first_; }
    const std::string& second() const { return second_; }

    bool operator==(const DisjointClasses&) const = default;

private:
    std::string first_;
    std::string second_;
};

struct ClassAssertion {
    std::string cls;
    std::string individual;
    bool operator==(const ClassAssertion&) const = default;
};

class Axiom {
public:
    // Variant order is the canonical kind rank.
    using Node = std::variant<SubClassOf, DisjointClasses, ClassAssertion>;

    template <class T>
        requires std::is_constructible_v<Node, T>
    Axiom(T node) : node_(std::move(node)) {}

    const Node& node() const { return node_; }

    template <class T>
    const T* as() const { return std::get_if<T>(&node_); }

    int kind_rank() const { return static_cast<int>(node_.index()); }

    bool operator==(const Axiom&) const = default;

private:
    Node node_;
};

inline bool structurally_equal(const Axiom& a, const Axiom& b) { return a == b; }

/// Total order: kind rank (SubClassOf < DisjointClasses < ClassAssertion),
/// then the functional-syntax rendering.
std::strong_ordering canonical_compare(const Axiom& a, const Axiom& b);

struct CanonicalLess {
    bool operator()(const Axiom& a, const Axiom& b) const { return canonical_compare(a, b) < 0; }
};

struct AxiomHash {
    std::size_t operator()(const Axiom& a) const;
};

/// Entities mentioned by an axiom (owl:Thing and rdfs:Literal excluded), sorted.
std::vector<Entity> signature(const Axiom& a);

}  // namespace owlax
