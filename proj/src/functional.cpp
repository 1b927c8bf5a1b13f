#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "owlax/diagram.hpp"
#include "owlax/syntax.hpp"

namespace owlax {

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string name(const std::string& local) { return ":" + local; }

std::string datatype(const std::string& dt) {
    if (!dt.empty() && dt.front() == '<')
        return dt;
    return "xsd:" + dt;
}

std::string literal(const Literal& l) {
    std::string out = "\"";
    for (char c : l.lexical) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"^^" + datatype(l.datatype);
}

std::string property(const ObjectPropertyExpr& p) {
    return p.inverse ? "ObjectInverseOf(" + name(p.name) + ")" : name(p.name);
}

std::string data_range(const DataRange& r) {
    if (auto* n = std::get_if<NamedDatatype>(&r))
        return datatype(n->name);
    if (std::holds_alternative<TopDatatype>(r))
        return "rdfs:Literal";
    return "DataOneOf(" + literal(std::get<DataOneOf>(r).value) + ")";
}

}  // namespace

std::string to_functional(const ClassExpression& c) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NamedClass>)
                return name(node.name);
            else if constexpr (std::is_same_v<T, Thing>)
                return "owl:Thing";
            else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom>)
                return "ObjectSomeValuesFrom(" + property(node.property) + " " + to_functional(*node.filler) + ")";
            else if constexpr (std::is_same_v<T, ObjectAllValuesFrom>)
                return "ObjectAllValuesFrom(" + property(node.property) + " " + to_functional(*node.filler) + ")";
            else if constexpr (std::is_same_v<T, ObjectMaxCardinality>)
                return "ObjectMaxCardinality(" + std::to_string(node.cardinality) + " " + property(node.property) +
                       " " + to_functional(*node.filler) + ")";
            else if constexpr (std::is_same_v<T, ObjectOneOf>)
                return "ObjectOneOf(" + name(node.individual) + ")";
            else if constexpr (std::is_same_v<T, DataSomeValuesFrom>)
                return "DataSomeValuesFrom(" + name(node.property) + " " + data_range(node.range) + ")";
            else if constexpr (std::is_same_v<T, DataAllValuesFrom>)
                return "DataAllValuesFrom(" + name(node.property) + " " + data_range(node.range) + ")";
            else
                return "DataMaxCardinality(" + std::to_string(node.cardinality) + " " + name(node.property) + " " +
                       data_range(node.range) + ")";
        },
        c.node());
}

std::string to_functional(const Axiom& a) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SubClassOf>)
                return "SubClassOf(" + to_functional(node.sub) + " " + to_functional(node.sup) + ")";
            else if constexpr (std::is_same_v<T, DisjointClasses>)
                return "DisjointClasses(" + name(node.first()) + " " + name(node.second()) + ")";
            else
                return "ClassAssertion(" + name(node.cls) + " " + name(node.individual) + ")";
        },
        a.node());
}

std::string entity_to_iri(const Entity& e, const PrefixEnvironment& env) {
    const std::string& n = e.name;
    if (n.size() > 2 && n.front() == '<' && n.back() == '>')
        return n.substr(1, n.size() - 2);
    if (n.starts_with("owl:"))
        return std::string(kOwlNamespace) + n.substr(4);
    if (n.starts_with("rdfs:"))
        return std::string(kRdfsNamespace) + n.substr(5);
    if (n.starts_with("xsd:"))
        return std::string(kXsdNamespace) + n.substr(4);
    if (e.kind == EntityKind::Datatype)
        return std::string(kXsdNamespace) + n;
    return env.base_iri() + n;
}

std::string render_functional(const Ontology& o) {
    std::ostringstream out;
    out << "Prefix(owl:=<" << kOwlNamespace << ">)\n"
        << "Prefix(rdfs:=<" << kRdfsNamespace << ">)\n"
        << "Prefix(xsd:=<" << kXsdNamespace << ">)\n"
        << "Prefix(:=<" << o.prefixes().base_iri() << ">)\n"
        << "\n"
        << "Ontology(";
    if (o.ontology_iri())
        out << "<" << *o.ontology_iri() << ">";
    out << "\n";

    static constexpr std::array<std::pair<EntityKind, const char*>, 4> groups = {{
        {EntityKind::Class, "Class"},
        {EntityKind::ObjectProperty, "ObjectProperty"},
        {EntityKind::DataProperty, "DataProperty"},
        {EntityKind::NamedIndividual, "NamedIndividual"},
    }};
    const auto entities = o.entities();
    for (const auto& [kind, keyword] : groups)
        for (const auto& e : entities)
            if (e.kind == kind)
                out << "Declaration(" << keyword << "(" << name(e.name) << "))\n";
    // Only non-builtin datatypes are declared.
    for (const auto& e : entities)
        if (e.kind == EntityKind::Datatype && e.name.front() == '<')
            out << "Declaration(Datatype(" << e.name << "))\n";

    for (const auto& axiom : o.axioms())
        out << to_functional(axiom) << "\n";
    out << ")\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok { LParen, RParen, Equals, Iri, PName, String, Caret, LangTag, Number, Keyword, End };

struct Token {
    Tok kind;
    std::string text;  // IRI without brackets, prefixed name, unescaped string, keyword, digits
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    static bool name_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
               c == '.' || c == ':' || static_cast<unsigned char>(c) >= 0x80;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) { throw ParseError(line, col, msg); }

    Token next() {
        const std::size_t line = line_, col = col_;
        char c = src_[pos_];
        switch (c) {
        case '(': advance(); return {Tok::LParen, "(", line, col};
        case ')': advance(); return {Tok::RParen, ")", line, col};
        case '=': advance(); return {Tok::Equals, "=", line, col};
        case '^':
            advance();
            if (pos_ >= src_.size() || src_[pos_] != '^')
                fail(line, col, "expected '^^'");
            advance();
            return {Tok::Caret, "^^", line, col};
        case '<': {
            advance();
            std::string iri;
            while (pos_ < src_.size() && src_[pos_] != '>') {
                if (src_[pos_] == '\n' || src_[pos_] == ' ' || src_[pos_] == '<')
                    fail(line_, col_, "malformed IRI");
                iri += src_[pos_];
                advance();
            }
            if (pos_ >= src_.size())
                fail(line, col, "unterminated IRI");
            advance();
            return {Tok::Iri, iri, line, col};
        }
        case '"': {
            advance();
            std::string value;
            for (;;) {
                if (pos_ >= src_.size())
                    fail(line, col, "unterminated string literal");
                char s = src_[pos_];
                if (s == '"')
                    break;
                if (s == '\\') {
                    advance();
                    if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\\'))
                        fail(line_, col_, "only \\\" and \\\\ escapes are allowed in string literals");
                    s = src_[pos_];
                }
                value += s;
                advance();
            }
            advance();
            return {Tok::String, value, line, col};
        }
        case '@': {
            advance();
            std::string tag;
            while (pos_ < src_.size() && name_char(src_[pos_]) && src_[pos_] != ':') {
                tag += src_[pos_];
                advance();
            }
            return {Tok::LangTag, tag, line, col};
        }
        default: break;
        }
        if (!name_char(c))
            fail(line, col, std::string("unexpected character '") + c + "'");
        std::string word;
        while (pos_ < src_.size() && name_char(src_[pos_])) {
            word += src_[pos_];
            advance();
        }
        if (word.find(':') != std::string::npos)
            return {Tok::PName, word, line, col};
        if (std::all_of(word.begin(), word.end(), [](char d) { return d >= '0' && d <= '9'; }))
            return {Tok::Number, word, line, col};
        return {Tok::Keyword, word, line, col};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// Valid OWL 2 functional-syntax keywords that lie outside the supported fragment.
const std::set<std::string, std::less<>>& unsupported_keywords() {
    static const std::set<std::string, std::less<>> words = {
        "Import", "Annotation", "AnnotationAssertion", "SubAnnotationPropertyOf", "AnnotationPropertyDomain",
        "AnnotationPropertyRange", "EquivalentClasses", "DisjointUnion", "SubObjectPropertyOf",
        "EquivalentObjectProperties", "DisjointObjectProperties", "InverseObjectProperties",
        "FunctionalObjectProperty", "InverseFunctionalObjectProperty", "ReflexiveObjectProperty",
        "IrreflexiveObjectProperty", "SymmetricObjectProperty", "AsymmetricObjectProperty",
        "TransitiveObjectProperty", "SubDataPropertyOf", "EquivalentDataProperties", "DisjointDataProperties",
        "FunctionalDataProperty", "DatatypeDefinition", "HasKey", "SameIndividual", "DifferentIndividuals",
        "ObjectPropertyAssertion", "NegativeObjectPropertyAssertion", "DataPropertyAssertion",
        "NegativeDataPropertyAssertion", "ObjectIntersectionOf", "ObjectUnionOf", "ObjectComplementOf",
        "ObjectHasValue", "ObjectHasSelf", "ObjectMinCardinality", "ObjectExactCardinality", "DataHasValue",
        "DataMinCardinality", "DataExactCardinality", "DataIntersectionOf", "DataUnionOf", "DataComplementOf",
        "DatatypeRestriction", "AnnotationProperty", "ObjectPropertyChain", "DLSafeRule"};
    return words;
}

// A resolved name: either an entity in the default namespace, a builtin, or a
// foreign IRI.
struct Resolved {
    enum Kind { Local, Thing, Nothing, TopDatatype, Xsd, Foreign } kind;
    std::string value;  // local name, xsd short name, or full IRI
};

class Parser {
public:
    Parser(std::string_view src, PrefixEnvironment env) : tokens_(Lexer(src).run()), env_(std::move(env)) {
        prefixes_[""] = env_.base_iri();
        prefixes_["owl"] = std::string(kOwlNamespace);
        prefixes_["rdfs"] = std::string(kRdfsNamespace);
        prefixes_["xsd"] = std::string(kXsdNamespace);
        prefixes_["rdf"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
        prefixes_["xml"] = "http://www.w3.org/XML/1998/namespace";
    }

    Ontology document() {
        while (peek_keyword("Prefix"))
            prefix_declaration();

        Ontology o(env_);
        expect_keyword("Ontology");
        expect(Tok::LParen, "'('");
        if (peek().kind == Tok::Iri) {
            o.set_ontology_iri(take().text);
            if (peek().kind == Tok::Iri)
                throw UnsupportedConstruct("version IRI", peek().line);
        }
        while (peek().kind != Tok::RParen) {
            if (peek().kind == Tok::End)
                fail(peek(), "missing ')' closing Ontology(");
            axiom_into(o);
        }
        take();
        if (peek().kind != Tok::End)
            fail(peek(), "unexpected content after the ontology");
        return o;
    }

    Axiom single_axiom() {
        Ontology scratch(env_);
        const Token& start = peek();
        auto axioms = axiom_into(scratch);
        if (peek().kind != Tok::End)
            fail(peek(), "unexpected content after the axiom");
        if (axioms.size() != 1)
            fail(start, "expected a logical axiom");
        return axioms.front();
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg) { throw ParseError(at.line, at.column, msg); }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() {
        const Token& t = tokens_[pos_];
        if (t.kind != Tok::End)
            ++pos_;
        return t;
    }

    bool peek_keyword(std::string_view word) const { return peek().kind == Tok::Keyword && peek().text == word; }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            fail(peek(), std::string("expected ") + what + describe(peek()));
        return take();
    }

    void expect_keyword(std::string_view word) {
        if (!peek_keyword(word))
            fail(peek(), "expected '" + std::string(word) + "'" + describe(peek()));
        take();
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case Tok::End: return " but reached end of input";
        case Tok::String: return " but found a string literal";
        case Tok::Iri: return " but found <" + t.text + ">";
        default: return " but found '" + t.text + "'";
        }
    }

    void prefix_declaration() {
        const Token& kw = take();
        expect(Tok::LParen, "'('");
        const Token& pname = expect(Tok::PName, "a prefix name");
        if (pname.text.back() != ':' || pname.text.find(':') != pname.text.size() - 1)
            fail(pname, "malformed prefix name '" + pname.text + "'");
        expect(Tok::Equals, "'='");
        const Token& iri = expect(Tok::Iri, "an IRI");
        expect(Tok::RParen, "')'");

        const std::string prefix = pname.text.substr(0, pname.text.size() - 1);
        static const std::map<std::string, std::string_view> fixed = {
            {"owl", kOwlNamespace}, {"rdfs", kRdfsNamespace}, {"xsd", kXsdNamespace}};
        if (auto it = fixed.find(prefix); it != fixed.end() && iri.text != it->second)
            fail(iri, "prefix " + prefix + ": must be bound to <" + std::string(it->second) + ">");
        if (prefix.empty()) {
            try {
                env_ = PrefixEnvironment(iri.text);
            } catch (const Error& e) {
                fail(iri, e.what());
            }
        }
        (void)kw;
        prefixes_[prefix] = iri.text;
    }

    std::string expand(const Token& t) {
        if (t.kind == Tok::Iri)
            return t.text;
        auto colon = t.text.find(':');
        auto it = prefixes_.find(t.text.substr(0, colon));
        if (it == prefixes_.end())
            fail(t, "undeclared prefix in '" + t.text + "'");
        return it->second + t.text.substr(colon + 1);
    }

    Resolved resolve(const Token& t) {
        if (t.kind != Tok::Iri && t.kind != Tok::PName)
            fail(t, "expected an entity name" + describe(t));
        const std::string iri = expand(t);
        const std::string owl(kOwlNamespace), xsd(kXsdNamespace), rdfs(kRdfsNamespace);
        if (iri == owl + "Thing")
            return {Resolved::Thing, ""};
        if (iri == owl + "Nothing")
            return {Resolved::Nothing, ""};
        if (iri == rdfs + "Literal")
            return {Resolved::TopDatatype, ""};
        if (iri.starts_with(xsd)) {
            auto short_name = canonical_datatype("<" + iri + ">");
            if (short_name.front() != '<')
                return {Resolved::Xsd, short_name};
        }
        const std::string& base = env_.base_iri();
        if (iri.size() > base.size() && iri.starts_with(base) && is_identifier(std::string_view(iri).substr(base.size())))
            return {Resolved::Local, iri.substr(base.size())};
        return {Resolved::Foreign, iri};
    }

    std::string local_name(const Token& t, const char* role) {
        auto r = resolve(t);
        if (r.kind == Resolved::Local)
            return r.value;
        if (r.kind == Resolved::Foreign)
            throw UnsupportedConstruct(std::string(role) + " <" + r.value + "> outside the default namespace", t.line);
        if (r.kind == Resolved::Thing || r.kind == Resolved::Nothing)
            throw UnsupportedConstruct(t.text + " used as " + role, t.line);
        fail(t, std::string("'") + t.text + "' cannot be used as " + role);
    }

    std::string class_name(const Token& t) { return local_name(t, "a class"); }

    // Returns the parsed logical axioms (declarations go straight into `o`).
    std::vector<Axiom> axiom_into(Ontology& o) {
        const Token& kw = peek();
        if (kw.kind != Tok::Keyword)
            fail(kw, "expected an axiom" + describe(kw));
        take();
        if (unsupported_keywords().contains(kw.text))
            throw UnsupportedConstruct(kw.text, kw.line);
        expect(Tok::LParen, "'('");

        std::vector<Axiom> out;
        if (kw.text == "Declaration") {
            declaration(o);
        } else if (kw.text == "SubClassOf") {
            reject_annotations();
            auto sub = class_expression();
            auto sup = class_expression();
            out.push_back(SubClassOf{std::move(sub), std::move(sup)});
        } else if (kw.text == "DisjointClasses") {
            reject_annotations();
            std::vector<std::string> names;
            while (peek().kind != Tok::RParen) {
                const Token& t = peek();
                if (t.kind != Tok::Iri && t.kind != Tok::PName) {
                    if (t.kind == Tok::Keyword)
                        throw UnsupportedConstruct("DisjointClasses over complex class expressions", t.line);
                    fail(t, "expected a class" + describe(t));
                }
                names.push_back(class_name(take()));
            }
            if (names.size() < 2)
                fail(peek(), "DisjointClasses needs at least two classes");
            if (names.size() > 2)
                throw UnsupportedConstruct("DisjointClasses with more than two classes", kw.line);
            out.push_back(DisjointClasses{names[0], names[1]});
        } else if (kw.text == "ClassAssertion") {
            reject_annotations();
            if (peek().kind == Tok::Keyword)
                throw UnsupportedConstruct("ClassAssertion of a complex class expression", peek().line);
            auto cls = class_name(take());
            auto individual = local_name(take(), "an individual");
            out.push_back(ClassAssertion{std::move(cls), std::move(individual)});
        } else if (kw.text == "ObjectPropertyDomain" || kw.text == "ObjectPropertyRange") {
            // Stored in GCI form: domain as (R some Thing) SubClassOf A, range as Thing SubClassOf (R only B).
            reject_annotations();
            auto p = object_property();
            auto c = class_expression();
            if (kw.text == "ObjectPropertyDomain")
                out.push_back(SubClassOf{ce::some(std::move(p), ce::thing()), std::move(c)});
            else
                out.push_back(SubClassOf{ce::thing(), ce::only(std::move(p), std::move(c))});
        } else if (kw.text == "DataPropertyDomain" || kw.text == "DataPropertyRange") {
            reject_annotations();
            auto q = local_name(take(), "a data property");
            if (kw.text == "DataPropertyDomain")
                out.push_back(SubClassOf{ce::data_some(std::move(q), ce::top_datatype()), class_expression()});
            else
                out.push_back(SubClassOf{ce::thing(), ce::data_only(std::move(q), data_range())});
        } else {
            fail(kw, "unknown axiom '" + kw.text + "'");
        }
        expect(Tok::RParen, "')'");
        for (const auto& a : out)
            o.add(a);
        return out;
    }

    void reject_annotations() {
        if (peek_keyword("Annotation"))
            throw UnsupportedConstruct("axiom annotation", peek().line);
    }

    void declaration(Ontology& o) {
        reject_annotations();
        const Token& kind = expect(Tok::Keyword, "an entity type");
        expect(Tok::LParen, "'('");
        const Token& entity = take();
        if (kind.text == "Class") {
            o.declare({EntityKind::Class, class_name(entity)});
        } else if (kind.text == "ObjectProperty") {
            o.declare({EntityKind::ObjectProperty, local_name(entity, "an object property")});
        } else if (kind.text == "DataProperty") {
            o.declare({EntityKind::DataProperty, local_name(entity, "a data property")});
        } else if (kind.text == "NamedIndividual") {
            o.declare({EntityKind::NamedIndividual, local_name(entity, "an individual")});
        } else if (kind.text == "Datatype") {
            auto r = resolve(entity);
            if (r.kind == Resolved::Xsd)
                o.declare({EntityKind::Datatype, r.value});
            else if (r.kind == Resolved::Foreign || r.kind == Resolved::Local)
                o.declare({EntityKind::Datatype, "<" + expand(entity) + ">"});
            else
                fail(entity, "'" + entity.text + "' cannot be declared as a datatype");
        } else if (kind.text == "AnnotationProperty") {
            throw UnsupportedConstruct("Declaration(AnnotationProperty)", kind.line);
        } else {
            fail(kind, "unknown entity type '" + kind.text + "'");
        }
        expect(Tok::RParen, "')'");
    }

    ObjectPropertyExpr object_property() {
        if (peek_keyword("ObjectInverseOf")) {
            take();
            expect(Tok::LParen, "'('");
            const Token& t = take();
            if (t.kind == Tok::Keyword)
                throw UnsupportedConstruct("nested ObjectInverseOf", t.line);
            auto n = local_name(t, "an object property");
            expect(Tok::RParen, "')'");
            return ce::inverse(std::move(n));
        }
        return ce::prop(local_name(take(), "an object property"));
    }

    unsigned cardinality() {
        const Token& t = expect(Tok::Number, "a cardinality");
        unsigned n = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc())
            fail(t, "cardinality out of range");
        return n;
    }

    ClassExpression class_expression() {
        const Token& t = peek();
        if (t.kind == Tok::Iri || t.kind == Tok::PName) {
            take();
            auto r = resolve(t);
            switch (r.kind) {
            case Resolved::Thing: return ce::thing();
            case Resolved::Local: return ce::named(r.value);
            case Resolved::Nothing: throw UnsupportedConstruct("owl:Nothing", t.line);
            case Resolved::Foreign:
                throw UnsupportedConstruct("class <" + r.value + "> outside the default namespace", t.line);
            default: fail(t, "'" + t.text + "' is not a class");
            }
        }
        if (t.kind != Tok::Keyword)
            fail(t, "expected a class expression" + describe(t));
        take();
        if (unsupported_keywords().contains(t.text))
            throw UnsupportedConstruct(t.text, t.line);
        expect(Tok::LParen, "'('");

        std::optional<ClassExpression> result;
        if (t.text == "ObjectSomeValuesFrom" || t.text == "ObjectAllValuesFrom") {
            auto p = object_property();
            auto filler = class_expression();
            result = t.text == "ObjectSomeValuesFrom" ? ce::some(std::move(p), std::move(filler))
                                                      : ce::only(std::move(p), std::move(filler));
        } else if (t.text == "ObjectMaxCardinality") {
            auto n = cardinality();
            auto p = object_property();
            // The filler is optional; an unqualified restriction reads as owl:Thing.
            auto filler = peek().kind == Tok::RParen ? ce::thing() : class_expression();
            result = ce::max(n, std::move(p), std::move(filler));
        } else if (t.text == "ObjectOneOf") {
            auto individual = local_name(take(), "an individual");
            if (peek().kind != Tok::RParen)
                throw UnsupportedConstruct("ObjectOneOf with more than one individual", t.line);
            result = ce::nominal(std::move(individual));
        } else if (t.text == "DataSomeValuesFrom" || t.text == "DataAllValuesFrom") {
            auto q = local_name(take(), "a data property");
            if (peek().kind == Tok::PName || peek().kind == Tok::Iri) {
                // A second property name means an n-ary data restriction.
                auto r = resolve(peek());
                if (r.kind == Resolved::Local)
                    throw UnsupportedConstruct(t.text + " over several data properties", t.line);
            }
            auto range = data_range();
            result = t.text == "DataSomeValuesFrom" ? ce::data_some(std::move(q), std::move(range))
                                                    : ce::data_only(std::move(q), std::move(range));
        } else if (t.text == "DataMaxCardinality") {
            auto n = cardinality();
            auto q = local_name(take(), "a data property");
            auto range = peek().kind == Tok::RParen ? ce::top_datatype() : data_range();
            result = ce::data_max(n, std::move(q), std::move(range));
        } else {
            fail(t, "unknown class expression '" + t.text + "'");
        }
        expect(Tok::RParen, "')'");
        return *result;
    }

    std::string datatype_name(const Token& t) {
        auto r = resolve(t);
        switch (r.kind) {
        case Resolved::Xsd: return r.value;
        case Resolved::Foreign:
        case Resolved::Local: return "<" + expand(t) + ">";
        default: fail(t, "'" + t.text + "' is not a datatype");
        }
    }

    DataRange data_range() {
        const Token& t = peek();
        if (t.kind == Tok::Iri || t.kind == Tok::PName) {
            take();
            if (resolve(t).kind == Resolved::TopDatatype)
                return ce::top_datatype();
            return ce::datatype(datatype_name(t));
        }
        if (t.kind != Tok::Keyword)
            fail(t, "expected a data range" + describe(t));
        take();
        if (unsupported_keywords().contains(t.text))
            throw UnsupportedConstruct(t.text, t.line);
        if (t.text != "DataOneOf")
            fail(t, "unknown data range '" + t.text + "'");
        expect(Tok::LParen, "'('");
        auto value = literal_value();
        if (peek().kind != Tok::RParen)
            throw UnsupportedConstruct("DataOneOf with more than one literal", t.line);
        take();
        return ce::data_nominal(std::move(value));
    }

    Literal literal_value() {
        const Token& s = expect(Tok::String, "a literal");
        if (peek().kind == Tok::LangTag)
            throw UnsupportedConstruct("language-tagged literal", peek().line);
        if (peek().kind != Tok::Caret)
            return {s.text, "string"};
        take();
        const Token& dt = take();
        if (resolve(dt).kind == Resolved::TopDatatype)
            fail(dt, "rdfs:Literal is not a literal datatype");
        return {s.text, datatype_name(dt)};
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    PrefixEnvironment env_;
    std::map<std::string, std::string> prefixes_;
};

}  // namespace

Ontology parse_functional(std::string_view document) { return Parser(document, PrefixEnvironment{}).document(); }

Axiom parse_functional_axiom(std::string_view text, const PrefixEnvironment& env) {
    return Parser(text, env).single_axiom();
}

}  // namespace owlax
