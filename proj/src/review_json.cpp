#include <set>

#include <json.hpp>

#include "owlax/session.hpp"
#include "owlax/syntax.hpp"

namespace owlax {

std::string review_to_json(const ReviewList& review) {
    using ojson = nlohmann::ordered_json;
    ojson entries = ojson::array();
    for (const auto& e : review.entries) {
        ojson j;
        j["id"] = e.candidate.id;
        j["axiom"] = to_functional(e.candidate.axiom);
        j["manchester"] = e.manchester;
        if (e.candidate.schema)
            j["schema"] = to_string(*e.candidate.schema);
        else
            j["schema"] = nullptr;
        j["status"] = e.candidate.status == CandidateStatus::Existing ? "existing" : "new";
        j["accept"] = e.accept;
        entries.push_back(std::move(j));
    }
    ojson root;
    root["entries"] = std::move(entries);
    return root.dump(2);
}

ReviewList review_from_json(std::string_view text, const PrefixEnvironment& env) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ReviewFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("entries") || !root["entries"].is_array() || root.size() != 1)
        throw ReviewFormatError("review: expected {\"entries\": [...]}");

    static const std::set<std::string> allowed = {"id", "axiom", "manchester", "schema", "status", "accept"};
    ReviewList review;
    std::set<std::string> ids;
    const auto& entries = root["entries"];
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "entries[" + std::to_string(i) + "]";
        const json& j = entries[i];
        if (!j.is_object())
            throw ReviewFormatError(where + ": expected an object");
        for (const auto& [key, value] : j.items())
            if (!allowed.contains(key))
                throw ReviewFormatError(where + ": unknown field '" + key + "'");
        auto str = [&](const char* key) {
            if (!j.contains(key) || !j[key].is_string())
                throw ReviewFormatError(where + ": field '" + key + "' must be a string");
            return j[key].get<std::string>();
        };

        const std::string id = str("id");
        if (!ids.insert(id).second)
            throw ReviewFormatError(where + ": duplicate id '" + id + "'");

        std::optional<Axiom> axiom;
        try {
            axiom = parse_functional_axiom(str("axiom"), env);
        } catch (const Error& e) {
            throw ReviewFormatError(where + ": field 'axiom': " + e.what());
        }

        std::optional<SchemaCode> schema;
        if (j.contains("schema") && !j["schema"].is_null()) {
            if (!j["schema"].is_string() || !(schema = schema_from_string(j["schema"].get<std::string>())))
                throw ReviewFormatError(where + ": field 'schema' has an unknown value");
        }

        const std::string status = str("status");
        if (status != "new" && status != "existing")
            throw ReviewFormatError(where + ": field 'status' must be \"new\" or \"existing\"");
        if (!j.contains("accept") || !j["accept"].is_boolean())
            throw ReviewFormatError(where + ": field 'accept' must be a boolean");

        CandidateAxiom c{id, *axiom, schema, {},
                         status == "existing" ? CandidateStatus::Existing : CandidateStatus::New};
        std::string manchester = j.contains("manchester") && j["manchester"].is_string()
                                     ? j["manchester"].get<std::string>()
                                     : render_manchester(c.axiom, env);
        review.entries.push_back({std::move(c), std::move(manchester), j["accept"].get<bool>()});
    }
    return review;
}

}  // namespace owlax
