#include "owlax/service.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "owlax/syntax.hpp"

namespace owlax {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string new_session_id() {
    static std::mutex mutex;
    static std::mt19937_64 rng{std::random_device{}()};
    std::lock_guard lock(mutex);
    std::ostringstream out;
    out << std::hex;
    for (int i = 0; i < 2; ++i) {
        auto v = rng();
        for (int b = 0; b < 16; ++b, v >>= 4)
            out << (v & 0xf);
    }
    return out.str();
}

bool is_session_id(const std::string& id) {
    return !id.empty() && id.size() <= 64 &&
           id.find_first_not_of("0123456789abcdef") == std::string::npos;
}

ojson findings_json(const std::vector<Finding>& findings) {
    ojson out = ojson::array();
    for (const auto& f : findings)
        out.push_back({{"code", f.code}, {"element", f.element}, {"message", f.message}});
    return out;
}

std::string report_json(const ValidationReport& r) {
    ojson out;
    out["errors"] = findings_json(r.errors);
    out["warnings"] = findings_json(r.warnings);
    return out.dump();
}

std::string error_json(const std::string& code, const std::string& message) {
    ojson out;
    out["error"] = code;
    out["message"] = message;
    return out.dump();
}

void reply(httplib::Response& res, int status, const std::string& body,
           const char* content_type = "application/json; charset=utf-8") {
    res.status = status;
    res.set_content(body, content_type);
}

std::string render_manchester_document(const Ontology& o) {
    std::string out;
    for (const auto& axiom : o.axioms())
        out += render_manchester(axiom, o.prefixes()) + "\n";
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Snapshots
// ---------------------------------------------------------------------------

std::string session_to_json(const SessionRecord& record) {
    ojson out;
    out["id"] = record.id;
    out["created"] = record.created_ms;
    out["updated"] = record.updated_ms;
    out["diagram"] = ojson::parse(diagram_to_json(record.state.diagram));
    out["ontology"] = render_functional(record.state.ontology);
    if (record.state.last_review)
        out["lastReview"] = ojson::parse(review_to_json(*record.state.last_review));
    else
        out["lastReview"] = nullptr;
    return out.dump(2) + "\n";
}

void session_from_json(std::string_view text, SessionRecord& record) {
    json j = json::parse(text.begin(), text.end());
    record.id = j.at("id").get<std::string>();
    record.created_ms = j.at("created").get<std::int64_t>();
    record.updated_ms = j.at("updated").get<std::int64_t>();
    record.state.diagram = diagram_from_json(j.at("diagram").dump());
    record.state.ontology = parse_functional(j.at("ontology").get<std::string>());
    if (j.at("lastReview").is_null())
        record.state.last_review.reset();
    else
        record.state.last_review = review_from_json(j.at("lastReview").dump(), record.state.ontology.prefixes());
}

// ---------------------------------------------------------------------------
// SessionStore
// ---------------------------------------------------------------------------

SessionStore::SessionStore(PrefixEnvironment env, std::optional<std::filesystem::path> state_dir)
    : env_(std::move(env)), state_dir_(std::move(state_dir)) {
    if (state_dir_) {
        std::filesystem::create_directories(*state_dir_);
        restore();
    }
}

void SessionStore::restore() {
    for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
        if (entry.path().extension() != ".json")
            continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto record = std::make_shared<SessionRecord>();
        try {
            session_from_json(buffer.str(), *record);
        } catch (const std::exception& e) {
            throw Error("BAD_SNAPSHOT", entry.path().string() + ": " + e.what());
        }
        if (record->id + ".json" != entry.path().filename().string() || !is_session_id(record->id))
            throw Error("BAD_SNAPSHOT", entry.path().string() + ": id does not match file name");
        sessions_.emplace(record->id, std::move(record));
    }
}

std::shared_ptr<SessionRecord> SessionStore::create() {
    auto record = std::make_shared<SessionRecord>();
    record->created_ms = record->updated_ms = now_ms();
    record->state.ontology = Ontology(env_);
    std::lock_guard lock(mutex_);
    do {
        record->id = new_session_id();
    } while (sessions_.contains(record->id));
    persist(*record);
    sessions_.emplace(record->id, record);
    return record;
}

std::shared_ptr<SessionRecord> SessionStore::find(const std::string& id) const {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

bool SessionStore::erase(const std::string& id) {
    std::shared_ptr<SessionRecord> record;
    {
        std::lock_guard lock(mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end())
            return false;
        record = std::move(it->second);
        sessions_.erase(it);
    }
    std::unique_lock session_lock(record->mutex);
    if (state_dir_)
        std::filesystem::remove(*state_dir_ / (id + ".json"));
    return true;
}

std::vector<std::string> SessionStore::ids() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [id, record] : sessions_)
        out.push_back(id);
    return out;
}

void SessionStore::persist(const SessionRecord& record) const {
    if (!state_dir_)
        return;
    const auto target = *state_dir_ / (record.id + ".json");
    const auto temp = *state_dir_ / (record.id + ".json.tmp");
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        out << session_to_json(record);
        if (!out)
            throw Error("IO_ERROR", "cannot write " + temp.string());
    }
    std::filesystem::rename(temp, target);
}

// ---------------------------------------------------------------------------
// HTTP
// ---------------------------------------------------------------------------

struct Service::Impl {
    ServiceConfig config;
    SessionStore store;
    httplib::Server server;

    explicit Impl(ServiceConfig c) : config(std::move(c)), store(config.prefixes, config.state_dir) { routes(); }

    // Looks the session up or replies 404.
    std::shared_ptr<SessionRecord> session(const httplib::Request& req, httplib::Response& res) {
        auto record = store.find(req.matches[1]);
        if (!record)
            reply(res, 404, error_json("UNKNOWN_SESSION", "no session '" + std::string(req.matches[1]) + "'"));
        return record;
    }

    void touch(SessionRecord& record) {
        record.updated_ms = now_ms();
        store.persist(record);
    }

    void routes() {
        server.set_payload_max_length(config.max_body_bytes);
        if (config.static_dir)
            server.set_mount_point("/", config.static_dir->string());

        server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
            std::string message = "internal error";
            try {
                std::rethrow_exception(ep);
            } catch (const std::exception& e) {
                message = e.what();
            } catch (...) {
            }
            reply(res, 500, error_json("INTERNAL", message));
        });

        server.Post("/session", [this](const httplib::Request&, httplib::Response& res) {
            auto record = store.create();
            ojson out;
            out["id"] = record->id;
            reply(res, 201, out.dump());
        });

        server.Delete(R"(/session/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            if (!store.erase(req.matches[1]))
                reply(res, 404, error_json("UNKNOWN_SESSION", "no session '" + std::string(req.matches[1]) + "'"));
            else
                res.status = 204;
        });

        server.Put(R"(/session/([^/]+)/diagram)", [this](const httplib::Request& req, httplib::Response& res) {
            auto record = session(req, res);
            if (!record)
                return;
            Diagram d;
            try {
                d = diagram_from_json(req.body);
            } catch (const DiagramFormatError& e) {
                reply(res, 400, error_json(e.code(), e.what()));
                return;
            }
            auto report = validate_diagram(d);
            std::unique_lock lock(record->mutex);
            record->state.diagram = std::move(d);
            record->state.last_review.reset();
            touch(*record);
            reply(res, 200, report_json(report));
        });

        server.Get(R"(/session/([^/]+)/diagram)", [this](const httplib::Request& req, httplib::Response& res) {
            auto record = session(req, res);
            if (!record)
                return;
            std::shared_lock lock(record->mutex);
            reply(res, 200, diagram_to_json(record->state.diagram));
        });

        server.Post(R"(/session/([^/]+)/candidates)", [this](const httplib::Request& req, httplib::Response& res) {
            auto record = session(req, res);
            if (!record)
                return;
            std::unique_lock lock(record->mutex);
            auto& state = record->state;
            std::vector<CandidateAxiom> candidates;
            try {
                candidates = generate(state.diagram);
            } catch (const InvalidDiagram& e) {
                reply(res, 409, report_json(e.report()));
                return;
            }
            state.last_review = merge_existing(candidates, state.ontology);
            touch(*record);
            reply(res, 200, review_to_json(*state.last_review));
        });

        server.Post(R"(/session/([^/]+)/integrate)", [this](const httplib::Request& req, httplib::Response& res) {
            auto record = session(req, res);
            if (!record)
                return;
            std::map<std::string, bool> decisions;
            try {
                auto body = json::parse(req.body.empty() ? std::string("{}") : req.body);
                if (!body.is_object())
                    throw std::invalid_argument("expected a JSON object mapping candidate ids to booleans");
                for (const auto& [id, accept] : body.items()) {
                    if (!accept.is_boolean())
                        throw std::invalid_argument("decision for '" + id + "' must be a boolean");
                    decisions[id] = accept.get<bool>();
                }
            } catch (const std::exception& e) {
                reply(res, 400, error_json("MALFORMED_DECISIONS", e.what()));
                return;
            }

            std::unique_lock lock(record->mutex);
            auto& state = record->state;
            if (!state.last_review) {
                reply(res, 409, error_json("NO_REVIEW", "generate candidates before integrating"));
                return;
            }
            ReviewList applied;
            try {
                applied = apply_selection(*state.last_review, decisions);
            } catch (const UnknownCandidateIds& e) {
                ojson out;
                out["error"] = e.code();
                out["ids"] = e.ids();
                reply(res, 422, out.dump());
                return;
            }
            Ontology result = integrate(applied, state.ontology);
            declare_entities(state.diagram, result);

            std::size_t added = 0, removed = 0;
            for (const auto& a : result.axioms())
                added += !state.ontology.contains(a);
            for (const auto& a : state.ontology.axioms())
                removed += !result.contains(a);
            state.ontology = std::move(result);
            state.last_review = std::move(applied);
            touch(*record);

            ojson out;
            out["added"] = added;
            out["removed"] = removed;
            out["total"] = state.ontology.size();
            reply(res, 200, out.dump());
        });

        server.Get(R"(/session/([^/]+)/ontology)", [this](const httplib::Request& req, httplib::Response& res) {
            auto record = session(req, res);
            if (!record)
                return;
            const std::string format = req.has_param("format") ? req.get_param_value("format") : "functional";
            if (format != "functional" && format != "manchester") {
                reply(res, 400, error_json("UNKNOWN_FORMAT", "format must be functional or manchester"));
                return;
            }
            std::shared_lock lock(record->mutex);
            const auto& o = record->state.ontology;
            reply(res, 200, format == "functional" ? render_functional(o) : render_manchester_document(o),
                  "text/plain; charset=utf-8");
        });

        // Import path for an already existing ontology.
        server.Put(R"(/session/([^/]+)/ontology)", [this](const httplib::Request& req, httplib::Response& res) {
            auto record = session(req, res);
            if (!record)
                return;
            Ontology o;
            try {
                o = parse_functional(req.body);
            } catch (const Error& e) {
                reply(res, 400, error_json(e.code(), e.what()));
                return;
            }
            std::unique_lock lock(record->mutex);
            record->state.ontology = std::move(o);
            record->state.last_review.reset();
            touch(*record);
            ojson out;
            out["total"] = record->state.ontology.size();
            reply(res, 200, out.dump());
        });
    }
};

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}
Service::~Service() = default;

int Service::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }
bool Service::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }
bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }
void Service::stop() { impl_->server.stop(); }
void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }
SessionStore& Service::store() { return impl_->store; }

}  // namespace owlax
