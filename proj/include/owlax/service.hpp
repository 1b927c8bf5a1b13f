#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "owlax/session.hpp"

namespace owlax {

struct SessionRecord {
    std::string id;
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;
    SessionState state;
    // Writers take it exclusively; read-only endpoints share it.
    mutable std::shared_mutex mutex;
};

/// Snapshot form of a session: one JSON document per session.
std::string session_to_json(const SessionRecord& record);
void session_from_json(std::string_view text, SessionRecord& record);

/// Thread-safe registry of review sessions, optionally mirrored to a state
/// directory as `<id>.json` snapshots.
class SessionStore {
public:
    explicit SessionStore(PrefixEnvironment env = {}, std::optional<std::filesystem::path> state_dir = std::nullopt);

    std::shared_ptr<SessionRecord> create();
    std::shared_ptr<SessionRecord> find(const std::string& id) const;
    bool erase(const std::string& id);
    std::vector<std::string> ids() const;

    /// Writes the record's snapshot. Callers hold the record's lock.
    void persist(const SessionRecord& record) const;

    const PrefixEnvironment& prefixes() const { return env_; }

private:
    void restore();

    PrefixEnvironment env_;
    std::optional<std::filesystem::path> state_dir_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<SessionRecord>> sessions_;
};

struct ServiceConfig {
    PrefixEnvironment prefixes;
    std::optional<std::filesystem::path> state_dir;
    std::optional<std::filesystem::path> static_dir;
    std::size_t max_body_bytes = 4 * 1024 * 1024;
};

/// REST facade over a SessionStore.
class Service {
public:
    explicit Service(ServiceConfig config);
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds to an ephemeral port and returns it, or -1.
    int bind_to_any_port(const std::string& host);
    bool bind(const std::string& host, int port);
    /// Blocks serving requests until stop().
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

    SessionStore& store();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace owlax
