#pragma once

#include "sidon/game.hpp"
#include "sidon/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

namespace sidon {

struct ServiceConfig {
    GameConfig game;
    /// Append-only JSON-lines journal of accepted requests.
    std::optional<std::string> journal_path;
    /// Seeds the session-id generator; random when absent.
    std::optional<std::uint64_t> seed;
    /// Largest valid_up_to for which the prefix endpoint returns a rep table.
    Natural prefix_table_max = 200'000;
};

struct ServiceResponse {
    int status = 200;
    json body;
};

/// In-memory store of game sessions behind the HTTP API. Requests against
/// one session are serialized; distinct sessions proceed independently.
///
/// Routes (see handle()):
///   POST /sessions                 create, returns id and Player II's answer
///   GET  /sessions/{id}            session state
///   POST /sessions/{id}/moves      Player I move, returns answer and audit
///   GET  /sessions/{id}/audit      audit report
///   GET  /sessions/{id}/prefix     limit prefix with r_{A,h} over [0, valid_up_to]
class SessionService {
public:
    explicit SessionService(ServiceConfig config = {});

    /// {"h", "g", "strategy", "f", "opening": {"k", "members"}}
    ServiceResponse create(const json& request);
    /// {"k", "members", optional "round"}. A "round" other than the one
    /// awaiting Player I yields 409.
    ServiceResponse submit(const std::string& id, const json& request);
    ServiceResponse fetch(const std::string& id) const;
    ServiceResponse audit(const std::string& id) const;
    ServiceResponse prefix(const std::string& id) const;

    ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

    std::size_t session_count() const;

    /// Feeds every journal record through a fresh service built from `config`
    /// (its journal_path is ignored) and returns the responses in order.
    static std::vector<ServiceResponse> replay(std::istream& journal, ServiceConfig config);

private:
    struct Entry {
        std::mutex mutex;
        GameSession session;
        explicit Entry(GameSession s)
            : session(std::move(s))
        {}
    };

    ServiceResponse create_with_id(std::string id, const json& request);
    std::shared_ptr<Entry> find(const std::string& id) const;
    std::string next_id();
    void append_journal(const json& record);

    ServiceConfig config_;
    mutable std::shared_mutex store_mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::mutex rng_mutex_;
    std::mt19937_64 rng_;
    std::mutex journal_mutex_;
    std::ofstream journal_;
};

} // namespace sidon
