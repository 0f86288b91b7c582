#include "sidon/service.hpp"

#include <iomanip>
#include <istream>
#include <sstream>

namespace sidon {

namespace {

ServiceResponse error_response(int status, const std::string& code, const std::string& message, json extra = {})
{
    json body = extra.is_object() ? std::move(extra) : json::object();
    body["error"] = code;
    body["message"] = message;
    return ServiceResponse{status, std::move(body)};
}

ServiceResponse unknown_session(const std::string& id)
{
    return error_response(404, "unknown_session", "no session with id '" + id + "'");
}

json round_answer(const GameSession& s)
{
    const auto m = s.rounds().size() - 1;
    json r = s.rounds().back();
    return json{{"round", m}, {"response", r.at("player2")}, {"data", r.at("data")}};
}

} // namespace

SessionService::SessionService(ServiceConfig config)
    : config_(std::move(config))
    , rng_(config_.seed ? *config_.seed : std::random_device{}())
{
    if (config_.journal_path) {
        journal_.open(*config_.journal_path, std::ios::app);
        if (!journal_)
            throw PreconditionError("cannot open journal '" + *config_.journal_path + "'");
    }
}

std::string SessionService::next_id()
{
    std::lock_guard lock(rng_mutex_);
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << rng_();
    return out.str();
}

void SessionService::append_journal(const json& record)
{
    if (!journal_.is_open())
        return;
    std::lock_guard lock(journal_mutex_);
    journal_ << record.dump() << '\n';
    journal_.flush();
}

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) const
{
    std::shared_lock lock(store_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionService::session_count() const
{
    std::shared_lock lock(store_mutex_);
    return sessions_.size();
}

ServiceResponse SessionService::create(const json& request)
{
    std::string id;
    do {
        id = next_id();
    } while (find(id));
    return create_with_id(std::move(id), request);
}

ServiceResponse SessionService::create_with_id(std::string id, const json& request)
{
    std::optional<GameSession> session;
    try {
        Params params = request.get<Params>();
        Strategy strategy = parse_strategy(request.value("strategy", std::string("A")));
        std::optional<GrowthFunction> f;
        if (request.contains("f"))
            f = growth_from_json(request.at("f"));
        if (!request.contains("opening"))
            throw PreconditionError("missing field 'opening'");
        Cylinder opening = request.at("opening").get<Cylinder>();
        session = GameSession::open(params, strategy, std::move(f), std::move(opening), config_.game);
        session->respond();
    } catch (const InvalidCylinderError& e) {
        return error_response(400, "invalid_cylinder", e.what());
    } catch (const ResourceLimitError& e) {
        return error_response(422, "resource_limit", e.what());
    } catch (const Error& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const json::exception& e) {
        return error_response(400, "bad_request", e.what());
    }

    json body = round_answer(*session);
    body["id"] = id;
    {
        std::unique_lock lock(store_mutex_);
        if (sessions_.count(id))
            return error_response(409, "duplicate_session", "session id '" + id + "' already exists");
        sessions_.emplace(id, std::make_shared<Entry>(std::move(*session)));
        append_journal(json{{"op", "create"}, {"id", id}, {"request", request}});
    }
    return ServiceResponse{201, std::move(body)};
}

ServiceResponse SessionService::submit(const std::string& id, const json& request)
{
    auto entry = find(id);
    if (!entry)
        return unknown_session(id);
    std::lock_guard lock(entry->mutex);
    GameSession& live = entry->session;
    const std::size_t expected = live.rounds().size();
    if (live.turn() != GameSession::Turn::player1)
        return error_response(409, "out_of_turn", "Player II has not answered yet",
                              json{{"expected_round", expected - 1}});
    if (request.contains("round")) {
        const json& r = request.at("round");
        if (!r.is_number_integer() || r.get<long long>() != static_cast<long long>(expected))
            return error_response(409, "out_of_turn", "round " + r.dump() + " is not the open round",
                                  json{{"expected_round", expected}});
    }

    GameSession next = live;
    try {
        next.player1_move(request.get<Cylinder>());
        next.respond();
    } catch (const RefinementViolationError& e) {
        return error_response(400, "refinement_violation", e.what(),
                              json{{"position", e.position()}, {"expected_member", e.expected_member()}});
    } catch (const HorizonRegressionError& e) {
        return error_response(400, "horizon_regression", e.what(),
                              json{{"previous", e.previous()}, {"given", e.given()}});
    } catch (const InvalidCylinderError& e) {
        return error_response(400, "invalid_cylinder", e.what());
    } catch (const ResourceLimitError& e) {
        return error_response(422, "resource_limit", e.what());
    } catch (const Error& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const json::exception& e) {
        return error_response(400, "bad_request", e.what());
    }
    live = std::move(next);
    append_journal(json{{"op", "move"}, {"id", id}, {"request", request}});

    json body = round_answer(live);
    body["id"] = id;
    body["accepted"] = true;
    body["audit"] = audit_transcript(live);
    return ServiceResponse{200, std::move(body)};
}

ServiceResponse SessionService::fetch(const std::string& id) const
{
    auto entry = find(id);
    if (!entry)
        return unknown_session(id);
    std::lock_guard lock(entry->mutex);
    json body = entry->session;
    body["id"] = id;
    return ServiceResponse{200, std::move(body)};
}

ServiceResponse SessionService::audit(const std::string& id) const
{
    auto entry = find(id);
    if (!entry)
        return unknown_session(id);
    std::lock_guard lock(entry->mutex);
    json body = audit_transcript(entry->session);
    body["id"] = id;
    return ServiceResponse{200, std::move(body)};
}

ServiceResponse SessionService::prefix(const std::string& id) const
{
    auto entry = find(id);
    if (!entry)
        return unknown_session(id);
    std::lock_guard lock(entry->mutex);
    const GameSession& s = entry->session;
    LimitPrefix pre = limit_prefix(s);
    json body{{"id", id}, {"members", pre.members.vector()}, {"valid_up_to", pre.valid_up_to}, {"h", s.params().h}};

    json thresholds = json::array();
    for (std::size_t m = 0; m < s.rounds().size(); ++m) {
        const auto& data = s.rounds()[m].data;
        if (!data)
            continue;
        if (const auto* gap = std::get_if<GapBlock>(&*data))
            thresholds.push_back(json{{"round", m},
                                      {"t", gap->t},
                                      {"threshold", (round_weight(static_cast<unsigned>(m)) * (*s.growth())(gap->t)).str()}});
    }
    body["thresholds"] = thresholds;

    if (pre.valid_up_to > config_.prefix_table_max) {
        body["reps_error"] = "valid_up_to exceeds the configured table limit "
                             + std::to_string(config_.prefix_table_max);
        return ServiceResponse{200, std::move(body)};
    }
    try {
        RepTable table = rep_table(pre.members, s.params().h, pre.valid_up_to, s.config().limits);
        json reps = json::array();
        for (const auto& c : table.counts)
            reps.push_back(c.str());
        body["reps"] = std::move(reps);
    } catch (const ResourceLimitError& e) {
        body["reps_error"] = e.what();
    }
    return ServiceResponse{200, std::move(body)};
}

ServiceResponse SessionService::handle(const std::string& method, const std::string& path, const std::string& body)
{
    std::vector<std::string> parts;
    std::stringstream in(path);
    for (std::string piece; std::getline(in, piece, '/');) {
        if (!piece.empty())
            parts.push_back(piece);
    }
    if (parts.empty() || parts[0] != "sessions")
        return error_response(404, "not_found", "no route for " + path);

    auto parse_body = [&](json& out) -> std::optional<ServiceResponse> {
        try {
            out = body.empty() ? json::object() : json::parse(body);
        } catch (const json::parse_error& e) {
            return error_response(400, "bad_request", std::string("malformed JSON: ") + e.what());
        }
        if (!out.is_object())
            return error_response(400, "bad_request", "request body must be a JSON object");
        return std::nullopt;
    };

    if (parts.size() == 1) {
        if (method != "POST")
            return error_response(405, "method_not_allowed", method + " " + path);
        json request;
        if (auto err = parse_body(request))
            return *err;
        return create(request);
    }
    const std::string& id = parts[1];
    if (parts.size() == 2) {
        if (method != "GET")
            return error_response(405, "method_not_allowed", method + " " + path);
        return fetch(id);
    }
    if (parts.size() == 3) {
        if (parts[2] == "moves") {
            if (method != "POST")
                return error_response(405, "method_not_allowed", method + " " + path);
            json request;
            if (auto err = parse_body(request))
                return *err;
            return submit(id, request);
        }
        if (method != "GET")
            return error_response(405, "method_not_allowed", method + " " + path);
        if (parts[2] == "audit")
            return audit(id);
        if (parts[2] == "prefix")
            return prefix(id);
    }
    return error_response(404, "not_found", "no route for " + path);
}

std::vector<ServiceResponse> SessionService::replay(std::istream& journal, ServiceConfig config)
{
    config.journal_path.reset();
    SessionService service(std::move(config));
    std::vector<ServiceResponse> responses;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(journal, line)) {
        ++line_no;
        if (line.empty())
            continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw PreconditionError("journal line " + std::to_string(line_no) + ": " + e.what());
        }
        const std::string op = record.value("op", "");
        const std::string id = record.value("id", "");
        if (op == "create")
            responses.push_back(service.create_with_id(id, record.at("request")));
        else if (op == "move")
            responses.push_back(service.submit(id, record.at("request")));
        else
            throw PreconditionError("journal line " + std::to_string(line_no) + ": unknown op '" + op + "'");
    }
    return responses;
}

} // namespace sidon
