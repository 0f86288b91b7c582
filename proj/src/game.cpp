#include "sidon/game.hpp"

#include "sidon/bhg.hpp"
#include "sidon/density.hpp"

#include <algorithm>
#include <limits>

namespace sidon {

RefinementViolationError::RefinementViolationError(Natural position, bool expected_member)
    : Error("move disagrees with the locked pattern at position " + std::to_string(position) + " (expected "
            + (expected_member ? "member" : "non-member") + ")")
    , position_(position)
    , expected_member_(expected_member)
{}

HorizonRegressionError::HorizonRegressionError(Natural previous, Natural given)
    : Error("move horizon " + std::to_string(given) + " is below the locked horizon "
            + std::to_string(previous))
    , previous_(previous)
    , given_(given)
{}

Cylinder Cylinder::make(Natural k, NaturalSet members)
{
    if (!members.empty() && members.max() > k)
        throw InvalidCylinderError("cylinder member " + std::to_string(members.max())
                                   + " lies above the horizon " + std::to_string(k));
    return Cylinder{k, std::move(members)};
}

std::string Cylinder::to_string() const
{
    return "k=" + std::to_string(k) + " " + members.to_string();
}

std::optional<Natural> first_disagreement(const Cylinder& coarse, const Cylinder& fine)
{
    const Natural limit = std::min(coarse.k, fine.k);
    auto a = coarse.members.begin(), a_end = coarse.members.end();
    auto b = fine.members.begin(), b_end = fine.members.end();
    while (a != a_end && b != b_end) {
        if (*a == *b) {
            ++a;
            ++b;
            continue;
        }
        Natural pos = std::min(*a, *b);
        return pos <= limit ? std::optional(pos) : std::nullopt;
    }
    if (a != a_end && *a <= limit)
        return *a;
    if (b != b_end && *b <= limit)
        return *b;
    return std::nullopt;
}

void require_refinement(const Cylinder& coarse, const Cylinder& fine)
{
    if (fine.k < coarse.k)
        throw HorizonRegressionError(coarse.k, fine.k);
    if (auto pos = first_disagreement(coarse, fine))
        throw RefinementViolationError(*pos, coarse.members.contains(*pos));
}

std::string strategy_name(Strategy s)
{
    return s == Strategy::A ? "A" : "B";
}

Strategy parse_strategy(const std::string& text)
{
    if (text == "A" || text == "a")
        return Strategy::A;
    if (text == "B" || text == "b")
        return Strategy::B;
    throw PreconditionError("unknown strategy '" + text + "' (expected A or B)");
}

namespace {

Natural checked_affine(Natural mul, Natural v, Natural add)
{
    constexpr Natural top = std::numeric_limits<Natural>::max();
    if (mul != 0 && v > (top - add) / mul)
        throw ResourceLimitError("horizon arithmetic overflows 64 bits");
    return mul * v + add;
}

} // namespace

std::pair<Cylinder, GapBlock> strategy_a_response(Params p, const GrowthFunction& f, unsigned m,
                                                  const Cylinder& u, const GameConfig& config)
{
    GapBlock block;
    block.x = checked_affine(p.h, u.k + 1, 1);
    const Natural h_x = checked_affine(p.h, block.x, 0);
    const BigInt weight = round_weight(m);

    // t - h x walks upward one step per candidate, so a single streaming
    // counter supplies p_{<=h}(t - h x) for every t
    PartitionCounter partitions(p.h);
    const BigInt zero = 0;
    std::uint64_t examined = 0;
    for (Natural t = block.x + 1;; ++t) {
        if (++examined > config.t_search_cap)
            throw ResourceLimitError("strategy A horizon search exceeded " + std::to_string(config.t_search_cap)
                                     + " candidates from x = " + std::to_string(block.x));
        const BigInt& count = t >= h_x ? partitions.next() : zero;
        if (count >= weight * f(t)) {
            block.t = t;
            break;
        }
    }
    Cylinder answer = Cylinder::make(block.t, u.members.united(NaturalSet::interval(block.x, block.t)));
    return {std::move(answer), block};
}

std::pair<Cylinder, DenseBlock> strategy_b_response(unsigned m, const Cylinder& u)
{
    DenseBlock block;
    block.y = checked_affine(Natural(m) + 1, u.k, 1);
    Cylinder answer = Cylinder::make(block.y, u.members.united(NaturalSet::interval(u.k + 1, block.y)));
    return {std::move(answer), block};
}

bool AuditReport::all_passed() const
{
    return chain_ok && std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

GameSession GameSession::open(Params p, Strategy strategy, std::optional<GrowthFunction> f, Cylinder opening,
                              GameConfig config)
{
    Params::make(p.h, p.g);
    if (strategy == Strategy::A) {
        if (!f)
            throw PreconditionError("strategy A needs a growth function");
        f->check_arity(p.h);
    }
    // re-validate in case the caller assembled the cylinder by hand
    opening = Cylinder::make(opening.k, std::move(opening.members));
    GameSession s;
    s.params_ = p;
    s.strategy_ = strategy;
    s.growth_ = strategy == Strategy::A ? std::move(f) : std::nullopt;
    s.config_ = config;
    s.rounds_.push_back(Round{std::move(opening), std::nullopt, std::nullopt});
    return s;
}

GameSession::Turn GameSession::turn() const
{
    return rounds_.back().player2 ? Turn::player1 : Turn::player2;
}

std::size_t GameSession::completed_rounds() const
{
    return turn() == Turn::player1 ? rounds_.size() : rounds_.size() - 1;
}

const Cylinder& GameSession::last_cylinder() const
{
    const Round& r = rounds_.back();
    return r.player2 ? *r.player2 : r.player1;
}

const Cylinder& GameSession::respond()
{
    if (turn() != Turn::player2)
        throw OutOfTurnError("Player II has already answered round " + std::to_string(rounds_.size() - 1));
    Round& round = rounds_.back();
    const auto m = static_cast<unsigned>(rounds_.size() - 1);
    if (strategy_ == Strategy::A) {
        auto [answer, block] = strategy_a_response(params_, *growth_, m, round.player1, config_);
        round.player2 = std::move(answer);
        round.data = block;
    } else {
        auto [answer, block] = strategy_b_response(m, round.player1);
        round.player2 = std::move(answer);
        round.data = block;
    }
    return *round.player2;
}

void GameSession::player1_move(Cylinder move)
{
    if (turn() != Turn::player1)
        throw OutOfTurnError("Player II has not answered round " + std::to_string(rounds_.size() - 1) + " yet");
    move = Cylinder::make(move.k, std::move(move.members));
    require_refinement(last_cylinder(), move);
    rounds_.push_back(Round{std::move(move), std::nullopt, std::nullopt});
}

GameSession open_session(Params p, Strategy strategy, std::optional<GrowthFunction> f, Cylinder opening,
                         GameConfig config)
{
    return GameSession::open(p, strategy, std::move(f), std::move(opening), config);
}

const Cylinder& respond_strategy_a(GameSession& session)
{
    if (session.strategy() != Strategy::A)
        throw PreconditionError("session does not play strategy A");
    return session.respond();
}

const Cylinder& respond_strategy_b(GameSession& session)
{
    if (session.strategy() != Strategy::B)
        throw PreconditionError("session does not play strategy B");
    return session.respond();
}

void player1_move(GameSession& session, Cylinder move)
{
    session.player1_move(std::move(move));
}

LimitPrefix limit_prefix(const GameSession& session)
{
    if (session.completed_rounds() == 0)
        throw PreconditionError("no Player II response yet");
    const Cylinder& last = session.last_cylinder();
    return LimitPrefix{last.members, last.k};
}

namespace {

bool chain_is_valid(const GameSession& session)
{
    const Cylinder* previous = nullptr;
    for (const Round& r : session.rounds()) {
        for (const Cylinder* c : {&r.player1, r.player2 ? &*r.player2 : nullptr}) {
            if (c == nullptr)
                continue;
            if (!c->members.empty() && c->members.max() > c->k)
                return false;
            if (previous && (c->k < previous->k || first_disagreement(*previous, *c)))
                return false;
            previous = c;
        }
    }
    return true;
}

void audit_gap_round(const GameSession& session, const LimitPrefix& prefix, unsigned m, const Round& round,
                     const GapBlock& block, AuditReport& report)
{
    const unsigned h = session.params().h;
    const Natural k = round.player1.k;

    // sums of h elements <= k fall short of h(1 + k), and (k, x) is empty
    const Natural gap_target = h * (k + 1);
    BigInt gap_count = rep_count(prefix.members, h, gap_target);
    report.checks.push_back(AuditCheck{m,
                                       "zero_rep",
                                       gap_count == 0 && gap_target <= prefix.valid_up_to,
                                       {{"k", std::to_string(k)},
                                        {"x", std::to_string(gap_target)},
                                        {"r", gap_count.str()}}});

    BigInt count = rep_count(prefix.members, h, block.t);
    BigInt f_t = (*session.growth())(block.t);
    BigInt threshold = round_weight(m) * f_t;
    report.checks.push_back(AuditCheck{m,
                                       "growth",
                                       count >= threshold && block.t <= prefix.valid_up_to,
                                       {{"x_m", std::to_string(block.x)},
                                        {"t_m", std::to_string(block.t)},
                                        {"r", count.str()},
                                        {"w", round_weight(m).str()},
                                        {"f", f_t.str()},
                                        {"threshold", threshold.str()}}});
}

void audit_dense_round(const GameSession& session, const LimitPrefix& prefix, unsigned m, const Round& round,
                       const DenseBlock& block, std::optional<unsigned>& confirmed_round, AuditReport& report)
{
    const Params p = session.params();
    const Natural k = round.player1.k;
    const std::uint64_t inside = prefix.members.count_between(k + 1, block.y);
    Rational ratio{BigInt(inside), BigInt(block.y)};
    Rational bound{BigInt(m), BigInt(m) + 1};
    report.checks.push_back(AuditCheck{m,
                                       "density",
                                       ratio >= bound && block.y <= prefix.valid_up_to,
                                       {{"k", std::to_string(k)},
                                        {"y", std::to_string(block.y)},
                                        {"count", std::to_string(inside)},
                                        {"ratio", to_fraction_string(ratio)},
                                        {"bound", to_fraction_string(bound)}}});

    auto cert = counting_bound_certificate(prefix.members, k, block.y, p);
    AuditCheck check{m, "certificate", true, {}};
    if (!cert) {
        const std::uint64_t s = prefix.members.count_between(k + 1, block.y);
        check.values = {{"fired", "no"},
                        {"s", std::to_string(s)},
                        {"subsets", binomial(s, p.h).str()},
                        {"capacity", (BigInt(p.h) * p.g * block.y).str()}};
        report.checks.push_back(std::move(check));
        return;
    }
    check.values = {{"fired", "yes"},
                    {"s", std::to_string(cert->s)},
                    {"subsets", cert->subsets.str()},
                    {"capacity", cert->capacity.str()}};
    if (confirmed_round) {
        // the earlier, smaller prefix already fails, and B_h[g] passes to subsets
        check.values.emplace_back("confirmed_by_round", std::to_string(*confirmed_round));
    } else {
        Verdict v = is_bhg(prefix.members.truncated(block.y), p, session.config().limits);
        check.passed = !v.is_bhg;
        if (v.witness) {
            check.values.emplace_back("witness_x", std::to_string(v.witness->x));
            check.values.emplace_back("witness_r", v.witness->count.str());
            confirmed_round = m;
        }
    }
    report.checks.push_back(std::move(check));
}

} // namespace

AuditReport audit_transcript(const GameSession& session)
{
    AuditReport report;
    report.chain_ok = chain_is_valid(session);
    if (session.completed_rounds() == 0)
        return report;
    const LimitPrefix prefix = limit_prefix(session);
    std::optional<unsigned> confirmed_round;
    const auto& rounds = session.rounds();
    for (unsigned m = 0; m < rounds.size(); ++m) {
        const Round& r = rounds[m];
        if (!r.data)
            continue;
        if (const auto* gap = std::get_if<GapBlock>(&*r.data))
            audit_gap_round(session, prefix, m, r, *gap, report);
        else
            audit_dense_round(session, prefix, m, r, std::get<DenseBlock>(*r.data), confirmed_round, report);
    }
    return report;
}

} // namespace sidon
