#pragma once

#include "sidon/errors.hpp"
#include "sidon/growth.hpp"
#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"
#include "sidon/repcount.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sidon {

class InvalidCylinderError : public Error {
public:
    using Error::Error;
};

/// A Player I move does not agree with the previous pattern below its horizon.
class RefinementViolationError : public Error {
public:
    RefinementViolationError(Natural position, bool expected_member);
    Natural position() const { return position_; }
    bool expected_member() const { return expected_member_; }

private:
    Natural position_;
    bool expected_member_;
};

class HorizonRegressionError : public Error {
public:
    HorizonRegressionError(Natural previous, Natural given);
    Natural previous() const { return previous_; }
    Natural given() const { return given_; }

private:
    Natural previous_;
    Natural given_;
};

class OutOfTurnError : public Error {
public:
    using Error::Error;
};

/// The basic open set {A ⊆ N : A ∩ [0, k] = members}.
struct Cylinder {
    Natural k = 0;
    NaturalSet members;

    /// Throws InvalidCylinderError if some member exceeds k.
    static Cylinder make(Natural k, NaturalSet members);

    std::string to_string() const;

    friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

/// Smallest position <= coarse.k where the two patterns disagree.
std::optional<Natural> first_disagreement(const Cylinder& coarse, const Cylinder& fine);

/// Throws HorizonRegressionError or RefinementViolationError unless `fine` ⊆ `coarse`
/// as open sets.
void require_refinement(const Cylinder& coarse, const Cylinder& fine);

enum class Strategy { A, B };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& text);

struct GameConfig {
    /// Maximum number of candidates the strategy-A horizon search examines.
    std::uint64_t t_search_cap = 10'000'000;
    Limits limits;
};

/// Strategy A round data: the empty gap (k_m, x_m) and the full block [x_m, t_m].
struct GapBlock {
    Natural x = 0;
    Natural t = 0;
    friend bool operator==(const GapBlock&, const GapBlock&) = default;
};

/// Strategy B round data: the full block (k_m, y_m].
struct DenseBlock {
    Natural y = 0;
    friend bool operator==(const DenseBlock&, const DenseBlock&) = default;
};

using RoundData = std::variant<GapBlock, DenseBlock>;

struct Round {
    Cylinder player1;
    std::optional<Cylinder> player2;
    std::optional<RoundData> data;
    friend bool operator==(const Round&, const Round&) = default;
};

/// Round weight used by strategy A: the block must carry at least w_m f(t_m)
/// representations of t_m. w_m = m + 1 so that round 0 is already binding.
inline BigInt round_weight(unsigned m) { return BigInt(m) + 1; }

/// Player II's strategy-A answer to Player I's cylinder in round m:
/// x = h(1 + k) + 1 and the smallest t >= x + 1 with
/// p_{<=h}(t - h x) >= (m + 1) f(t); the answer pins F ∪ [x, t] on [0, t].
/// Pure. Throws ResourceLimitError once more than config.t_search_cap
/// candidates were examined.
std::pair<Cylinder, GapBlock> strategy_a_response(Params p, const GrowthFunction& f, unsigned m,
                                                  const Cylinder& u, const GameConfig& config = {});

/// Player II's strategy-B answer: y = (m + 1) k + 1; pins F ∪ (k, y] on [0, y].
std::pair<Cylinder, DenseBlock> strategy_b_response(unsigned m, const Cylinder& u);

struct AuditCheck {
    unsigned round = 0;
    std::string name;
    bool passed = false;
    /// Computed quantities, exact, rendered as decimal strings or "p/q".
    std::vector<std::pair<std::string, std::string>> values;
};

struct AuditReport {
    bool chain_ok = true;
    std::vector<AuditCheck> checks;

    bool all_passed() const;
};

/// Banach–Mazur game session between a scripted or human Player I and one of
/// Player II's strategies. Strict alternation: Player I opens, every Player I
/// move is answered by respond().
class GameSession {
public:
    enum class Turn { player1, player2 };

    /// Throws PreconditionError when strategy A lacks a growth function or the
    /// function is not admissible for h.
    static GameSession open(Params p, Strategy strategy, std::optional<GrowthFunction> f,
                            Cylinder opening, GameConfig config = {});

    Params params() const { return params_; }
    Strategy strategy() const { return strategy_; }
    const std::optional<GrowthFunction>& growth() const { return growth_; }
    const GameConfig& config() const { return config_; }
    const std::vector<Round>& rounds() const { return rounds_; }
    Turn turn() const;
    /// Rounds that have a Player II response.
    std::size_t completed_rounds() const;
    /// The most recent cylinder of either player.
    const Cylinder& last_cylinder() const;

    /// Player II answers the pending Player I cylinder. Throws OutOfTurnError.
    const Cylinder& respond();

    /// Validates and records a Player I move. Throws OutOfTurnError,
    /// HorizonRegressionError or RefinementViolationError; the session is
    /// unchanged on error.
    void player1_move(Cylinder move);

private:
    GameSession() = default;

    Params params_;
    Strategy strategy_ = Strategy::A;
    std::optional<GrowthFunction> growth_;
    GameConfig config_;
    std::vector<Round> rounds_;
};

GameSession open_session(Params p, Strategy strategy, std::optional<GrowthFunction> f, Cylinder opening,
                         GameConfig config = {});
const Cylinder& respond_strategy_a(GameSession& session);
const Cylinder& respond_strategy_b(GameSession& session);
void player1_move(GameSession& session, Cylinder move);

/// The pattern fixed so far: every set in the intersection of all cylinders
/// agrees with `members` on [0, valid_up_to].
struct LimitPrefix {
    NaturalSet members;
    Natural valid_up_to = 0;
};

/// Throws PreconditionError before Player II's first response.
LimitPrefix limit_prefix(const GameSession& session);

/// Re-checks the refinement chain and every round's guarantee on the limit prefix.
AuditReport audit_transcript(const GameSession& session);

} // namespace sidon
