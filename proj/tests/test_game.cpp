#include "adversary.hpp"

#include "sidon/game.hpp"

#include <doctest.h>

using namespace sidon;

namespace {

Cylinder cyl(Natural k, const std::string& members)
{
    return Cylinder::make(k, NaturalSet::parse(members));
}

const AuditCheck& find_check(const AuditReport& r, unsigned round, const std::string& name)
{
    for (const auto& c : r.checks) {
        if (c.round == round && c.name == name)
            return c;
    }
    FAIL("missing check " << name << " in round " << round);
    throw std::logic_error("unreachable");
}

std::string value_of(const AuditCheck& c, const std::string& key)
{
    for (const auto& [k, v] : c.values) {
        if (k == key)
            return v;
    }
    return "";
}

} // namespace

TEST_CASE("cylinders")
{
    CHECK_NOTHROW(cyl(1, "0"));
    CHECK_NOTHROW(cyl(0, ""));
    CHECK_THROWS_AS(cyl(1, "0,3"), InvalidCylinderError);
    CHECK(cyl(16, "0,5..16").to_string() == "k=16 {0,5..16}");
}

TEST_CASE("refinement checks name the first disagreement")
{
    Cylinder locked = cyl(16, "0,5..16");
    CHECK_NOTHROW(require_refinement(locked, cyl(20, "0,5..16,18")));
    CHECK_NOTHROW(require_refinement(locked, locked));
    try {
        require_refinement(locked, cyl(20, "0,2,5..16"));
        FAIL("expected a refinement violation");
    } catch (const RefinementViolationError& e) {
        CHECK(e.position() == 2);
        CHECK_FALSE(e.expected_member());
    }
    try {
        require_refinement(locked, cyl(20, "0,5..10,12..16"));
        FAIL("expected a refinement violation");
    } catch (const RefinementViolationError& e) {
        CHECK(e.position() == 11);
        CHECK(e.expected_member());
    }
    CHECK_THROWS_AS(require_refinement(locked, cyl(10, "0,5..10")), HorizonRegressionError);
    CHECK_FALSE(first_disagreement(cyl(3, "1"), cyl(9, "1,4,9")));
}

TEST_CASE("open_session")
{
    auto s = open_session(Params{2, 1}, Strategy::A, GrowthFunction::sqrt(), cyl(1, "0"));
    CHECK(s.turn() == GameSession::Turn::player2);
    CHECK(s.completed_rounds() == 0);
    CHECK_NOTHROW(open_session(Params{2, 1}, Strategy::B, std::nullopt, cyl(0, "")));
    CHECK_THROWS_AS(open_session(Params{2, 1}, Strategy::A, std::nullopt, cyl(1, "0")), PreconditionError);
    CHECK_THROWS_AS(open_session(Params{2, 1}, Strategy::B, std::nullopt, Cylinder{1, NaturalSet{0, 3}}),
                    InvalidCylinderError);
    CHECK_THROWS_AS(open_session(Params{2, 1}, Strategy::A, GrowthFunction::power(1, 1), cyl(1, "0")),
                    PreconditionError);
    CHECK_NOTHROW(open_session(Params{3, 1}, Strategy::A, GrowthFunction::power(3, 2), cyl(1, "0")));
}

TEST_CASE("strategy A worked example")
{
    auto s = open_session(Params{2, 1}, Strategy::A, GrowthFunction::sqrt(), cyl(1, "0"));
    const Cylinder& answer = respond_strategy_a(s);
    CHECK(answer == cyl(16, "0,5..16"));
    const auto& data = std::get<GapBlock>(*s.rounds()[0].data);
    CHECK(data.x == 5);
    CHECK(data.t == 16);
    // t = 15 fails: p_{<=2}(5) = 3 < ceil(sqrt 15) = 4
    CHECK(partitions_at_most(5, 2) == 3);
    CHECK(GrowthFunction::sqrt()(15) == 4);
    CHECK(partitions_at_most(6, 2) == 4);

    LimitPrefix pre = limit_prefix(s);
    CHECK(pre.members == NaturalSet::parse("0,5..16"));
    CHECK(pre.valid_up_to == 16);

    AuditReport report = audit_transcript(s);
    CHECK(report.all_passed());
    REQUIRE(report.checks.size() == 2);
    CHECK(value_of(find_check(report, 0, "zero_rep"), "r") == "0");
    CHECK(value_of(find_check(report, 0, "zero_rep"), "x") == "4");
    // (0,16), (5,11), (6,10), (7,9), (8,8)
    CHECK(value_of(find_check(report, 0, "growth"), "r") == "5");
    CHECK(value_of(find_check(report, 0, "growth"), "threshold") == "4");
}

TEST_CASE("strategy A with a constant growth function stops at t = h x")
{
    // w_0 f(t) = 1, and p_{<=2}(t - 2x) >= 1 first happens at t = 2x
    auto ones = GrowthFunction::table(std::vector<Natural>(200, 1), true);
    auto [answer, block] = strategy_a_response(Params{2, 1}, ones, 0, cyl(1, "0"));
    CHECK(block.x == 5);
    CHECK(block.t == 10);
    CHECK(answer == cyl(10, "0,5..10"));
    // with h = 3: x = 7, first t with p_{<=3}(t - 21) >= 1 is 21
    auto [answer3, block3] = strategy_a_response(Params{3, 1}, ones, 0, cyl(1, "1"));
    CHECK(block3.x == 7);
    CHECK(block3.t == 21);
}

TEST_CASE("strategy A: degenerate k = 0 and gap exclusion")
{
    auto [answer, block] = strategy_a_response(Params{2, 1}, GrowthFunction::sqrt(), 0, cyl(0, ""));
    CHECK(block.x == 3);
    CHECK(answer.members.count_between(1, block.x - 1) == 0);
    CHECK(answer.members.count_between(block.x, block.t) == block.t - block.x + 1);
}

TEST_CASE("strategy A search budget")
{
    GameConfig tight;
    tight.t_search_cap = 5;
    CHECK_THROWS_AS(strategy_a_response(Params{2, 1}, GrowthFunction::sqrt(), 0, cyl(1, "0"), tight),
                    ResourceLimitError);
    auto short_table = GrowthFunction::table({1, 1, 1}, true);
    CHECK_THROWS_AS(strategy_a_response(Params{2, 1}, short_table, 0, cyl(1, "0")), ResourceLimitError);
}

TEST_CASE("strategy B worked examples")
{
    auto [a0, b0] = strategy_b_response(0, cyl(1, "0"));
    CHECK(b0.y == 2);
    CHECK(a0 == cyl(2, "0,2"));

    auto [a1, b1] = strategy_b_response(1, cyl(5, "0,2"));
    CHECK(b1.y == 11);
    CHECK(a1.members.count_between(6, 11) == 6);

    auto [e, be] = strategy_b_response(0, cyl(0, ""));
    CHECK(be.y == 1);
    CHECK(e == cyl(1, "1"));
}

TEST_CASE("strategy B audit reports the density bound")
{
    auto s = open_session(Params{2, 1}, Strategy::B, std::nullopt, cyl(1, "0"));
    respond_strategy_b(s);
    player1_move(s, cyl(5, "0,2"));
    respond_strategy_b(s);
    AuditReport report = audit_transcript(s);
    CHECK(report.all_passed());
    const AuditCheck& d1 = find_check(report, 1, "density");
    CHECK(value_of(d1, "ratio") == "6/11");
    CHECK(value_of(d1, "bound") == "1/2");
    CHECK(d1.passed);
    CHECK_THROWS_AS(respond_strategy_a(s), PreconditionError);
}

TEST_CASE("turn order and move validation")
{
    auto s = open_session(Params{2, 1}, Strategy::A, GrowthFunction::sqrt(), cyl(1, "0"));
    CHECK_THROWS_AS(player1_move(s, cyl(20, "0")), OutOfTurnError);
    CHECK_THROWS_AS(limit_prefix(s), PreconditionError);
    CHECK(audit_transcript(s).checks.empty());
    s.respond();
    CHECK_THROWS_AS(s.respond(), OutOfTurnError);

    auto before = s.rounds();
    CHECK_THROWS_AS(player1_move(s, cyl(20, "0,2,5..16")), RefinementViolationError);
    CHECK_THROWS_AS(player1_move(s, cyl(10, "0,5..10")), HorizonRegressionError);
    CHECK(s.rounds() == before);

    player1_move(s, cyl(20, "0,5..16,18"));
    CHECK(s.turn() == GameSession::Turn::player2);
    CHECK(limit_prefix(s).valid_up_to == 20);
    s.respond();
    CHECK(s.completed_rounds() == 2);
    CHECK(audit_transcript(s).all_passed());
}

TEST_CASE("limit prefix after strategy B rounds contains every dense block")
{
    auto s = adversary::play(Params{2, 1}, Strategy::B, std::nullopt, 2, 17);
    LimitPrefix pre = limit_prefix(s);
    for (const Round& r : s.rounds()) {
        Natural y = std::get<DenseBlock>(*r.data).y;
        CHECK(pre.members.count_between(r.player1.k + 1, y) == y - r.player1.k);
    }
}

TEST_CASE("strategy guarantees hold against randomized adversaries")
{
    using adversary::Mode;
    std::vector<std::pair<Params, GrowthFunction>> variants = {
        {Params{2, 1}, GrowthFunction::sqrt()},
        {Params{2, 3}, GrowthFunction::log()},
        {Params{3, 1}, GrowthFunction::power(3, 2)},
        {Params{3, 2}, GrowthFunction::sqrt()},
    };
    std::uint64_t seed = 1;
    for (const auto& [p, f] : variants) {
        for (Mode mode : {Mode::random, Mode::dense, Mode::empty, Mode::mixed}) {
            auto s = adversary::play(p, Strategy::A, f, 4, seed++, mode, 25);
            AuditReport report = audit_transcript(s);
            REQUIRE(report.chain_ok);
            REQUIRE(report.all_passed());
            REQUIRE(report.checks.size() == 8);

            // stability: an oracle recount on the prefix agrees for the zero targets
            LimitPrefix pre = limit_prefix(s);
            for (const Round& r : s.rounds()) {
                const Natural target = p.h * (r.player1.k + 1);
                REQUIRE(rep_count(pre.members, p.h, target) == 0);
            }

            auto b = adversary::play(p, Strategy::B, std::nullopt, 6, seed++, mode, 25);
            REQUIRE(audit_transcript(b).all_passed());
        }
    }
}

TEST_CASE("identical move sequences give identical sessions")
{
    auto s1 = adversary::play(Params{2, 1}, Strategy::A, GrowthFunction::sqrt(), 4, 42);
    auto s2 = adversary::play(Params{2, 1}, Strategy::A, GrowthFunction::sqrt(), 4, 42);
    CHECK(s1.rounds() == s2.rounds());
    auto r1 = audit_transcript(s1);
    auto r2 = audit_transcript(s2);
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i)
        CHECK(r1.checks[i].values == r2.checks[i].values);
}

TEST_CASE("growth presets")
{
    auto sq = GrowthFunction::sqrt();
    CHECK(sq(0) == 0);
    CHECK(sq(1) == 1);
    CHECK(sq(16) == 4);
    CHECK(sq(17) == 5);
    auto lg = GrowthFunction::log();
    CHECK(lg(0) == 0);
    CHECK(lg(1) == 1);
    CHECK(lg(3) == 2);
    CHECK(lg(4) == 3);
    auto p = GrowthFunction::power(3, 2);
    CHECK(p(4) == 8);
    CHECK(p(5) == 12); // 5^{3/2} = 11.18...
    CHECK(GrowthFunction::power(2, 4) == GrowthFunction::sqrt());
    CHECK(GrowthFunction::parse("power:3/2") == p);
    CHECK_THROWS_AS(GrowthFunction::parse("cube"), PreconditionError);
    CHECK_THROWS_AS(GrowthFunction::table({1, 2}, false), PreconditionError);
    CHECK_THROWS_AS(GrowthFunction::sqrt().check_arity(1), PreconditionError);
    CHECK_THROWS_AS(GrowthFunction::power(2, 1).check_arity(3), PreconditionError);
    CHECK_NOTHROW(GrowthFunction::power(19, 10).check_arity(3));

    // exact ceil roots agree with a brute-force search, including big values
    for (std::uint64_t v = 0; v < 2000; ++v) {
        for (unsigned q = 1; q <= 4; ++q) {
            std::uint64_t r = 0;
            while (boost::multiprecision::pow(BigInt(r), q) < v)
                ++r;
            REQUIRE(ceil_root(BigInt(v), q) == r);
        }
    }
    BigInt big = boost::multiprecision::pow(BigInt(10), 60);
    CHECK(ceil_root(big, 3) == boost::multiprecision::pow(BigInt(10), 20));
    CHECK(ceil_root(big + 1, 3) == boost::multiprecision::pow(BigInt(10), 20) + 1);
}
