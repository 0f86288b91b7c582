#include "adversary.hpp"
#include "oracles.hpp"

#include "sidon/bhg.hpp"
#include "sidon/density.hpp"
#include "sidon/errors.hpp"

#include <doctest.h>

#include <random>

using namespace sidon;

namespace {

NaturalSet evens_below(Natural n)
{
    std::vector<Natural> el;
    for (Natural v = 0; v < n; v += 2)
        el.push_back(v);
    return NaturalSet(std::move(el));
}

NaturalSet odds_below(Natural n)
{
    std::vector<Natural> el;
    for (Natural v = 1; v < n; v += 2)
        el.push_back(v);
    return NaturalSet(std::move(el));
}

} // namespace

TEST_CASE("prefix density examples")
{
    PrefixDensityReport evens = prefix_density(evens_below(1000), 1000, 100);
    CHECK(evens.min_tail == Rational(1, 2));
    CHECK(evens.min_tail_at % 2 == 0);
    CHECK(evens.ratios.size() == 1000);
    CHECK(evens.ratios.front() == std::pair<Natural, Rational>{1, Rational(1)});

    PrefixDensityReport full = prefix_density(NaturalSet::interval(0, 499), 500, 1);
    for (const auto& [n, r] : full.ratios)
        CHECK(r == 1);
    CHECK(full.min_tail == 1);

    PrefixDensityReport none = prefix_density({}, 300, 10, 7);
    for (const auto& [n, r] : none.ratios)
        CHECK(r == 0);
    CHECK(none.min_tail == 0);
    CHECK(none.ratios.back().first == 300);
}

TEST_CASE("prefix density invariants")
{
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        NaturalSet a = oracle::random_set(rng, 40, 120);
        const Natural horizon = 1 + trial * 3;
        const Natural tail = 1 + trial % horizon;
        const Natural stride = 1 + trial % 5;
        PrefixDensityReport rep = prefix_density(a, horizon, tail, stride);
        CHECK(rep.min_tail_at >= tail);
        CHECK(rep.min_tail_at <= horizon);
        for (const auto& [n, r] : rep.ratios) {
            REQUIRE(r >= 0);
            REQUIRE(r <= 1);
            REQUIRE(r == Rational(BigInt(a.count_between(0, n - 1)), BigInt(n)));
            if (n >= tail)
                REQUIRE(rep.min_tail <= r);
        }
    }
}

TEST_CASE("prefix density rejects an empty tail window")
{
    CHECK_THROWS_AS(prefix_density({1}, 10, 0), PreconditionError);
    CHECK_THROWS_AS(prefix_density({1}, 10, 11), PreconditionError);
    CHECK_THROWS_AS(prefix_density({1}, 10, 1, 0), PreconditionError);
}

TEST_CASE("symmetric difference density")
{
    NaturalSet a = evens_below(2000);
    CHECK(symdiff_density(a, a, 2000, 1).min_tail == 0);
    CHECK(symdiff_density(NaturalSet::interval(0, 99), {}, 100, 1).min_tail == 1);
    PrefixDensityReport eo = symdiff_density(a, odds_below(2000), 2000, 1);
    CHECK(eo.min_tail == 1);

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        NaturalSet x = oracle::random_set(rng, 30, 80);
        NaturalSet y = oracle::random_set(rng, 30, 80);
        PrefixDensityReport xy = symdiff_density(x, y, 90, 5);
        PrefixDensityReport yx = symdiff_density(y, x, 90, 5);
        REQUIRE(xy.ratios == yx.ratios);
        REQUIRE(xy.min_tail == yx.min_tail);
        for (const auto& [n, r] : symdiff_density(x, x, 90, 5).ratios)
            REQUIRE(r == 0);
    }
}

TEST_CASE("counting bound certificate examples")
{
    Params sidon = Params::make(2, 1);
    auto cert = counting_bound_certificate(NaturalSet::interval(0, 100), 0, 100, sidon);
    REQUIRE(cert);
    CHECK(cert->s == 100);
    CHECK(cert->subsets == 4950);
    CHECK(cert->capacity == 200);

    CHECK_FALSE(counting_bound_certificate({0, 1, 3, 7}, 0, 7, sidon));
    CHECK_FALSE(counting_bound_certificate(NaturalSet::interval(0, 10), 0, 10, Params::make(20, 1)));
    CHECK_FALSE(counting_bound_certificate({}, 0, 5, sidon));
    CHECK_THROWS_AS(counting_bound_certificate({1}, 5, 5, sidon), PreconditionError);
}

TEST_CASE("certificates are confirmed by the verifier")
{
    std::mt19937_64 rng(8128);
    int confirmed = 0;
    int attempts = 0;
    while (confirmed < 200) {
        REQUIRE(++attempts < 20000);
        const unsigned h = 2 + rng() % 2;
        const unsigned g = 1 + rng() % 2;
        const Params p = Params::make(h, g);
        NaturalSet b = oracle::random_set(rng, 30, 40);
        const Natural y = 1 + rng() % 40;
        const Natural k = rng() % y;
        auto cert = counting_bound_certificate(b, k, y, p);
        if (!cert)
            continue;
        NaturalSet prefix = b.truncated(y);
        Verdict v = is_bhg(prefix, p);
        REQUIRE_FALSE(v.is_bhg);
        REQUIRE(v.witness);
        REQUIRE(v.witness->count > g);
        REQUIRE(v.witness->x <= h * y);
        REQUIRE(oracle::rep_count(prefix, h, v.witness->x) == v.witness->count);
        ++confirmed;
    }
}

TEST_CASE("strategy-B sessions produce a firing certificate on the limit prefix")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = adversary::play(Params{2, 1}, Strategy::B, std::nullopt, 8, seed, adversary::Mode::mixed, 20);
        LimitPrefix pre = limit_prefix(s);
        bool fired = false;
        for (const Round& r : s.rounds()) {
            const Natural y = std::get<DenseBlock>(*r.data).y;
            if (auto cert = counting_bound_certificate(pre.members, r.player1.k, y, s.params())) {
                fired = true;
                REQUIRE_FALSE(is_bhg(pre.members.truncated(y), s.params()).is_bhg);
                break;
            }
        }
        CHECK(fired);
    }
}
