#include "sidon/errors.hpp"
#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"

#include <doctest.h>

using namespace sidon;

TEST_CASE("natural sets must be strictly increasing")
{
    CHECK_NOTHROW(NaturalSet({0, 1, 5}));
    CHECK_THROWS_AS(NaturalSet({0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(NaturalSet({3, 1}), PreconditionError);
    CHECK(NaturalSet::from_unsorted({5, 1, 5, 0}) == NaturalSet{0, 1, 5});
}

TEST_CASE("set parsing accepts lists and inclusive ranges")
{
    CHECK(NaturalSet::parse("0,1,2") == NaturalSet{0, 1, 2});
    CHECK(NaturalSet::parse("0..3, 7") == NaturalSet{0, 1, 2, 3, 7});
    CHECK(NaturalSet::parse("{5..5}") == NaturalSet{5});
    CHECK(NaturalSet::parse("").empty());
    CHECK_THROWS_AS(NaturalSet::parse("1,x"), PreconditionError);
    CHECK_THROWS_AS(NaturalSet::parse("4..2"), PreconditionError);
    CHECK_THROWS_AS(NaturalSet::parse("-1"), PreconditionError);
}

TEST_CASE("compact rendering")
{
    CHECK(NaturalSet::parse("0,5..16").to_string() == "{0,5..16}");
    CHECK(NaturalSet{1, 2, 4}.to_string() == "{1,2,4}");
    CHECK(NaturalSet{}.to_string() == "{}");
}

TEST_CASE("set algebra")
{
    NaturalSet a{0, 2, 4, 6};
    NaturalSet b{1, 2, 3};
    CHECK(a.symmetric_difference(b) == NaturalSet{0, 1, 3, 4, 6});
    CHECK(a.united(b) == NaturalSet{0, 1, 2, 3, 4, 6});
    CHECK(a.truncated(3) == NaturalSet{0, 2});
    CHECK(a.slice(1, 4) == NaturalSet{2, 4});
    CHECK(a.count_between(1, 6) == 3);
    CHECK(a.count_between(7, 100) == 0);
    CHECK(NaturalSet{2, 4}.is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(b.shifted(10) == NaturalSet{11, 12, 13});
    CHECK(b.dilated(3) == NaturalSet{3, 6, 9});
    CHECK_THROWS_AS(b.dilated(0), PreconditionError);
    CHECK_THROWS_AS(NaturalSet{}.max(), PreconditionError);
    CHECK(NaturalSet::interval(3, 2).empty());
    CHECK(NaturalSet::interval(3, 5) == NaturalSet{3, 4, 5});
}

TEST_CASE("params validation")
{
    CHECK(Params::make(2, 1) == Params{2, 1});
    CHECK_THROWS_AS(Params::make(1, 1), PreconditionError);
    CHECK_THROWS_AS(Params::make(2, 0), PreconditionError);
}

TEST_CASE("rational parsing and rendering")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("1.5") == Rational(3, 2));
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_fraction_string(Rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK(binomial(100, 2) == 4950);
    CHECK(binomial(3, 5) == 0);
}
