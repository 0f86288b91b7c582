#include "sidon/growth.hpp"

#include "sidon/errors.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace sidon {

GrowthFunction GrowthFunction::sqrt()
{
    GrowthFunction f;
    f.kind_ = Kind::sqrt;
    return f;
}

GrowthFunction GrowthFunction::log()
{
    GrowthFunction f;
    f.kind_ = Kind::log;
    f.num_ = 0;
    f.den_ = 1;
    return f;
}

GrowthFunction GrowthFunction::power(unsigned num, unsigned den)
{
    if (num == 0 || den == 0)
        throw PreconditionError("power growth needs a positive exponent p/q");
    unsigned d = std::gcd(num, den);
    if (num / d == 1 && den / d == 2)
        return sqrt();
    GrowthFunction f;
    f.kind_ = Kind::power;
    f.num_ = num / d;
    f.den_ = den / d;
    return f;
}

GrowthFunction GrowthFunction::table(std::vector<Natural> values, bool acknowledged)
{
    if (!acknowledged)
        throw PreconditionError("a table growth function must be acknowledged as divergent and o(n^{h-1})");
    if (values.empty())
        throw PreconditionError("a table growth function needs at least one value");
    GrowthFunction f;
    f.kind_ = Kind::table;
    f.num_ = 0;
    f.den_ = 1;
    f.values_ = std::move(values);
    f.acknowledged_ = true;
    return f;
}

GrowthFunction GrowthFunction::parse(const std::string& text)
{
    if (text == "sqrt")
        return sqrt();
    if (text == "log")
        return log();
    if (text.rfind("power:", 0) == 0) {
        Rational e = parse_rational(text.substr(6));
        if (e <= 0 || numerator(e) > 1'000 || denominator(e) > 1'000)
            throw PreconditionError("power exponent must be a small positive rational: '" + text + "'");
        return power(numerator(e).convert_to<unsigned>(), denominator(e).convert_to<unsigned>());
    }
    throw PreconditionError("unknown growth function '" + text + "' (expected sqrt, log, power:p/q)");
}

void GrowthFunction::check_arity(unsigned h) const
{
    switch (kind_) {
    case Kind::sqrt:
    case Kind::log:
        if (h < 2)
            throw PreconditionError("growth presets need h >= 2");
        return;
    case Kind::power:
        // p/q < h - 1
        if (static_cast<unsigned long long>(num_) >= static_cast<unsigned long long>(h - 1) * den_)
            throw PreconditionError("power exponent " + std::to_string(num_) + "/" + std::to_string(den_)
                                    + " is not below h - 1 = " + std::to_string(h - 1));
        return;
    case Kind::table:
        return;
    }
}

namespace {

using u128 = unsigned __int128;

// r^q compared with v, saturating at 2^127.
int compare_power(std::uint64_t r, unsigned q, u128 v)
{
    u128 acc = 1;
    const u128 cap = static_cast<u128>(1) << 127;
    for (unsigned i = 0; i < q; ++i) {
        if (r != 0 && acc > cap / r)
            return 1;
        acc *= r;
    }
    return acc < v ? -1 : (acc > v ? 1 : 0);
}

} // namespace

BigInt ceil_root(const BigInt& v, unsigned q)
{
    if (q == 0)
        throw PreconditionError("root of order zero");
    if (v <= 1 || q == 1)
        return v;
    if (msb(v) < 120) {
        const u128 value = v.convert_to<u128>();
        auto r = static_cast<std::uint64_t>(std::pow(v.convert_to<double>(), 1.0 / q));
        while (r > 0 && compare_power(r, q, value) > 0)
            --r;
        while (compare_power(r + 1, q, value) <= 0)
            ++r;
        return compare_power(r, q, value) == 0 ? BigInt(r) : BigInt(r) + 1;
    }
    // bisection on [lo, hi] with lo^q <= v < hi^q
    BigInt lo = 1;
    BigInt hi = BigInt(1) << (msb(v) / q + 1);
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, q) <= v)
            lo = mid;
        else
            hi = mid;
    }
    return boost::multiprecision::pow(lo, q) == v ? lo : hi;
}

BigInt GrowthFunction::operator()(Natural n) const
{
    switch (kind_) {
    case Kind::sqrt:
        return ceil_root(BigInt(n), 2);
    case Kind::log:
        // ceil(log2(n + 1)) is the bit length of n
        return BigInt(static_cast<unsigned>(std::bit_width(n)));
    case Kind::power:
        return ceil_root(boost::multiprecision::pow(BigInt(n), num_), den_);
    case Kind::table:
        if (n >= values_.size())
            throw ResourceLimitError("growth table has no value at n = " + std::to_string(n));
        return BigInt(values_[n]);
    }
    return 0;
}

std::string GrowthFunction::describe() const
{
    switch (kind_) {
    case Kind::sqrt: return "sqrt";
    case Kind::log: return "log";
    case Kind::power: return "power:" + std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::table: return "table[" + std::to_string(values_.size()) + "]";
    }
    return "?";
}

} // namespace sidon
