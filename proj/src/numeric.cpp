#include "sidon/numeric.hpp"

#include "sidon/errors.hpp"

#include <algorithm>
#include <cctype>

namespace sidon {

std::string to_fraction_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_integer(const std::string& text, const std::string& whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size() || !std::all_of(text.begin() + i, text.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        }))
        throw PreconditionError("malformed rational: '" + whole + "'");
    return BigInt(text);
}

} // namespace

Rational parse_rational(const std::string& raw)
{
    std::string text;
    std::copy_if(raw.begin(), raw.end(), std::back_inserter(text),
                 [](unsigned char c) { return std::isspace(c) == 0; });
    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash), raw);
        BigInt den = parse_integer(text.substr(slash + 1), raw);
        if (den == 0)
            throw PreconditionError("zero denominator: '" + raw + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        std::string head = text.substr(0, dot);
        bool negative = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+")
            head += "0";
        BigInt whole = parse_integer(head, raw);
        if (frac.empty())
            return Rational(whole);
        BigInt digits = parse_integer(frac, raw);
        if (frac[0] == '-' || frac[0] == '+')
            throw PreconditionError("malformed rational: '" + raw + "'");
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        Rational magnitude = Rational(abs(whole)) + Rational(digits, scale);
        return negative ? -magnitude : magnitude;
    }
    return Rational(parse_integer(text, raw));
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace sidon
