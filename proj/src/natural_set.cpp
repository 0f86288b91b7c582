#include "sidon/natural_set.hpp"

#include "sidon/errors.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <limits>
#include <sstream>

namespace sidon {

NaturalSet::NaturalSet(std::vector<Natural> sorted)
    : elements_(std::move(sorted))
{
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i - 1] >= elements_[i])
            throw PreconditionError("set elements must be strictly increasing (at index "
                                    + std::to_string(i) + ")");
    }
}

NaturalSet::NaturalSet(std::initializer_list<Natural> sorted)
    : NaturalSet(std::vector<Natural>(sorted))
{}

NaturalSet NaturalSet::from_unsorted(std::vector<Natural> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return NaturalSet(std::move(values));
}

NaturalSet NaturalSet::interval(Natural lo, Natural hi)
{
    std::vector<Natural> v;
    if (lo <= hi) {
        v.reserve(hi - lo + 1);
        for (Natural x = lo;; ++x) {
            v.push_back(x);
            if (x == hi)
                break;
        }
    }
    NaturalSet s;
    s.elements_ = std::move(v);
    return s;
}

namespace {

Natural parse_natural(const std::string& token, const std::string& whole)
{
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        }))
        throw PreconditionError("malformed set '" + whole + "': bad token '" + token + "'");
    try {
        return std::stoull(token);
    } catch (const std::out_of_range&) {
        throw PreconditionError("set element out of range: '" + token + "'");
    }
}

} // namespace

NaturalSet NaturalSet::parse(const std::string& text)
{
    std::string compact;
    std::copy_if(text.begin(), text.end(), std::back_inserter(compact),
                 [](unsigned char c) { return std::isspace(c) == 0 && c != '{' && c != '}'; });
    std::vector<Natural> values;
    if (compact.empty())
        return {};
    std::stringstream in(compact);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (auto dots = item.find(".."); dots != std::string::npos) {
            Natural lo = parse_natural(item.substr(0, dots), text);
            Natural hi = parse_natural(item.substr(dots + 2), text);
            if (lo > hi)
                throw PreconditionError("empty range '" + item + "' in set '" + text + "'");
            for (Natural x = lo; x <= hi; ++x)
                values.push_back(x);
        } else {
            values.push_back(parse_natural(item, text));
        }
    }
    return from_unsorted(std::move(values));
}

Natural NaturalSet::min() const
{
    if (empty())
        throw PreconditionError("min of empty set");
    return elements_.front();
}

Natural NaturalSet::max() const
{
    if (empty())
        throw PreconditionError("max of empty set");
    return elements_.back();
}

bool NaturalSet::contains(Natural v) const
{
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::size_t NaturalSet::count_between(Natural lo, Natural hi) const
{
    if (lo > hi)
        return 0;
    auto first = std::lower_bound(elements_.begin(), elements_.end(), lo);
    auto last = std::upper_bound(first, elements_.end(), hi);
    return static_cast<std::size_t>(last - first);
}

NaturalSet NaturalSet::truncated(Natural bound) const
{
    return slice(0, bound);
}

NaturalSet NaturalSet::slice(Natural lo, Natural hi) const
{
    NaturalSet s;
    if (lo > hi)
        return s;
    auto first = std::lower_bound(elements_.begin(), elements_.end(), lo);
    auto last = std::upper_bound(first, elements_.end(), hi);
    s.elements_.assign(first, last);
    return s;
}

NaturalSet NaturalSet::united(const NaturalSet& other) const
{
    NaturalSet s;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(s.elements_));
    return s;
}

NaturalSet NaturalSet::symmetric_difference(const NaturalSet& other) const
{
    NaturalSet s;
    std::set_symmetric_difference(begin(), end(), other.begin(), other.end(),
                                  std::back_inserter(s.elements_));
    return s;
}

bool NaturalSet::is_subset_of(const NaturalSet& other) const
{
    return std::includes(other.begin(), other.end(), begin(), end());
}

NaturalSet NaturalSet::shifted(Natural c) const
{
    NaturalSet s;
    s.elements_.reserve(size());
    for (Natural a : elements_) {
        if (a > std::numeric_limits<Natural>::max() - c)
            throw PreconditionError("shift overflows");
        s.elements_.push_back(a + c);
    }
    return s;
}

NaturalSet NaturalSet::dilated(Natural lambda) const
{
    if (lambda == 0)
        throw PreconditionError("dilation factor must be positive");
    NaturalSet s;
    s.elements_.reserve(size());
    for (Natural a : elements_) {
        if (a > std::numeric_limits<Natural>::max() / lambda)
            throw PreconditionError("dilation overflows");
        s.elements_.push_back(a * lambda);
    }
    return s;
}

std::string NaturalSet::to_string() const
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size();) {
        std::size_t j = i;
        while (j + 1 < elements_.size() && elements_[j + 1] == elements_[j] + 1)
            ++j;
        if (i > 0)
            out << ',';
        out << elements_[i];
        if (j >= i + 2)
            out << ".." << elements_[j];
        else if (j == i + 1)
            out << ',' << elements_[j];
        i = j + 1;
    }
    out << '}';
    return out.str();
}

Params Params::make(long long h, long long g)
{
    if (h < 2)
        throw PreconditionError("h must be at least 2 (got " + std::to_string(h) + ")");
    if (g < 1)
        throw PreconditionError("g must be at least 1 (got " + std::to_string(g) + ")");
    return Params{static_cast<unsigned>(h), static_cast<unsigned>(g)};
}

} // namespace sidon
