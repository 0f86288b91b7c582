#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sidon {

using Natural = std::uint64_t;

/// A finite set of nonnegative integers, stored strictly increasing.
class NaturalSet {
public:
    NaturalSet() = default;

    /// Throws PreconditionError unless `sorted` is strictly increasing.
    explicit NaturalSet(std::vector<Natural> sorted);
    NaturalSet(std::initializer_list<Natural> sorted);

    static NaturalSet from_unsorted(std::vector<Natural> values);
    /// The integer interval [lo, hi]; empty when lo > hi.
    static NaturalSet interval(Natural lo, Natural hi);

    /// Parses "0,1,5..9,12" (ranges inclusive). Whitespace is ignored.
    static NaturalSet parse(const std::string& text);

    std::span<const Natural> elements() const { return elements_; }
    const std::vector<Natural>& vector() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    Natural min() const;
    Natural max() const;

    bool contains(Natural v) const;
    /// |{a in A : lo <= a <= hi}|
    std::size_t count_between(Natural lo, Natural hi) const;

    /// A ∩ [0, bound]
    NaturalSet truncated(Natural bound) const;
    /// A ∩ [lo, hi]
    NaturalSet slice(Natural lo, Natural hi) const;

    NaturalSet united(const NaturalSet& other) const;
    NaturalSet symmetric_difference(const NaturalSet& other) const;
    bool is_subset_of(const NaturalSet& other) const;

    /// {a + c : a in A}
    NaturalSet shifted(Natural c) const;
    /// {λ a : a in A}
    NaturalSet dilated(Natural lambda) const;

    /// Compact text form using ranges, e.g. "{0,5..16}".
    std::string to_string() const;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const NaturalSet&, const NaturalSet&) = default;

private:
    std::vector<Natural> elements_;
};

/// Arity h >= 2 and multiplicity bound g >= 1.
struct Params {
    unsigned h = 2;
    unsigned g = 1;

    /// Throws PreconditionError on h < 2 or g < 1.
    static Params make(long long h, long long g);

    friend bool operator==(const Params&, const Params&) = default;
};

} // namespace sidon
