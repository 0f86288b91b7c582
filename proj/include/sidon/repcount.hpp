#pragma once

#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace sidon {

/// Work and output budgets shared by the counting engines.
struct Limits {
    /// Upper bound on h * (x_max + 1) * |A| for table engines.
    std::uint64_t table_work = 400'000'000;
    /// Upper bound on the number of explicit representation tuples produced.
    std::uint64_t max_witnesses = 100'000;
    /// Upper bound on the number of multisets the oracle table engine visits.
    std::uint64_t oracle_visits = 50'000'000;
    /// Upper bound on C(n+h-1, h) for point-configuration sums.
    std::uint64_t exponent_vectors = 2'000'000;
};

enum class Engine { oracle, dp, convolution };

std::string_view engine_name(Engine e);
/// Accepts "oracle", "dp", "convolution". Throws PreconditionError otherwise.
Engine parse_engine(std::string_view name);

/// Exact values of r_{A,h}(x) for x in [0, x_max].
struct RepTable {
    unsigned h = 0;
    Natural x_max = 0;
    std::vector<BigInt> counts;
    Engine engine = Engine::dp;

    const BigInt& operator[](Natural x) const { return counts.at(x); }
    BigInt total() const;
};

/// A multiset of h elements, listed non-decreasingly.
using Representation = std::vector<Natural>;

/// Number of multisets {a_1 <= ... <= a_h} drawn from A with a_1 + ... + a_h = x.
/// Pruned depth-first enumeration; the leaf level is a binary search.
BigInt rep_count(const NaturalSet& a, unsigned h, Natural x);

/// Table of rep counts by explicit multiset enumeration (bounded by Limits::oracle_visits).
RepTable rep_table_oracle(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits = {});

/// Dynamic programme over (element, parts used, partial sum).
RepTable rep_table_dp(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits = {});

/// Largest arity handled by the cycle-index engine.
inline constexpr unsigned max_convolution_arity = 4;

/// Ordered convolution counts reduced to unordered counts through the cycle index
/// of the symmetric group. Supports 1 <= h <= max_convolution_arity.
RepTable rep_table_convolution(const NaturalSet& a, unsigned h, Natural x_max,
                               const Limits& limits = {});

/// Convolution when the arity allows it, DP otherwise.
RepTable rep_table(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits = {});

RepTable rep_table(Engine engine, const NaturalSet& a, unsigned h, Natural x_max,
                   const Limits& limits = {});

/// All representations of x, lexicographically sorted. Throws ResourceLimitError
/// when there are more than limits.max_witnesses of them.
std::vector<Representation> enumerate_representations(const NaturalSet& a, unsigned h, Natural x,
                                                      const Limits& limits = {});

/// The first `count` representations of x in lexicographic order (fewer if x has fewer).
std::vector<Representation> first_representations(const NaturalSet& a, unsigned h, Natural x,
                                                  std::size_t count);

/// Streams p_{<=h}(0), p_{<=h}(1), ... using only the last h rows of the
/// recurrence p(n, k) = p(n, k - 1) + p(n - k, k), where p(n, k) counts
/// partitions of n into parts of size at most k.
class PartitionCounter {
public:
    explicit PartitionCounter(unsigned h);

    /// p_{<=h}(n) for the next n (starting at 0).
    const BigInt& next();
    /// The argument of the value most recently returned by next(), or -1.
    long long position() const { return static_cast<long long>(computed_) - 1; }

private:
    unsigned h_;
    std::uint64_t computed_ = 0;
    // ring buffer: rows_[n % (h + 1)][k] = p(n, k), k = 0..h
    std::vector<std::vector<BigInt>> rows_;
};

/// Number of partitions of n into at most h parts; 0 for n < 0, 1 for n = 0.
BigInt partitions_at_most(long long n, unsigned h);

} // namespace sidon
