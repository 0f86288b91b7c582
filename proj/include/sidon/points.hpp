#pragma once

#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"
#include "sidon/repcount.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidon {

using Point = std::vector<Rational>;

/// n >= 2 points of Q^d. Points may coincide; is_bhg_config reports that.
struct PointConfig {
    std::size_t dim = 1;
    std::vector<Point> points;

    /// Throws PreconditionError on dim < 1, fewer than two points or a ragged point.
    static PointConfig make(std::size_t dim, std::vector<Point> points);
    /// One-dimensional configuration from integers.
    static PointConfig line(const std::vector<long long>& coords);

    std::size_t size() const { return points.size(); }
};

/// Multiplicities α_i >= 0 with Σ α_i = h; encodes the multiset Σ α_i a_i.
using ExponentVector = std::vector<unsigned>;

struct SumGroup {
    Point sum;
    /// Exponent vectors with this sum, in the order of their index tuples
    /// i_1 <= ... <= i_h (so (2,0,0) precedes (1,1,0) precedes (1,0,1) ...).
    std::vector<ExponentVector> members;
};

/// Every exponent vector grouped by the exact value of Σ α_i a_i; groups are
/// sorted by sum (lexicographic on coordinates). Throws ResourceLimitError if
/// C(n+h-1, h) exceeds limits.exponent_vectors.
std::vector<SumGroup> multiset_sums(const PointConfig& config, unsigned h, const Limits& limits = {});

/// Integer vector γ ≠ 0 with |γ_i| <= h and Σ γ_i a_i = 0.
using Hyperplane = std::vector<int>;

struct ConfigVerdict {
    bool is_bhg = true;
    /// First coinciding pair i < j (0-based).
    std::optional<std::pair<std::size_t, std::size_t>> duplicate;
    /// First sum group (by sum order) with more than g members.
    std::optional<SumGroup> collision;
    /// Hyperplane through the configuration certifying the failure.
    std::optional<Hyperplane> hyperplane;
};

ConfigVerdict is_bhg_config(const PointConfig& config, Params p, const Limits& limits = {});

/// γ = α - β for a collision α ≠ β with equal sums. Throws PreconditionError
/// unless both are exponent vectors of the same order with equal sums under config.
Hyperplane violating_hyperplane(const PointConfig& config, const ExponentVector& alpha,
                                const ExponentVector& beta);

/// e_i - e_j for coinciding points i ≠ j.
Hyperplane duplicate_hyperplane(const PointConfig& config, std::size_t i, std::size_t j);

/// Σ γ_i a_i.
Point evaluate_hyperplane(const PointConfig& config, const Hyperplane& gamma);

/// The point Σ α_i a_i.
Point weighted_sum(const PointConfig& config, const ExponentVector& alpha);

struct ExperimentSpec {
    std::size_t n = 4;
    std::size_t dim = 1;
    Params params;
    std::uint64_t trials = 1000;
    std::uint64_t coord_bound = 1'000'000;
    /// Coordinates are numerator / denominator on a fixed grid.
    std::uint64_t denominator = 1000;
    std::uint64_t seed = 0;
};

struct ExperimentFailure {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    PointConfig config;
    ConfigVerdict verdict;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<ExperimentFailure> failures;
};

/// Configuration drawn by trial `trial`: seeded with spec.seed + trial.
PointConfig sample_config(const ExperimentSpec& spec, std::uint64_t trial);

/// Samples spec.trials configurations and records every non-B_h[g] one.
/// Deterministic for a fixed spec. Throws PreconditionError when trials == 0.
ExperimentReport genericity_experiment(const ExperimentSpec& spec, const Limits& limits = {});

} // namespace sidon
