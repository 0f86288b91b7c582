#pragma once

#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sidon {

/// Prefix ratios |A ∩ [0, n)| / n up to a horizon N. `min_tail` is the minimum
/// over every n in [tail_start, N]: a finite-horizon proxy for the lower
/// asymptotic density, not the liminf itself.
struct PrefixDensityReport {
    Natural horizon = 0;
    Natural tail_start = 1;
    std::vector<std::pair<Natural, Rational>> ratios;
    Rational min_tail;
    /// An n attaining min_tail.
    Natural min_tail_at = 0;
};

/// `stride` controls which n are listed in `ratios` (multiples of stride, plus N);
/// min_tail always scans the whole tail.
PrefixDensityReport prefix_density(const NaturalSet& a, Natural horizon, Natural tail_start,
                                   Natural stride = 1);

/// prefix_density of A △ B.
PrefixDensityReport symdiff_density(const NaturalSet& a, const NaturalSet& b, Natural horizon,
                                    Natural tail_start, Natural stride = 1);

/// Proof that B is not B_h[g]: s = |B ∩ (k, y]| elements give C(s, h) distinct
/// h-subsets, all with sums in [1, h y], more than the h g y representations a
/// B_h[g] set admits there.
struct CountingCertificate {
    Natural k = 0;
    Natural y = 0;
    std::uint64_t s = 0;
    BigInt subsets;   // C(s, h)
    BigInt capacity;  // h g y
};

/// Returns a certificate when C(s, h) > h g y, nothing when inconclusive.
/// Requires k < y.
std::optional<CountingCertificate> counting_bound_certificate(const NaturalSet& b, Natural k, Natural y,
                                                              Params p);

} // namespace sidon
