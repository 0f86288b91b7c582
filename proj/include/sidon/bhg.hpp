#pragma once

#include "sidon/errors.hpp"
#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"
#include "sidon/repcount.hpp"

#include <optional>
#include <vector>

namespace sidon {

/// The smallest x with r_{A,h}(x) > g, with its representations in
/// lexicographic order (at most Limits::max_witnesses of them are listed).
struct Witness {
    Natural x = 0;
    BigInt count;
    std::vector<Representation> representations;
};

struct Verdict {
    bool is_bhg = true;
    std::optional<Witness> witness;
};

/// Decides whether r_{A,h}(x) <= g for all x. Only x in [h min A, h max A] can
/// be nonzero, so the table is built over [0, h max A].
Verdict is_bhg(const NaturalSet& a, Params p, const Limits& limits = {});

/// Representations of a specific target x (at most Limits::max_witnesses listed).
Witness witness_at(const NaturalSet& a, unsigned h, Natural x, const Limits& limits = {});

/// Violation gadget for the empty-interior argument: given a nonempty pattern F0,
/// returns F0 ∪ [x0, h(x0 + g)] with x0 = 1 + max F0. Its target h(x0 + g) has
/// at least g + 1 representations, see gadget_representations().
NaturalSet violation_gadget(const NaturalSet& f0, Params p);

/// h(x0 + g) for the gadget built from f0.
Natural gadget_target(const NaturalSet& f0, Params p);

/// The g + 1 explicit representations (h-2 copies of x0+g, x0+g+i, x0+g-i), i = 0..g,
/// each sorted non-decreasingly.
std::vector<Representation> gadget_representations(const NaturalSet& f0, Params p);

/// Thrown by greedy_bhg when the candidate bound is reached first.
class BoundExhaustedError : public Error {
public:
    BoundExhaustedError(const std::string& what, NaturalSet partial)
        : Error(what)
        , partial_(std::move(partial))
    {}
    const NaturalSet& partial() const { return partial_; }

private:
    NaturalSet partial_;
};

/// Greedy extension: repeatedly appends the smallest integer above the current
/// maximum that keeps the set B_h[g], until it has `count` elements.
/// Candidates above `bound` are not tried.
NaturalSet greedy_bhg(const NaturalSet& seed, Params p, std::size_t count, Natural bound,
                      const Limits& limits = {});

} // namespace sidon
