#include "sidon/bhg.hpp"

#include "sidon/errors.hpp"

#include <algorithm>
#include <limits>

namespace sidon {

namespace {

Natural checked_mul(Natural a, Natural b)
{
    if (b != 0 && a > std::numeric_limits<Natural>::max() / b)
        throw PreconditionError("arithmetic overflow");
    return a * b;
}

std::optional<Natural> first_violation(const RepTable& t, unsigned g)
{
    for (Natural x = 0; x <= t.x_max; ++x) {
        if (t.counts[x] > g)
            return x;
    }
    return std::nullopt;
}

} // namespace

Witness witness_at(const NaturalSet& a, unsigned h, Natural x, const Limits& limits)
{
    Witness w;
    w.x = x;
    w.count = rep_count(a, h, x);
    std::size_t listed = w.count > limits.max_witnesses ? static_cast<std::size_t>(limits.max_witnesses)
                                                        : static_cast<std::size_t>(w.count);
    w.representations = first_representations(a, h, x, listed);
    return w;
}

Verdict is_bhg(const NaturalSet& a, Params p, const Limits& limits)
{
    Verdict v;
    // r <= 1 everywhere for |A| <= 1
    if (a.size() <= 1)
        return v;
    RepTable table = rep_table(a, p.h, checked_mul(p.h, a.max()), limits);
    if (auto x = first_violation(table, p.g)) {
        v.is_bhg = false;
        v.witness = witness_at(a, p.h, *x, limits);
    }
    return v;
}

Natural gadget_target(const NaturalSet& f0, Params p)
{
    if (f0.empty())
        throw PreconditionError("gadget pattern F0 must be nonempty");
    const Natural x0 = f0.max() + 1;
    return checked_mul(p.h, x0 + p.g);
}

NaturalSet violation_gadget(const NaturalSet& f0, Params p)
{
    const Natural target = gadget_target(f0, p);
    return f0.united(NaturalSet::interval(f0.max() + 1, target));
}

std::vector<Representation> gadget_representations(const NaturalSet& f0, Params p)
{
    const Natural centre = gadget_target(f0, p) / p.h;
    std::vector<Representation> reps;
    for (Natural i = 0; i <= p.g; ++i) {
        Representation r(p.h - 2, centre);
        r.push_back(centre - i);
        r.push_back(centre + i);
        std::sort(r.begin(), r.end());
        reps.push_back(std::move(r));
    }
    return reps;
}

NaturalSet greedy_bhg(const NaturalSet& seed, Params p, std::size_t count, Natural bound,
                      const Limits& limits)
{
    if (!is_bhg(seed, p, limits).is_bhg)
        throw PreconditionError("greedy seed " + seed.to_string() + " is not B_h[g]");
    if (count < seed.size())
        throw PreconditionError("greedy target size is below the seed size");
    std::vector<Natural> current(seed.begin(), seed.end());
    Natural candidate = current.empty() ? 0 : current.back() + 1;
    while (current.size() < count) {
        if (candidate > bound)
            throw BoundExhaustedError("greedy search passed bound " + std::to_string(bound) + " with "
                                          + std::to_string(current.size()) + " of "
                                          + std::to_string(count) + " elements",
                                      NaturalSet(current));
        current.push_back(candidate);
        if (!is_bhg(NaturalSet(current), p, limits).is_bhg)
            current.pop_back();
        ++candidate;
    }
    return NaturalSet(std::move(current));
}

} // namespace sidon
