#include "sidon/density.hpp"

#include "sidon/errors.hpp"

namespace sidon {

PrefixDensityReport prefix_density(const NaturalSet& a, Natural horizon, Natural tail_start, Natural stride)
{
    if (tail_start < 1 || horizon < tail_start)
        throw PreconditionError("density needs 1 <= tail_start <= N");
    if (stride < 1)
        throw PreconditionError("density stride must be positive");
    PrefixDensityReport report;
    report.horizon = horizon;
    report.tail_start = tail_start;

    auto it = a.begin();
    std::uint64_t below = 0; // |A ∩ [0, n)|
    bool have_min = false;
    for (Natural n = 1; n <= horizon; ++n) {
        while (it != a.end() && *it < n) {
            ++below;
            ++it;
        }
        const bool sampled = n % stride == 0 || n == horizon;
        const bool in_tail = n >= tail_start;
        if (!sampled && !in_tail)
            continue;
        Rational ratio{BigInt(below), BigInt(n)};
        if (in_tail && (!have_min || ratio < report.min_tail)) {
            report.min_tail = ratio;
            report.min_tail_at = n;
            have_min = true;
        }
        if (sampled)
            report.ratios.emplace_back(n, std::move(ratio));
    }
    return report;
}

PrefixDensityReport symdiff_density(const NaturalSet& a, const NaturalSet& b, Natural horizon,
                                    Natural tail_start, Natural stride)
{
    return prefix_density(a.symmetric_difference(b), horizon, tail_start, stride);
}

std::optional<CountingCertificate> counting_bound_certificate(const NaturalSet& b, Natural k, Natural y,
                                                              Params p)
{
    if (k >= y)
        throw PreconditionError("certificate window needs k < y");
    CountingCertificate cert;
    cert.k = k;
    cert.y = y;
    cert.s = b.count_between(k + 1, y);
    cert.subsets = binomial(cert.s, p.h);
    cert.capacity = BigInt(p.h) * p.g * y;
    if (cert.subsets > cert.capacity)
        return cert;
    return std::nullopt;
}

} // namespace sidon
