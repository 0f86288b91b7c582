#include "sidon/points.hpp"

#include "sidon/errors.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include <map>
#include <numeric>

namespace sidon {

PointConfig PointConfig::make(std::size_t dim, std::vector<Point> points)
{
    if (dim < 1)
        throw PreconditionError("configuration dimension must be at least 1");
    if (points.size() < 2)
        throw PreconditionError("configuration needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim)
            throw PreconditionError("point " + std::to_string(i) + " has " + std::to_string(points[i].size())
                                    + " coordinates, expected " + std::to_string(dim));
    }
    return PointConfig{dim, std::move(points)};
}

PointConfig PointConfig::line(const std::vector<long long>& coords)
{
    std::vector<Point> points;
    points.reserve(coords.size());
    for (long long c : coords)
        points.push_back(Point{Rational(c)});
    return make(1, std::move(points));
}

Point weighted_sum(const PointConfig& config, const ExponentVector& alpha)
{
    Point sum(config.dim, Rational(0));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0)
            continue;
        for (std::size_t c = 0; c < config.dim; ++c)
            sum[c] += config.points[i][c] * alpha[i];
    }
    return sum;
}

std::vector<SumGroup> multiset_sums(const PointConfig& config, unsigned h, const Limits& limits)
{
    if (h < 2)
        throw PreconditionError("h must be at least 2");
    const std::size_t n = config.size();
    if (binomial(n + h - 1, h) > limits.exponent_vectors)
        throw ResourceLimitError("C(n+h-1, h) = " + binomial(n + h - 1, h).str() + " exponent vectors exceed "
                                 + std::to_string(limits.exponent_vectors));

    std::map<Point, std::vector<ExponentVector>> groups;
    // odometer over non-decreasing index tuples i_1 <= ... <= i_h
    std::vector<std::size_t> idx(h, 0);
    while (true) {
        ExponentVector alpha(n, 0);
        for (std::size_t i : idx)
            ++alpha[i];
        groups[weighted_sum(config, alpha)].push_back(std::move(alpha));

        std::size_t pos = h;
        while (pos > 0 && idx[pos - 1] == n - 1)
            --pos;
        if (pos == 0)
            break;
        ++idx[pos - 1];
        for (std::size_t q = pos; q < h; ++q)
            idx[q] = idx[pos - 1];
    }

    std::vector<SumGroup> out;
    out.reserve(groups.size());
    for (auto& [sum, members] : groups)
        out.push_back(SumGroup{sum, std::move(members)});
    return out;
}

Hyperplane duplicate_hyperplane(const PointConfig& config, std::size_t i, std::size_t j)
{
    if (i == j || i >= config.size() || j >= config.size() || config.points[i] != config.points[j])
        throw PreconditionError("duplicate hyperplane needs two distinct indices of coinciding points");
    Hyperplane gamma(config.size(), 0);
    gamma[i] = 1;
    gamma[j] = -1;
    return gamma;
}

Hyperplane violating_hyperplane(const PointConfig& config, const ExponentVector& alpha, const ExponentVector& beta)
{
    const std::size_t n = config.size();
    if (alpha.size() != n || beta.size() != n)
        throw PreconditionError("exponent vectors must have one entry per point");
    const auto order_a = std::accumulate(alpha.begin(), alpha.end(), 0ULL);
    const auto order_b = std::accumulate(beta.begin(), beta.end(), 0ULL);
    if (order_a != order_b)
        throw PreconditionError("exponent vectors have different orders");
    if (alpha == beta)
        throw PreconditionError("exponent vectors must be distinct");
    if (weighted_sum(config, alpha) != weighted_sum(config, beta))
        throw PreconditionError("exponent vectors do not collide under this configuration");
    Hyperplane gamma(n);
    for (std::size_t i = 0; i < n; ++i)
        gamma[i] = static_cast<int>(alpha[i]) - static_cast<int>(beta[i]);
    return gamma;
}

Point evaluate_hyperplane(const PointConfig& config, const Hyperplane& gamma)
{
    if (gamma.size() != config.size())
        throw PreconditionError("hyperplane has the wrong length");
    Point value(config.dim, Rational(0));
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        for (std::size_t c = 0; c < config.dim; ++c)
            value[c] += config.points[i][c] * gamma[i];
    }
    return value;
}

ConfigVerdict is_bhg_config(const PointConfig& config, Params p, const Limits& limits)
{
    ConfigVerdict verdict;
    for (std::size_t i = 0; i < config.size() && !verdict.duplicate; ++i) {
        for (std::size_t j = i + 1; j < config.size(); ++j) {
            if (config.points[i] == config.points[j]) {
                verdict.is_bhg = false;
                verdict.duplicate = {i, j};
                verdict.hyperplane = duplicate_hyperplane(config, i, j);
                break;
            }
        }
    }
    if (verdict.duplicate)
        return verdict;
    for (auto& group : multiset_sums(config, p.h, limits)) {
        if (group.members.size() > p.g) {
            verdict.is_bhg = false;
            verdict.hyperplane = violating_hyperplane(config, group.members[0], group.members[1]);
            verdict.collision = std::move(group);
            break;
        }
    }
    return verdict;
}

PointConfig sample_config(const ExperimentSpec& spec, std::uint64_t trial)
{
    if (spec.denominator == 0)
        throw PreconditionError("denominator must be positive");
    if (spec.coord_bound > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw PreconditionError("coordinate bound too large");
    boost::random::mt19937_64 rng(spec.seed + trial);
    const auto bound = static_cast<long long>(spec.coord_bound);
    boost::random::uniform_int_distribution<long long> numerator(-bound, bound);
    std::vector<Point> points(spec.n, Point(spec.dim));
    for (auto& pt : points) {
        for (auto& c : pt)
            c = Rational(BigInt(numerator(rng)), BigInt(spec.denominator));
    }
    return PointConfig::make(spec.dim, std::move(points));
}

ExperimentReport genericity_experiment(const ExperimentSpec& spec, const Limits& limits)
{
    if (spec.trials == 0)
        throw PreconditionError("experiment needs at least one trial");
    ExperimentReport report;
    report.spec = spec;
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
        PointConfig config = sample_config(spec, trial);
        ConfigVerdict verdict = is_bhg_config(config, spec.params, limits);
        if (!verdict.is_bhg)
            report.failures.push_back(ExperimentFailure{trial, spec.seed + trial, std::move(config),
                                                        std::move(verdict)});
    }
    return report;
}

} // namespace sidon
