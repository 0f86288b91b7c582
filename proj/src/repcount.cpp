#include "sidon/repcount.hpp"

#include "sidon/errors.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace sidon {

using u128 = unsigned __int128;

std::string_view engine_name(Engine e)
{
    switch (e) {
    case Engine::oracle: return "oracle";
    case Engine::dp: return "dp";
    case Engine::convolution: return "convolution";
    }
    return "unknown";
}

Engine parse_engine(std::string_view name)
{
    if (name == "oracle")
        return Engine::oracle;
    if (name == "dp")
        return Engine::dp;
    if (name == "convolution")
        return Engine::convolution;
    throw PreconditionError("unknown engine '" + std::string(name) + "'");
}

BigInt RepTable::total() const
{
    BigInt sum = 0;
    for (const auto& c : counts)
        sum += c;
    return sum;
}

namespace {

void require_arity(unsigned h)
{
    if (h < 1)
        throw PreconditionError("arity h must be at least 1");
}

using Elements = std::span<const Natural>;

// Number of a_j, j >= start, equal to `target`.
std::uint64_t count_last(Elements a, std::size_t start, Natural target)
{
    return std::binary_search(a.begin() + static_cast<std::ptrdiff_t>(start), a.end(), target) ? 1 : 0;
}

// Maximal runs of consecutive integers, with the run index of every element.
struct Runs {
    std::vector<Natural> lo, hi;
    std::vector<std::uint32_t> of;

    explicit Runs(Elements a)
    {
        of.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == 0 || a[i] != a[i - 1] + 1) {
                lo.push_back(a[i]);
                hi.push_back(a[i]);
            } else {
                hi.back() = a[i];
            }
            of.push_back(static_cast<std::uint32_t>(lo.size() - 1));
        }
    }
};

struct Counter {
    Elements a;
    Runs runs;
    bool by_runs;

    explicit Counter(Elements elements)
        : a(elements), runs(elements)
    {
        const std::size_t r = runs.lo.size();
        by_runs = r * r < a.size();
    }

    std::uint64_t pairs_scan(std::size_t start, Natural remaining) const
    {
        std::uint64_t total = 0;
        for (std::size_t i = start; i < a.size(); ++i) {
            if (static_cast<u128>(a[i]) * 2 > remaining)
                break;
            total += count_last(a, i, remaining - a[i]);
        }
        return total;
    }

    // Pairs u <= v from a[start..] with u + v = remaining, one run pair at a time.
    std::uint64_t pairs_runs(std::size_t start, Natural s) const
    {
        std::uint64_t total = 0;
        const std::size_t first = runs.of[start];
        for (std::size_t i = first; i < runs.lo.size(); ++i) {
            const Natural lo_i = i == first ? a[start] : runs.lo[i];
            if (static_cast<u128>(lo_i) * 2 > s)
                break;
            for (std::size_t j = i; j < runs.lo.size(); ++j) {
                if (runs.lo[j] > s - lo_i)
                    break;
                Natural lo = lo_i;
                if (runs.hi[j] < s)
                    lo = std::max(lo, s - runs.hi[j]);
                Natural hi = std::min(runs.hi[i], s - runs.lo[j]);
                if (i == j)
                    hi = std::min(hi, s / 2);
                if (lo <= hi)
                    total += hi - lo + 1;
            }
        }
        return total;
    }

    BigInt count(std::size_t start, unsigned parts, Natural remaining) const
    {
        if (start >= a.size())
            return 0;
        if (parts == 1)
            return count_last(a, start, remaining);
        if (parts == 2)
            return by_runs ? pairs_runs(start, remaining) : pairs_scan(start, remaining);
        BigInt total = 0;
        std::uint64_t small = 0;
        for (std::size_t i = start; i < a.size(); ++i) {
            if (static_cast<u128>(a[i]) * parts > remaining)
                break;
            if (parts == 3) {
                std::uint64_t c = by_runs ? pairs_runs(i, remaining - a[i]) : pairs_scan(i, remaining - a[i]);
                if (small > std::numeric_limits<std::uint64_t>::max() - c) {
                    total += small;
                    small = 0;
                }
                small += c;
            } else {
                total += count(i, parts - 1, remaining - a[i]);
            }
        }
        return total + small;
    }
};

RepTable make_table(unsigned h, Natural x_max, Engine engine)
{
    if (x_max >= std::numeric_limits<std::size_t>::max() / 2)
        throw ResourceLimitError("x_max too large");
    RepTable t;
    t.h = h;
    t.x_max = x_max;
    t.engine = engine;
    t.counts.assign(static_cast<std::size_t>(x_max) + 1, BigInt(0));
    return t;
}

void check_table_budget(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits)
{
    u128 work = static_cast<u128>(h) * (static_cast<u128>(x_max) + 1) * std::max<std::size_t>(a.size(), 1);
    if (work > limits.table_work)
        throw ResourceLimitError("table work h*(x_max+1)*|A| = " + BigInt(static_cast<std::uint64_t>(
                                     std::min<u128>(work, std::numeric_limits<std::uint64_t>::max())))
                                     .str()
                                 + " exceeds budget " + std::to_string(limits.table_work));
}

// |A|^h * scale fits comfortably in 63 bits.
bool fits_machine_word(std::size_t n, unsigned h, std::uint64_t scale)
{
    u128 bound = scale;
    for (unsigned i = 0; i < h; ++i) {
        bound *= std::max<std::size_t>(n, 1);
        if (bound > (static_cast<u128>(1) << 62))
            return false;
    }
    return true;
}

template <typename Count>
void dp_kernel(Elements a, unsigned h, Natural x_max, std::vector<BigInt>& out)
{
    const std::size_t width = static_cast<std::size_t>(x_max) + 1;
    // layers[j][s]: multisets of size j over the elements seen so far with sum s
    std::vector<std::vector<Count>> layers(h + 1, std::vector<Count>(width, Count(0)));
    layers[0][0] = 1;
    for (Natural v : a) {
        if (v > x_max)
            break;
        const auto shift = static_cast<std::size_t>(v);
        // ascending j reuses the freshly updated layer j-1, which admits repetition of v
        for (unsigned j = 1; j <= h; ++j) {
            auto& cur = layers[j];
            const auto& prev = layers[j - 1];
            for (std::size_t s = shift; s < width; ++s)
                cur[s] += prev[s - shift];
        }
    }
    for (std::size_t s = 0; s < width; ++s)
        out[s] = BigInt(layers[h][s]);
}

struct CycleTerm {
    std::uint64_t coefficient;
    std::vector<unsigned> cycles;
};

struct CycleIndex {
    std::uint64_t order;
    std::vector<CycleTerm> terms;
};

// Z(S_h) for h = 1..4, one term per cycle type.
const CycleIndex& cycle_index(unsigned h)
{
    static const CycleIndex table[] = {
        {1, {{1, {1}}}},
        {2, {{1, {1, 1}}, {1, {2}}}},
        {6, {{1, {1, 1, 1}}, {3, {1, 2}}, {2, {3}}}},
        {24, {{1, {1, 1, 1, 1}}, {6, {1, 1, 2}}, {3, {2, 2}}, {8, {1, 3}}, {6, {4}}}},
    };
    return table[h - 1];
}

// poly * sum_{a in A, k a <= x_max} z^{k a}, truncated to degree x_max
template <typename Count>
std::vector<Count> times_power_sum(const std::vector<Count>& poly, Elements a, unsigned k, Natural x_max)
{
    const std::size_t width = poly.size();
    std::vector<Count> out(width, Count(0));
    for (Natural v : a) {
        u128 shift128 = static_cast<u128>(v) * k;
        if (shift128 > x_max)
            break;
        const auto shift = static_cast<std::size_t>(shift128);
        for (std::size_t s = 0; s + shift < width; ++s) {
            if (poly[s] != 0)
                out[s + shift] += poly[s];
        }
    }
    return out;
}

template <typename Count>
void convolution_kernel(Elements a, unsigned h, Natural x_max, std::vector<BigInt>& out)
{
    const std::size_t width = static_cast<std::size_t>(x_max) + 1;
    const CycleIndex& index = cycle_index(h);
    std::vector<Count> acc(width, Count(0));
    for (const CycleTerm& term : index.terms) {
        std::vector<Count> poly(width, Count(0));
        poly[0] = 1;
        for (unsigned k : term.cycles)
            poly = times_power_sum(poly, a, k, x_max);
        for (std::size_t s = 0; s < width; ++s)
            acc[s] += poly[s] * term.coefficient;
    }
    for (std::size_t s = 0; s < width; ++s) {
        if (acc[s] % index.order != 0)
            throw std::logic_error("cycle-index sum not divisible by |S_h| at x = " + std::to_string(s));
        out[s] = BigInt(acc[s] / index.order);
    }
}

template <typename Emit>
bool enumerate_rec(Elements a, std::size_t start, unsigned parts, Natural remaining,
                   Representation& prefix, Emit& emit)
{
    if (parts == 1) {
        if (count_last(a, start, remaining) != 0) {
            prefix.push_back(remaining);
            bool go_on = emit(prefix);
            prefix.pop_back();
            return go_on;
        }
        return true;
    }
    for (std::size_t i = start; i < a.size(); ++i) {
        if (static_cast<u128>(a[i]) * parts > remaining)
            break;
        prefix.push_back(a[i]);
        bool go_on = enumerate_rec(a, i, parts - 1, remaining - a[i], prefix, emit);
        prefix.pop_back();
        if (!go_on)
            return false;
    }
    return true;
}

} // namespace

BigInt rep_count(const NaturalSet& a, unsigned h, Natural x)
{
    require_arity(h);
    return Counter(a.elements()).count(0, h, x);
}

RepTable rep_table_oracle(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits)
{
    require_arity(h);
    RepTable table = make_table(h, x_max, Engine::oracle);
    std::vector<std::uint64_t> counts(table.counts.size(), 0);
    std::uint64_t visits = 0;
    Elements el = a.elements();
    // depth-first over non-decreasing index tuples; a partial sum s with `parts`
    // slots left can only complete if s + parts * a_i <= x_max
    auto visit = [&](auto&& self, std::size_t start, unsigned parts, Natural sum) -> void {
        if (++visits > limits.oracle_visits)
            throw ResourceLimitError("oracle enumeration exceeds " + std::to_string(limits.oracle_visits)
                                     + " visits");
        if (parts == 0) {
            ++counts[static_cast<std::size_t>(sum)];
            return;
        }
        for (std::size_t i = start; i < el.size(); ++i) {
            if (static_cast<u128>(el[i]) * parts + sum > x_max)
                break;
            self(self, i, parts - 1, sum + el[i]);
        }
    };
    visit(visit, 0, h, 0);
    for (std::size_t s = 0; s < counts.size(); ++s)
        table.counts[s] = counts[s];
    return table;
}

RepTable rep_table_dp(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits)
{
    require_arity(h);
    check_table_budget(a, h, x_max, limits);
    RepTable table = make_table(h, x_max, Engine::dp);
    // every entry is bounded by the total number of h-multisets
    if (binomial(a.size() + h - 1, h) < (BigInt(1) << 62))
        dp_kernel<std::uint64_t>(a.elements(), h, x_max, table.counts);
    else
        dp_kernel<BigInt>(a.elements(), h, x_max, table.counts);
    return table;
}

RepTable rep_table_convolution(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits)
{
    if (h < 1 || h > max_convolution_arity)
        throw UnsupportedArityError("convolution engine supports 1 <= h <= "
                                    + std::to_string(max_convolution_arity) + " (got "
                                    + std::to_string(h) + ")");
    check_table_budget(a, h, x_max, limits);
    RepTable table = make_table(h, x_max, Engine::convolution);
    // intermediate sums are bounded by |S_h| * (number of terms) * |A|^h
    if (fits_machine_word(a.size(), h, 24 * 5))
        convolution_kernel<std::uint64_t>(a.elements(), h, x_max, table.counts);
    else
        convolution_kernel<BigInt>(a.elements(), h, x_max, table.counts);
    return table;
}

RepTable rep_table(const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits)
{
    if (h >= 1 && h <= max_convolution_arity)
        return rep_table_convolution(a, h, x_max, limits);
    return rep_table_dp(a, h, x_max, limits);
}

RepTable rep_table(Engine engine, const NaturalSet& a, unsigned h, Natural x_max, const Limits& limits)
{
    switch (engine) {
    case Engine::oracle: return rep_table_oracle(a, h, x_max, limits);
    case Engine::dp: return rep_table_dp(a, h, x_max, limits);
    case Engine::convolution: return rep_table_convolution(a, h, x_max, limits);
    }
    throw PreconditionError("unknown engine");
}

std::vector<Representation> enumerate_representations(const NaturalSet& a, unsigned h, Natural x,
                                                       const Limits& limits)
{
    require_arity(h);
    BigInt count = rep_count(a, h, x);
    if (count > limits.max_witnesses)
        throw ResourceLimitError(count.str() + " representations of " + std::to_string(x)
                                 + " exceed the witness cap " + std::to_string(limits.max_witnesses));
    return first_representations(a, h, x, static_cast<std::size_t>(count));
}

std::vector<Representation> first_representations(const NaturalSet& a, unsigned h, Natural x,
                                                  std::size_t count)
{
    require_arity(h);
    std::vector<Representation> out;
    if (count == 0)
        return out;
    Representation prefix;
    prefix.reserve(h);
    auto emit = [&](const Representation& r) {
        out.push_back(r);
        return out.size() < count;
    };
    enumerate_rec(a.elements(), 0, h, x, prefix, emit);
    return out;
}

PartitionCounter::PartitionCounter(unsigned h)
    : h_(h)
    , rows_(h + 1, std::vector<BigInt>(h + 1, BigInt(0)))
{
    require_arity(h);
}

const BigInt& PartitionCounter::next()
{
    const std::uint64_t n = computed_++;
    auto& row = rows_[n % (h_ + 1)];
    row[0] = (n == 0) ? 1 : 0;
    for (unsigned k = 1; k <= h_; ++k) {
        row[k] = row[k - 1];
        if (n >= k)
            row[k] += rows_[(n - k) % (h_ + 1)][k];
    }
    return row[h_];
}

BigInt partitions_at_most(long long n, unsigned h)
{
    require_arity(h);
    if (n < 0)
        return 0;
    PartitionCounter counter(h);
    BigInt value;
    for (long long i = 0; i <= n; ++i)
        value = counter.next();
    return value;
}

} // namespace sidon
