#pragma once

#include "sidon/natural_set.hpp"
#include "sidon/numeric.hpp"

#include <string>
#include <vector>

namespace sidon {

/// A divergent map f : N -> N with f(n) = o(n^{h-1}), used as the growth
/// target of the first game strategy.
///
/// Presets:
///   sqrt        f(n) = ceil(sqrt(n))
///   log         f(n) = ceil(log2(n + 1))
///   power p/q   f(n) = ceil(n^{p/q}),   0 < p/q < h - 1
///   table       f(n) = values[n]; divergence cannot be checked for a finite
///               table, so the caller must acknowledge it explicitly. Evaluating
///               past the end of the table throws.
class GrowthFunction {
public:
    enum class Kind { sqrt, log, power, table };

    static GrowthFunction sqrt();
    static GrowthFunction log();
    static GrowthFunction power(unsigned num, unsigned den);
    static GrowthFunction table(std::vector<Natural> values, bool acknowledged);

    /// Parses "sqrt", "log", "power:p/q". Tables are only built through JSON.
    static GrowthFunction parse(const std::string& text);

    Kind kind() const { return kind_; }
    unsigned num() const { return num_; }
    unsigned den() const { return den_; }
    const std::vector<Natural>& values() const { return values_; }
    bool acknowledged() const { return acknowledged_; }

    /// Throws PreconditionError if f is not o(n^{h-1}) for this h.
    void check_arity(unsigned h) const;

    BigInt operator()(Natural n) const;

    std::string describe() const;

    friend bool operator==(const GrowthFunction&, const GrowthFunction&) = default;

private:
    GrowthFunction() = default;

    Kind kind_ = Kind::sqrt;
    unsigned num_ = 1;
    unsigned den_ = 2;
    std::vector<Natural> values_;
    bool acknowledged_ = false;
};

/// ceil(v^{1/q}) for q >= 1.
BigInt ceil_root(const BigInt& v, unsigned q);

} // namespace sidon
