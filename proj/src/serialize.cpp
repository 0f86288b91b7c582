#include "sidon/serialize.hpp"

#include "sidon/errors.hpp"

#include <limits>

namespace sidon {

Natural natural_from_json(const json& j, const char* field)
{
    if (j.is_number_unsigned())
        return j.get<Natural>();
    if (j.is_number_integer()) {
        auto v = j.get<long long>();
        if (v < 0)
            throw PreconditionError(std::string("field '") + field + "' must be nonnegative");
        return static_cast<Natural>(v);
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw PreconditionError(std::string("field '") + field + "' is not a decimal integer");
        try {
            return std::stoull(s);
        } catch (const std::out_of_range&) {
            throw PreconditionError(std::string("field '") + field + "' is out of range");
        }
    }
    throw PreconditionError(std::string("field '") + field + "' must be an integer");
}

namespace {

const json& require(const json& j, const char* field)
{
    if (!j.is_object() || !j.contains(field))
        throw PreconditionError(std::string("missing field '") + field + "'");
    return j.at(field);
}

std::vector<Natural> naturals_from_json(const json& j, const char* field)
{
    if (!j.is_array())
        throw PreconditionError(std::string("field '") + field + "' must be an array");
    std::vector<Natural> out;
    out.reserve(j.size());
    for (const auto& v : j)
        out.push_back(natural_from_json(v, field));
    return out;
}

json point_json(const Point& p)
{
    json arr = json::array();
    for (const auto& c : p)
        arr.push_back(to_fraction_string(c));
    return arr;
}

} // namespace

void to_json(json& j, const NaturalSet& s)
{
    j = json{{"elements", s.vector()}};
}

void from_json(const json& j, NaturalSet& s)
{
    const json& el = j.is_array() ? j : require(j, "elements");
    s = NaturalSet(naturals_from_json(el, "elements"));
}

void to_json(json& j, const Params& p)
{
    j = json{{"h", p.h}, {"g", p.g}};
}

void from_json(const json& j, Params& p)
{
    const json& h = require(j, "h");
    const json& g = require(j, "g");
    if (!h.is_number_integer() || !g.is_number_integer())
        throw PreconditionError("h and g must be integers");
    p = Params::make(h.get<long long>(), g.get<long long>());
}

void to_json(json& j, const RepTable& t)
{
    json counts = json::array();
    for (const auto& c : t.counts)
        counts.push_back(c.str());
    j = json{{"h", t.h}, {"x_max", t.x_max}, {"engine", std::string(engine_name(t.engine))}, {"counts", counts}};
}

json representations_json(const std::vector<Representation>& reps)
{
    json arr = json::array();
    for (const auto& r : reps)
        arr.push_back(r);
    return arr;
}

void to_json(json& j, const Witness& w)
{
    j = json{{"x", w.x}, {"count", w.count.str()}, {"representations", representations_json(w.representations)}};
}

void to_json(json& j, const Verdict& v)
{
    j = json{{"is_bhg", v.is_bhg}};
    if (v.witness)
        j["witness"] = *v.witness;
}

void to_json(json& j, const Cylinder& c)
{
    j = json{{"k", c.k}, {"members", c.members.vector()}};
}

void from_json(const json& j, Cylinder& c)
{
    Natural k = natural_from_json(require(j, "k"), "k");
    NaturalSet members = NaturalSet::from_unsorted(naturals_from_json(require(j, "members"), "members"));
    c = Cylinder::make(k, std::move(members));
}

void to_json(json& j, const GrowthFunction& f)
{
    switch (f.kind()) {
    case GrowthFunction::Kind::sqrt: j = json{{"kind", "sqrt"}}; break;
    case GrowthFunction::Kind::log: j = json{{"kind", "log"}}; break;
    case GrowthFunction::Kind::power: j = json{{"kind", "power"}, {"num", f.num()}, {"den", f.den()}}; break;
    case GrowthFunction::Kind::table:
        j = json{{"kind", "table"}, {"values", f.values()}, {"acknowledged", f.acknowledged()}};
        break;
    }
}

GrowthFunction growth_from_json(const json& j)
{
    if (j.is_string())
        return GrowthFunction::parse(j.get<std::string>());
    const json& kind = require(j, "kind");
    if (!kind.is_string())
        throw PreconditionError("growth kind must be a string");
    const auto& name = kind.get_ref<const std::string&>();
    if (name == "sqrt")
        return GrowthFunction::sqrt();
    if (name == "log")
        return GrowthFunction::log();
    if (name == "power")
        return GrowthFunction::power(static_cast<unsigned>(natural_from_json(require(j, "num"), "num")),
                                     static_cast<unsigned>(natural_from_json(require(j, "den"), "den")));
    if (name == "table") {
        bool ack = j.value("acknowledged", false);
        return GrowthFunction::table(naturals_from_json(require(j, "values"), "values"), ack);
    }
    throw PreconditionError("unknown growth kind '" + name + "'");
}

void to_json(json& j, const Round& r)
{
    j = json{{"player1", r.player1}};
    if (r.player2)
        j["player2"] = *r.player2;
    if (r.data) {
        if (const auto* gap = std::get_if<GapBlock>(&*r.data))
            j["data"] = json{{"x", gap->x}, {"t", gap->t}};
        else
            j["data"] = json{{"y", std::get<DenseBlock>(*r.data).y}};
    }
}

void to_json(json& j, const AuditCheck& c)
{
    json values = json::object();
    for (const auto& [key, value] : c.values)
        values[key] = value;
    j = json{{"round", c.round}, {"name", c.name}, {"passed", c.passed}, {"values", values}};
}

void to_json(json& j, const AuditReport& r)
{
    j = json{{"chain_ok", r.chain_ok}, {"all_passed", r.all_passed()}, {"checks", r.checks}};
}

void to_json(json& j, const GameSession& s)
{
    json rounds = json::array();
    for (std::size_t m = 0; m < s.rounds().size(); ++m) {
        json r = s.rounds()[m];
        r["m"] = m;
        rounds.push_back(std::move(r));
    }
    j = json{{"params", s.params()},
             {"strategy", strategy_name(s.strategy())},
             {"turn", s.turn() == GameSession::Turn::player1 ? "player1" : "player2"},
             {"rounds", rounds}};
    if (s.growth())
        j["f"] = *s.growth();
}

void to_json(json& j, const PrefixDensityReport& r)
{
    json ratios = json::array();
    for (const auto& [n, q] : r.ratios)
        ratios.push_back(json::array({n, to_fraction_string(q)}));
    j = json{{"horizon", r.horizon},
             {"tail_start", r.tail_start},
             {"min_tail", to_fraction_string(r.min_tail)},
             {"min_tail_at", r.min_tail_at},
             {"ratios", ratios}};
}

void to_json(json& j, const CountingCertificate& c)
{
    j = json{{"k", c.k}, {"y", c.y}, {"s", c.s}, {"subsets", c.subsets.str()}, {"capacity", c.capacity.str()}};
}

void to_json(json& j, const PointConfig& c)
{
    json points = json::array();
    for (const auto& p : c.points)
        points.push_back(point_json(p));
    j = json{{"dim", c.dim}, {"points", points}};
}

PointConfig point_config_from_json(const json& j)
{
    const json& pts = require(j, "points");
    if (!pts.is_array())
        throw PreconditionError("'points' must be an array");
    std::vector<Point> points;
    for (const auto& row : pts) {
        if (!row.is_array())
            throw PreconditionError("each point must be an array of coordinates");
        Point p;
        for (const auto& c : row) {
            if (c.is_string())
                p.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer())
                p.push_back(Rational(c.get<long long>()));
            else
                throw PreconditionError("coordinates must be integers or \"p/q\" strings");
        }
        points.push_back(std::move(p));
    }
    std::size_t dim = j.contains("dim") ? natural_from_json(j.at("dim"), "dim")
                                        : (points.empty() ? 0 : points.front().size());
    return PointConfig::make(dim, std::move(points));
}

void to_json(json& j, const SumGroup& g)
{
    j = json{{"sum", point_json(g.sum)}, {"members", g.members}};
}

void to_json(json& j, const ConfigVerdict& v)
{
    j = json{{"is_bhg", v.is_bhg}};
    if (v.duplicate)
        j["duplicate"] = json::array({v.duplicate->first, v.duplicate->second});
    if (v.collision)
        j["collision"] = *v.collision;
    if (v.hyperplane)
        j["hyperplane"] = *v.hyperplane;
}

void to_json(json& j, const ExperimentReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"trial", f.trial}, {"seed", f.seed}, {"config", f.config}, {"verdict", f.verdict}});
    j = json{{"n", r.spec.n},
             {"dim", r.spec.dim},
             {"params", r.spec.params},
             {"trials", r.spec.trials},
             {"coord_bound", r.spec.coord_bound},
             {"denominator", r.spec.denominator},
             {"seed", r.spec.seed},
             {"failure_count", r.failures.size()},
             {"failures", failures}};
}

} // namespace sidon
