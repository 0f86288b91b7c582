#include "sidon/cli.hpp"

#include "sidon/bhg.hpp"
#include "sidon/density.hpp"
#include "sidon/game.hpp"
#include "sidon/http.hpp"
#include "sidon/points.hpp"
#include "sidon/serialize.hpp"
#include "sidon/service.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sidon {

namespace {

std::string tuple_string(const Representation& r)
{
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

std::string hyperplane_string(const Hyperplane& g)
{
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i)
        s += (i ? "," : "") + std::to_string(g[i]);
    return s + ")";
}

std::string point_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + to_fraction_string(p[i]);
    return s + ")";
}

/// Parses a game line "k: m1,m2,..." (members may use ranges; may be empty).
Cylinder parse_move_line(const std::string& line)
{
    auto colon = line.find(':');
    if (colon == std::string::npos)
        throw PreconditionError("move must look like 'k: m1,m2,...' (got '" + line + "')");
    std::string head = line.substr(0, colon);
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t") + 1);
    NaturalSet k = NaturalSet::parse(head);
    if (k.size() != 1 || head.find("..") != std::string::npos || head.find(',') != std::string::npos)
        throw PreconditionError("bad horizon '" + head + "'");
    return Cylinder::make(k.min(), NaturalSet::parse(line.substr(colon + 1)));
}

void print_verdict(std::ostream& out, const Verdict& v, Params p)
{
    out << "B_" << p.h << "[" << p.g << "]: " << (v.is_bhg ? "yes" : "NO") << '\n';
    if (v.witness) {
        out << "witness x=" << v.witness->x << " r=" << v.witness->count.str() << '\n';
        for (const auto& r : v.witness->representations)
            out << "  " << tuple_string(r) << '\n';
    }
}

void print_round(std::ostream& out, const GameSession& s)
{
    const auto m = s.rounds().size() - 1;
    const Round& r = s.rounds().back();
    out << "round " << m << ": player I " << r.player1.to_string() << '\n';
    out << "round " << m << ": player II " << r.player2->to_string();
    if (const auto* gap = std::get_if<GapBlock>(&*r.data))
        out << "  x=" << gap->x << " t=" << gap->t;
    else
        out << "  y=" << std::get<DenseBlock>(*r.data).y;
    out << '\n';
}

void print_audit(std::ostream& out, const AuditReport& report)
{
    out << "audit: chain " << (report.chain_ok ? "ok" : "BROKEN") << ", "
        << (report.all_passed() ? "all checks pass" : "FAILURES") << '\n';
    for (const auto& c : report.checks) {
        out << "  round " << c.round << " " << c.name << " " << (c.passed ? "pass" : "FAIL");
        for (const auto& [k, v] : c.values)
            out << " " << k << "=" << v;
        out << '\n';
    }
}

struct Options {
    bool json = false;

    std::string set;
    std::string other;
    long long h = 2;
    long long g = 1;
    std::optional<Natural> x;
    std::optional<Natural> x_max;
    std::string engine = "auto";
    bool list = false;

    std::string f0;
    std::size_t count = 10;
    Natural bound = 1'000'000;

    std::string strategy = "A";
    std::string growth = "sqrt";
    std::string moves_file;
    bool interactive = false;
    std::uint64_t t_cap = 10'000'000;

    Natural horizon = 0;
    Natural tail = 1;
    Natural stride = 1;
    std::optional<Natural> cert_k;
    std::optional<Natural> cert_y;

    std::string config_file;
    std::string points;

    std::size_t n = 4;
    std::size_t dim = 1;
    std::uint64_t trials = 1000;
    std::uint64_t coord_bound = 1'000'000;
    std::uint64_t denominator = 1000;
    std::uint64_t seed = 0;

    std::string host = "127.0.0.1";
    int port = 8080;
    std::string journal;
    std::optional<std::uint64_t> service_seed;
};

int cmd_count(const Options& o, std::ostream& out)
{
    NaturalSet a = NaturalSet::parse(o.set);
    if (o.h < 1)
        throw PreconditionError("h must be at least 1");
    const auto h = static_cast<unsigned>(o.h);
    const std::optional<Engine> engine = o.engine == "auto" ? std::nullopt : std::optional(parse_engine(o.engine));
    if (o.x) {
        BigInt r = rep_count(a, h, *o.x);
        std::vector<Representation> reps;
        if (o.list)
            reps = enumerate_representations(a, h, *o.x);
        if (o.json) {
            json j{{"h", h}, {"x", *o.x}, {"count", r.str()}};
            if (o.list)
                j["representations"] = representations_json(reps);
            out << j.dump() << '\n';
        } else {
            out << r.str() << '\n';
            for (const auto& rep : reps)
                out << "  " << tuple_string(rep) << '\n';
        }
        return 0;
    }
    Natural x_max = o.x_max ? *o.x_max : (a.empty() ? 0 : a.max() * h);
    RepTable t = engine ? rep_table(*engine, a, h, x_max) : rep_table(a, h, x_max);
    if (o.json) {
        out << json(t).dump() << '\n';
    } else {
        out << "# engine=" << engine_name(t.engine) << " h=" << h << " x_max=" << x_max << '\n';
        for (Natural x = 0; x <= x_max; ++x)
            out << x << ' ' << t.counts[x].str() << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    NaturalSet a = NaturalSet::parse(o.set);
    Params p = Params::make(o.h, o.g);
    Verdict v = is_bhg(a, p);
    if (o.json)
        out << json{{"set", a}, {"params", p}, {"verdict", v}}.dump() << '\n';
    else
        print_verdict(out, v, p);
    return 0;
}

int cmd_gadget(const Options& o, std::ostream& out)
{
    NaturalSet f0 = NaturalSet::parse(o.f0);
    Params p = Params::make(o.h, o.g);
    NaturalSet a = violation_gadget(f0, p);
    Natural target = gadget_target(f0, p);
    Witness w = witness_at(a, p.h, target);
    auto built = gadget_representations(f0, p);
    if (o.json) {
        out << json{{"set", a},
                    {"x0", f0.max() + 1},
                    {"target", target},
                    {"count", w.count.str()},
                    {"representations", representations_json(w.representations)},
                    {"constructed", representations_json(built)}}
                   .dump()
            << '\n';
        return 0;
    }
    out << "A=" << a.to_string() << '\n';
    out << "x0=" << f0.max() + 1 << " target=" << target << " r=" << w.count.str() << " (>= " << p.g + 1 << ")\n";
    out << "constructed representations:\n";
    for (const auto& r : built)
        out << "  " << tuple_string(r) << '\n';
    return 0;
}

int cmd_greedy(const Options& o, std::ostream& out, std::ostream& err)
{
    NaturalSet seed = NaturalSet::parse(o.set);
    Params p = Params::make(o.h, o.g);
    try {
        NaturalSet a = greedy_bhg(seed, p, o.count, o.bound);
        if (o.json)
            out << json{{"set", a}, {"params", p}}.dump() << '\n';
        else
            out << a.to_string() << '\n';
        return 0;
    } catch (const BoundExhaustedError& e) {
        err << "error: " << e.what() << '\n';
        if (o.json)
            out << json{{"partial", e.partial()}, {"params", p}}.dump() << '\n';
        else
            out << "partial " << e.partial().to_string() << '\n';
        return 3;
    }
}

int cmd_game(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    Params p = Params::make(o.h, o.g);
    Strategy strategy = parse_strategy(o.strategy);
    std::optional<GrowthFunction> f;
    if (strategy == Strategy::A)
        f = GrowthFunction::parse(o.growth);
    GameConfig config;
    config.t_search_cap = o.t_cap;

    std::ifstream file;
    std::istream* source = &in;
    if (!o.moves_file.empty()) {
        file.open(o.moves_file);
        if (!file)
            throw PreconditionError("cannot open move file '" + o.moves_file + "'");
        source = &file;
    } else if (!o.interactive) {
        throw PreconditionError("game needs --moves FILE or --interactive");
    }
    const bool interactive = o.moves_file.empty();

    std::optional<GameSession> session;
    std::string line;
    auto prompt = [&] {
        if (interactive && !o.json)
            out << "player I (k: members)> " << std::flush;
    };
    prompt();
    while (std::getline(*source, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            prompt();
            continue;
        }
        if (line == "quit" || line == "q")
            break;
        try {
            Cylinder move = parse_move_line(line);
            if (!session)
                session = GameSession::open(p, strategy, f, std::move(move), config);
            else
                session->player1_move(std::move(move));
            session->respond();
            if (!o.json)
                print_round(out, *session);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            if (!interactive)
                return 2;
        }
        prompt();
    }
    if (interactive && !o.json)
        out << '\n';
    if (!session) {
        err << "error: no moves\n";
        return 2;
    }
    AuditReport report = audit_transcript(*session);
    if (o.json) {
        json j = *session;
        j["audit"] = report;
        out << j.dump() << '\n';
    } else {
        print_audit(out, report);
    }
    return report.all_passed() ? 0 : 4;
}

int cmd_density(const Options& o, std::ostream& out)
{
    NaturalSet a = NaturalSet::parse(o.set);
    const bool symdiff = !o.other.empty();
    NaturalSet b = symdiff ? NaturalSet::parse(o.other) : NaturalSet{};
    PrefixDensityReport report = symdiff ? symdiff_density(a, b, o.horizon, o.tail, o.stride)
                                         : prefix_density(a, o.horizon, o.tail, o.stride);
    std::optional<CountingCertificate> cert;
    const bool want_cert = o.cert_k && o.cert_y;
    if (want_cert)
        cert = counting_bound_certificate(symdiff ? b : a, *o.cert_k, *o.cert_y, Params::make(o.h, o.g));
    if (o.json) {
        json j{{"report", report}};
        if (want_cert)
            j["certificate"] = cert ? json(*cert) : json(nullptr);
        out << j.dump() << '\n';
        return 0;
    }
    out << (symdiff ? "symmetric difference" : "set") << " density up to N=" << report.horizon << '\n';
    for (const auto& [n, q] : report.ratios)
        out << n << ' ' << to_fraction_string(q) << '\n';
    out << "min over [" << report.tail_start << "," << report.horizon << "]: " << to_fraction_string(report.min_tail)
        << " at n=" << report.min_tail_at << '\n';
    if (want_cert) {
        if (cert)
            out << "certificate: s=" << cert->s << " C(s,h)=" << cert->subsets.str() << " > hgy=" << cert->capacity.str()
                << " -> not B_" << o.h << "[" << o.g << "]\n";
        else
            out << "certificate: inconclusive\n";
    }
    return 0;
}

PointConfig parse_points_arg(const std::string& text)
{
    std::vector<Point> points;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ';');) {
        Point p;
        std::stringstream coords(item);
        for (std::string c; std::getline(coords, c, ',');)
            p.push_back(parse_rational(c));
        points.push_back(std::move(p));
    }
    const std::size_t dim = points.empty() ? 0 : points.front().size();
    return PointConfig::make(dim, std::move(points));
}

int cmd_points(const Options& o, std::ostream& out)
{
    PointConfig config;
    if (!o.config_file.empty()) {
        std::ifstream file(o.config_file);
        if (!file)
            throw PreconditionError("cannot open config '" + o.config_file + "'");
        config = point_config_from_json(json::parse(file));
    } else {
        config = parse_points_arg(o.points);
    }
    Params p = Params::make(o.h, o.g);
    ConfigVerdict v = is_bhg_config(config, p);
    if (o.json) {
        json j{{"config", config}, {"params", p}, {"verdict", v}};
        if (v.hyperplane) {
            json value = json::array();
            for (const auto& c : evaluate_hyperplane(config, *v.hyperplane))
                value.push_back(to_fraction_string(c));
            j["hyperplane_value"] = value;
        }
        out << j.dump() << '\n';
        return 0;
    }
    out << "B_" << p.h << "[" << p.g << "]: " << (v.is_bhg ? "yes" : "NO") << '\n';
    if (v.duplicate)
        out << "points " << v.duplicate->first + 1 << " and " << v.duplicate->second + 1 << " coincide\n";
    if (v.collision) {
        out << "sum " << point_string(v.collision->sum) << " reached by " << v.collision->members.size()
            << " exponent vectors:\n";
        for (const auto& alpha : v.collision->members) {
            std::vector<int> as_int(alpha.begin(), alpha.end());
            out << "  " << hyperplane_string(as_int) << '\n';
        }
    }
    if (v.hyperplane)
        out << "hyperplane gamma=" << hyperplane_string(*v.hyperplane) << " value "
            << point_string(evaluate_hyperplane(config, *v.hyperplane)) << '\n';
    return 0;
}

int cmd_experiment(const Options& o, std::ostream& out)
{
    ExperimentSpec spec;
    spec.n = o.n;
    spec.dim = o.dim;
    spec.params = Params::make(o.h, o.g);
    spec.trials = o.trials;
    spec.coord_bound = o.coord_bound;
    spec.denominator = o.denominator;
    spec.seed = o.seed;
    ExperimentReport report = genericity_experiment(spec);
    if (o.json) {
        out << json(report).dump() << '\n';
        return 0;
    }
    out << "trials=" << spec.trials << " n=" << spec.n << " d=" << spec.dim << " h=" << spec.params.h
        << " g=" << spec.params.g << " coord_bound=" << spec.coord_bound << " denominator=" << spec.denominator
        << " seed=" << spec.seed << '\n';
    out << "failures=" << report.failures.size() << '\n';
    for (const auto& f : report.failures)
        out << "  trial " << f.trial << " seed " << f.seed << " gamma=" << hyperplane_string(*f.verdict.hyperplane)
            << '\n';
    return 0;
}

HttpServer* g_server = nullptr;

int cmd_serve(const Options& o, std::ostream& out)
{
    ServiceConfig config;
    config.game.t_search_cap = o.t_cap;
    if (!o.journal.empty())
        config.journal_path = o.journal;
    config.seed = o.service_seed;
    SessionService service(config);
    HttpServer server(service);
    int port = server.bind(o.host, o.port);
    if (port < 0)
        throw PreconditionError("cannot bind " + o.host + ":" + std::to_string(o.port));
    out << "listening on http://" << o.host << ":" << port << std::endl;
    g_server = &server;
    std::signal(SIGINT, [](int) {
        if (g_server)
            g_server->stop();
    });
    server.listen_after_bind();
    g_server = nullptr;
    return 0;
}

int cmd_replay(const Options& o, std::ostream& out)
{
    std::ifstream file(o.journal);
    if (!file)
        throw PreconditionError("cannot open journal '" + o.journal + "'");
    ServiceConfig config;
    config.game.t_search_cap = o.t_cap;
    for (const auto& r : SessionService::replay(file, config))
        out << r.status << ' ' << r.body.dump() << '\n';
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Workbench for B_h[g] sets: representation counts, verifiers, Banach-Mazur game strategies"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--h", o.h, "Arity h")->capture_default_str();
        sub->add_option("--g", o.g, "Multiplicity bound g")->capture_default_str();
    };

    auto* count = app.add_subcommand("count", "Representation counts r_{A,h}(x)");
    count->add_option("--set", o.set, "Set, e.g. 0,1,5..9")->required();
    count->add_option("--h", o.h, "Arity h")->capture_default_str();
    count->add_option("--x", o.x, "Single target x");
    count->add_option("--xmax", o.x_max, "Table upper end (default h max A)");
    count->add_option("--engine", o.engine, "auto | oracle | dp | convolution")->capture_default_str();
    count->add_flag("--list", o.list, "List the representations of --x");

    auto* verify = app.add_subcommand("verify", "Decide the B_h[g] property");
    verify->add_option("--set", o.set, "Set")->required();
    add_params(verify);

    auto* gadget = app.add_subcommand("gadget", "Build F0 ∪ [x0, h(x0+g)] and its g+1 representations");
    gadget->add_option("--f0", o.f0, "Nonempty pattern F0")->required();
    add_params(gadget);

    auto* greedy = app.add_subcommand("greedy", "Greedy B_h[g] extension of a seed set");
    greedy->add_option("--seed", o.set, "Seed set (itself B_h[g])")->required();
    greedy->add_option("--count", o.count, "Target size")->capture_default_str();
    greedy->add_option("--bound", o.bound, "Largest candidate tried")->capture_default_str();
    add_params(greedy);

    auto* game = app.add_subcommand("game", "Play Player I against Player II's strategy");
    add_params(game);
    game->add_option("--strategy", o.strategy, "A (gap + block) or B (dense block)")->capture_default_str();
    game->add_option("--f", o.growth, "Growth function for A: sqrt | log | power:p/q")->capture_default_str();
    game->add_option("--moves", o.moves_file, "File with one move per line, 'k: m1,m2,...'");
    game->add_flag("--interactive", o.interactive, "Read moves from standard input");
    game->add_option("--t-cap", o.t_cap, "Strategy A search cap")->capture_default_str();

    auto* density = app.add_subcommand("density", "Prefix densities and the counting certificate");
    density->add_option("--set", o.set, "Set A")->required();
    density->add_option("--other", o.other, "Set B (report A △ B)");
    density->add_option("--n", o.horizon, "Horizon N")->required();
    density->add_option("--tail", o.tail, "Tail window start")->capture_default_str();
    density->add_option("--stride", o.stride, "List every stride-th ratio")->capture_default_str();
    density->add_option("--cert-k", o.cert_k, "Certificate window (k, y]: k");
    density->add_option("--cert-y", o.cert_y, "Certificate window (k, y]: y");
    add_params(density);

    auto* points = app.add_subcommand("points", "B_h[g] check for a rational point configuration");
    auto* cfg = points->add_option("--config", o.config_file, "JSON {\"dim\":d, \"points\":[[\"p/q\",...],...]}");
    auto* pts = points->add_option("--points", o.points, "Inline points '0;1;2' or '0,1;1/2,3'");
    cfg->excludes(pts);
    add_params(points);

    auto* experiment = app.add_subcommand("experiment", "Random configurations: how often is B_h[g] violated");
    experiment->add_option("--n", o.n, "Points per configuration")->capture_default_str();
    experiment->add_option("--d", o.dim, "Dimension")->capture_default_str();
    experiment->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
    experiment->add_option("--bound", o.coord_bound, "Numerator bound")->capture_default_str();
    experiment->add_option("--denominator", o.denominator, "Denominator grid")->capture_default_str();
    experiment->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    add_params(experiment);

    auto* serve = app.add_subcommand("serve", "HTTP session service for the game");
    serve->add_option("--host", o.host, "Bind address")->capture_default_str();
    serve->add_option("--port", o.port, "Port (0 = any)")->capture_default_str()->envname("SIDON_PORT");
    serve->add_option("--journal", o.journal, "Append-only journal path")->envname("SIDON_JOURNAL");
    serve->add_option("--seed", o.service_seed, "Session-id RNG seed")->envname("SIDON_SEED");
    serve->add_option("--t-cap", o.t_cap, "Strategy A search cap")->capture_default_str();

    auto* replay = app.add_subcommand("replay", "Replay a session journal and print every response");
    replay->add_option("--journal", o.journal, "Journal path")->required();
    replay->add_option("--t-cap", o.t_cap, "Strategy A search cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0; every usage error exits 2 like the other failures
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count)
            return cmd_count(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*gadget)
            return cmd_gadget(o, out);
        if (*greedy)
            return cmd_greedy(o, out, err);
        if (*game)
            return cmd_game(o, in, out, err);
        if (*density)
            return cmd_density(o, out);
        if (*points) {
            if (o.config_file.empty() && o.points.empty())
                throw PreconditionError("points needs --config or --points");
            return cmd_points(o, out);
        }
        if (*experiment)
            return cmd_experiment(o, out);
        if (*serve)
            return cmd_serve(o, out);
        if (*replay)
            return cmd_replay(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

} // namespace sidon
