#include "sidon/cli.hpp"
#include "sidon/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "sidon");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = sidon::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Run run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    return run(std::move(args));
}

// Every integer printed in `text`, as decimal strings.
std::vector<std::string> numbers_in(const std::string& text)
{
    std::vector<std::string> found;
    std::regex number("[0-9]+");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
        found.push_back(it->str());
    return found;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("verify, gadget and count examples")
{
    Run v = run({"verify", "--set", "0,1,2", "--h", "2", "--g", "1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("NO") != std::string::npos);
    CHECK(v.out.find("witness x=2") != std::string::npos);
    CHECK(run({"verify", "--set", "0,1,3,7", "--h", "2", "--g", "1"}).out.find("yes") != std::string::npos);

    Run g = run({"gadget", "--f0", "0", "--h", "2", "--g", "1"});
    CHECK(g.code == 0);
    CHECK(g.out.find("A={0..4}") != std::string::npos);
    CHECK(g.out.find("target=4") != std::string::npos);
    CHECK(g.out.find("(2,2)") != std::string::npos);
    CHECK(g.out.find("(1,3)") != std::string::npos);

    Run c = run({"count", "--set", "0..10", "--h", "2", "--x", "10"});
    CHECK(c.code == 0);
    CHECK(c.out == "6\n");
}

TEST_CASE("json output carries the same numbers")
{
    auto v = sidon::json::parse(run_json({"verify", "--set", "0,1,2", "--h", "2", "--g", "1"}).out);
    CHECK(v.at("verdict").at("is_bhg") == false);
    CHECK(v.at("verdict").at("witness").at("x") == 2);
    CHECK(v.at("verdict").at("witness").at("count") == "2");

    auto g = sidon::json::parse(run_json({"gadget", "--f0", "0", "--h", "2", "--g", "1"}).out);
    CHECK(g.at("set").at("elements") == sidon::json({0, 1, 2, 3, 4}));
    CHECK(g.at("target") == 4);

    // every integer of the text form appears in the json form
    const std::vector<std::vector<std::string>> commands = {
        {"greedy", "--seed", "1", "--count", "10", "--h", "2", "--g", "1"},
        {"density", "--set", "0..9", "--n", "20", "--tail", "5", "--stride", "10", "--cert-k", "0", "--cert-y", "9"},
        {"points", "--points", "0;1;2", "--h", "2", "--g", "1"},
        {"experiment", "--n", "3", "--trials", "4", "--bound", "1", "--denominator", "1", "--h", "2", "--g", "1"},
    };
    // a table row "x r" appears as counts[x]
    Run table = run({"count", "--set", "0,1,3", "--h", "2", "--xmax", "6", "--engine", "dp"});
    auto counts = sidon::json::parse(run_json({"count", "--set", "0,1,3", "--h", "2", "--xmax", "6", "--engine", "dp"}).out);
    CHECK(counts.at("x_max") == 6);
    std::istringstream rows(table.out.substr(table.out.find('\n') + 1));
    std::size_t x = 0;
    for (std::string r; rows >> x >> r;)
        CHECK(counts.at("counts").at(x) == r);
    CHECK(x == 6);

    for (const auto& cmd : commands) {
        Run text = run(cmd);
        Run js = run_json(cmd);
        REQUIRE(text.code == 0);
        REQUIRE(js.code == 0);
        REQUIRE(sidon::json::accept(js.out));
        for (const auto& n : numbers_in(text.out)) {
            INFO(cmd[0] << ": " << n);
            CHECK(js.out.find(n) != std::string::npos);
        }
    }
}

TEST_CASE("greedy reports bound exhaustion")
{
    Run r = run({"greedy", "--seed", "0", "--count", "10", "--bound", "20", "--h", "2", "--g", "1"});
    CHECK(r.code == 3);
    CHECK(r.out.find("{0,1,3,7,12,20}") != std::string::npos);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit nonzero with a diagnostic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"count", "--h", "2"},
             {"verify", "--set", "0,1", "--h", "1", "--g", "1"},
             {"verify", "--set", "0,x", "--h", "2", "--g", "1"},
             {"count", "--set", "0..3", "--h", "2", "--x", "1", "--engine", "fft"},
             {"game", "--h", "2", "--g", "1", "--strategy", "A"},
             {"points", "--h", "2", "--g", "1"},
         }) {
        Run r = run(args);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
        CHECK(r.out.empty());
    }
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scripted game from a move file")
{
    auto moves = write_temp("sidon_cli_moves.txt", "1: 0\n# keep the pattern\n20: 0,5..16\n");
    Run r = run({"game", "--h", "2", "--g", "1", "--f", "sqrt", "--moves", moves.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("round 0: player II k=16 {0,5..16}  x=5 t=16") != std::string::npos);
    CHECK(r.out.find("round 1: player II k=132 {0,5..16,43..132}  x=43 t=132") != std::string::npos);
    CHECK(r.out.find("all checks pass") != std::string::npos);

    auto js = sidon::json::parse(run_json({"game", "--h", "2", "--g", "1", "--f", "sqrt", "--moves", moves.string()}).out);
    CHECK(js.at("audit").at("all_passed") == true);
    CHECK(js.at("audit").at("checks").size() == 4);

    auto bad = write_temp("sidon_cli_bad_moves.txt", "1: 0\n20: 0,2\n");
    Run b = run({"game", "--h", "2", "--g", "1", "--f", "sqrt", "--moves", bad.string()});
    CHECK(b.code == 2);
    CHECK(b.err.find("position 2") != std::string::npos);
    std::filesystem::remove(moves);
    std::filesystem::remove(bad);
}

TEST_CASE("interactive game reads one move per line")
{
    Run r = run({"game", "--h", "2", "--g", "1", "--strategy", "B", "--interactive"}, "2: 0,2\n3: 0,2\n7: 0,2..7\nquit\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("round 0: player II k=3 {0,2,3}") != std::string::npos);
    // the rejected line does not end the session
    CHECK(r.err.find("position 3") != std::string::npos);
    CHECK(r.out.find("round 1: player II k=15 {0,2..15}") != std::string::npos);
    CHECK(r.out.find("chain ok") != std::string::npos);
}

TEST_CASE("identical invocations give identical output")
{
    const std::vector<std::string> cmd = {"experiment", "--n", "4", "--trials", "30", "--seed", "5", "--h", "3", "--g", "1"};
    CHECK(run_json(cmd).out == run_json(cmd).out);
}
