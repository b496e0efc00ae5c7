#include "rzk/cli.hpp"
#include "rzk/fixtures.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <sys/wait.h>

using namespace rzk;

namespace {

std::string fixture(const std::string& name) { return std::string(RZK_FIXTURE_DIR) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_config(cli::RunConfig cfg)
{
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

Result run_cmd(const std::string& command, const std::string& input, unsigned workers = 1)
{
    cli::RunConfig cfg;
    cfg.command = command;
    cfg.input = input;
    cfg.workers = workers;
    return run_config(cfg);
}

// Runs the built executable; returns exit status and stdout.
std::pair<int, std::string> run_binary(const std::string& args)
{
    const std::string cmd = std::string(RZK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, BettiPentagon)
{
    const auto r = run_cmd("betti", fixture("pentagon.json"));
    ASSERT_EQ(r.code, cli::ok) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["betti"], nlohmann::json({1, 10, 1}));
    EXPECT_EQ(j["torsion"], nlohmann::json({nlohmann::json::array(), nlohmann::json::array(), nlohmann::json::array()}));
    EXPECT_EQ(j["euler_characteristic"], -8);
}

TEST(Cli, TextInputMatchesJson)
{
    const auto a = run_cmd("betti", fixture("pentagon.txt"));
    const auto b = run_cmd("betti", fixture("pentagon.json"));
    EXPECT_EQ(a.code, cli::ok);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ComparePentagon)
{
    const auto r = run_cmd("compare", fixture("pentagon.json"));
    ASSERT_EQ(r.code, cli::ok) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["match"], true);
}

TEST(Cli, InvalidInput)
{
    const auto r = run_cmd("betti", fixture("bad_vertex.json"));
    EXPECT_EQ(r.code, cli::input_error);
    EXPECT_TRUE(r.out.empty());
    const auto err = nlohmann::json::parse(r.err);
    EXPECT_EQ(err["error"], "invalid-input");
    EXPECT_EQ(run_cmd("betti", fixture("missing.json")).code, cli::input_error);
    EXPECT_EQ(run_cmd("frobnicate", fixture("pentagon.json")).code, cli::input_error);
}

TEST(Cli, SizeLimit)
{
    cli::RunConfig cfg;
    cfg.command = "oracle";
    cfg.input = fixture("pentagon.json");
    cfg.limits.max_cells = 100;
    const auto r = run_config(cfg);
    EXPECT_EQ(r.code, cli::size_limit);
    EXPECT_EQ(nlohmann::json::parse(r.err)["error"], "size-limit");

    cfg.command = "betti";
    cfg.limits = {};
    cfg.limits.max_vertices = 4;
    EXPECT_EQ(run_config(cfg).code, cli::size_limit);
}

TEST(Cli, MismatchExitCode)
{
    const auto h = build_ring(fixtures::pentagon(), Route::hochster);
    auto o = build_ring(fixtures::pentagon(), Route::oracle);
    EXPECT_EQ(cli::exit_code(compare_rings(h, o)), cli::ok);
    for (auto& [key, coords] : o.products) {
        if (o.generators[key.first].degree == 1) {
            coords[0] += 1;
            break;
        }
    }
    EXPECT_EQ(cli::exit_code(compare_rings(h, o)), cli::mismatch);
}

TEST(Cli, AllCommandsProduceJson)
{
    for (const auto& command : cli::commands()) {
        const auto r = run_cmd(command, fixture("square.json"));
        ASSERT_EQ(r.code, cli::ok) << command << ": " << r.err;
        const auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j["command"], command);
    }
}

TEST(Cli, Validate)
{
    const auto r = run_cmd("validate", fixture("rp2_6.json"));
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["f_vector"], nlohmann::json({1, 6, 15, 10}));
    EXPECT_EQ(j["ghost_vertices"], nlohmann::json::array());
    EXPECT_EQ(j["euler_characteristic"], 32);
}

TEST(Cli, CohomologyAndHochster)
{
    const auto c = nlohmann::json::parse(run_cmd("cohomology", fixture("rp2_6.json")).out);
    EXPECT_EQ(c["degrees"][3]["torsion"], nlohmann::json({2}));
    EXPECT_EQ(c["degrees"][3]["generators"][0]["omega"], nlohmann::json({1, 2, 3, 4, 5, 6}));
    const auto h = nlohmann::json::parse(run_cmd("hochster", fixture("pentagon.json")).out);
    EXPECT_EQ(h["table"].size(), 12u);
}

TEST(Cli, OracleDump)
{
    cli::RunConfig cfg;
    cfg.command = "oracle";
    cfg.input = fixture("rp2_6.json");
    cfg.dump = true;
    const auto j = nlohmann::json::parse(run_config(cfg).out);
    EXPECT_EQ(j["cells"], nlohmann::json({64, 192, 240, 80}));
    EXPECT_EQ(j["torsion"][3], nlohmann::json({2}));
    EXPECT_EQ(j["complex"]["dims"], nlohmann::json({64, 192, 240, 80}));
}

TEST(Cli, CheckFlag)
{
    cli::RunConfig cfg;
    cfg.command = "betti";
    cfg.input = fixture("hexagon.json");
    cfg.check = true;
    const auto r = run_config(cfg);
    EXPECT_EQ(r.code, cli::ok);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["betti"][1], 34);
    EXPECT_EQ(j["check"]["match"], true);
}

TEST(Cli, TableFormatIsRenderedFromJson)
{
    cli::RunConfig cfg;
    cfg.command = "hochster";
    cfg.input = fixture("pentagon.json");
    cfg.format = "table";
    const auto r = run_config(cfg);
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_NE(r.out.find("omega"), std::string::npos);
    const auto j = nlohmann::json::parse(run_cmd("hochster", fixture("pentagon.json")).out);
    for (const auto& row : j["table"]) {
        for (const auto& g : row["generators"]) EXPECT_NE(r.out.find(g.get<std::string>()), std::string::npos);
    }
    cfg.format = "xml";
    EXPECT_EQ(run_config(cfg).code, cli::input_error);
}

TEST(Cli, DeterministicUnderParallelism)
{
    for (const auto& command : {"hochster", "ring", "oracle", "compare", "cohomology"}) {
        const auto a = run_cmd(command, fixture("rp2_6.json"), 1);
        const auto b = run_cmd(command, fixture("rp2_6.json"), 4);
        const auto c = run_cmd(command, fixture("rp2_6.json"), 4);
        EXPECT_EQ(a.out, b.out) << command;
        EXPECT_EQ(b.out, c.out) << command;
    }
}

TEST(Cli, Environment)
{
    std::map<std::string, std::string> env{{"RZK_MAX_CELLS", "500"}, {"RZK_WORKERS", "3"}, {"RZK_SEED", "9"}};
    const auto lookup = [&env](const char* name) -> const char* {
        auto it = env.find(name);
        return it == env.end() ? nullptr : it->second.c_str();
    };
    cli::RunConfig cfg;
    cli::apply_environment(cfg, lookup);
    EXPECT_EQ(cfg.limits.max_cells, 500u);
    EXPECT_EQ(cfg.workers, 3u);
    EXPECT_EQ(cfg.seed, 9u);
    env["RZK_MAX_VERTICES"] = "zero";
    EXPECT_THROW(cli::apply_environment(cfg, lookup), InvalidInput);
}

TEST(CliBinary, ExitCodes)
{
    EXPECT_EQ(run_binary("betti " + fixture("pentagon.json")).first, 0);
    EXPECT_EQ(run_binary("compare " + fixture("pentagon.json")).first, 0);
    EXPECT_EQ(run_binary("betti " + fixture("bad_vertex.json")).first, 2);
    EXPECT_EQ(run_binary("betti " + fixture("pentagon.json") + " --bogus").first, 2);
    EXPECT_EQ(run_binary("betti").first, 2);
    EXPECT_EQ(run_binary("oracle " + fixture("pentagon.json") + " --max-cells 100").first, 3);
    EXPECT_EQ(run_binary("betti " + fixture("pentagon.json") + " --max-vertices 4").first, 3);
    EXPECT_EQ(run_binary("ring " + fixture("pentagon.json") + " --route sideways").first, 2);
}

TEST(CliBinary, FlagsReachTheRun)
{
    const auto [code, out] = run_binary("ring " + fixture("pentagon.json") + " --route oracle --workers 2");
    ASSERT_EQ(code, 0);
    EXPECT_EQ(nlohmann::json::parse(out)["route"], "oracle");
    const auto same = run_binary("ring " + fixture("pentagon.json") + " --route oracle --workers 1");
    EXPECT_EQ(out, same.second);
}
