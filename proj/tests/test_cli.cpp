#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "rwrs/cli/config.hpp"
#include "rwrs/cli/report.hpp"
#include "rwrs/cli/run.hpp"
#include "rwrs/core/error.hpp"

using namespace rwrs;
using namespace rwrs::cli;
namespace fs = std::filesystem;

namespace
{
fs::path scratch(std::string const& name)
{
    fs::path p = fs::path(RWRS_TEST_TMP) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(fs::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        out.push_back(line);
    return out;
}

void write_file(fs::path const& p, std::string const& text)
{
    std::ofstream os(p);
    os << text;
}

}  // namespace

TEST_CASE("config parsing")
{
    std::istringstream is(R"(# oriented run
model = oriented
vertical_law = {-1: 1/4, 0: 1/2, 1: 1/4}
delta = 0.25
T_list = [8, 64, 512]   # horizons
trials = 123
threshold = 2
master_seed = 77
workers = 3
scenery_mode = quenched
quenched_scenery_seed = 5
alpha = 0.05
)");
    auto c = parse_config(is);
    CHECK(c.model == Model::oriented);
    REQUIRE(c.delta.has_value());
    CHECK(*c.delta == 0.25);
    CHECK(c.T_list == std::vector<std::int64_t>{8, 64, 512});
    CHECK(c.trials == 123);
    CHECK(c.threshold == 2);
    CHECK(c.master_seed == 77);
    CHECK(c.workers == 3);
    CHECK(c.scenery_mode == SceneryMode::quenched);
    CHECK(c.alpha == 0.05);
    CHECK_NOTHROW(validate(c));

    auto spec = model_spec(c);
    CHECK(spec.model == Model::oriented);
    CHECK(spec.delta == 0.25);
    CHECK(spec.walk_law.prob(0) == 0.5);
    CHECK(spec.quenched_scenery_seed == 5);
    CHECK(run_options(c).master_seed == 77);

    // the text form parses back to the same settings
    std::istringstream again(to_text(c));
    auto d = parse_config(again);
    CHECK(to_text(d) == to_text(c));
    CHECK(d.vertical_law == c.vertical_law);
    CHECK(*d.delta == *c.delta);
}

TEST_CASE("config errors")
{
    auto code_of = [](std::string const& text) {
        try
        {
            std::istringstream is(text);
            validate(parse_config(is));
        }
        catch (Error const& e)
        {
            return e.code();
        }
        return ErrorCode::io_error;  // sentinel: nothing was thrown
    };
    CHECK(code_of("colour = blue\n") == ErrorCode::config_error);
    CHECK(code_of("trials\n") == ErrorCode::config_error);
    CHECK(code_of("trials = ten\n") == ErrorCode::config_error);
    CHECK(code_of("model = oriented\n") == ErrorCode::config_error);
    CHECK(code_of("delta = 0.5\n") == ErrorCode::config_error);
    CHECK(code_of("model = oriented\ndelta = 1\n") == ErrorCode::config_error);
    CHECK(code_of("T_list = [4, 4]\n") == ErrorCode::config_error);
    CHECK(code_of("scenery_law = {-1: 1/2, 1: 1/4}\n")
          == ErrorCode::non_summing_probabilities);
    CHECK(code_of("scenery_law = {-1: 1/4, 1: 3/4}\n") == ErrorCode::asymmetric_scenery);
    CHECK(code_of("step_law = {0: 1/2, 1: 1/2}\n") == ErrorCode::nonzero_mean_step);
    CHECK(code_of("trials = 5 # fine\n") == ErrorCode::io_error);
}

TEST_CASE("report writing")
{
    CHECK(format_real(0.1) == "0.10000000000000001");
    for (double x : {0.1, 1.0 / 3, 1e-300, -2.5e17, 123456789.123})
        CHECK(std::stod(format_real(x)) == x);

    ResultTable empty;
    empty.columns = {"a", "b"};
    std::ostringstream os;
    write_csv(os, empty);
    CHECK(os.str() == "a,b\n");

    ResultTable t;
    t.columns = {"x", "y"};
    t.add_row({"1", "2"});
    CHECK_THROWS(t.add_row({"1"}));

    auto dir = scratch("report") / "nested";
    nlohmann::json summary{{"tool", "rwrs_lab"}, {"value", 0.1}};
    emit_report(dir, t, summary);
    CHECK(slurp(dir / "results.csv") == "x,y\n1,2\n");
    auto back = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(back == summary);
    CHECK(back["value"].get<double>() == 0.1);
}

TEST_CASE("persistence subcommand")
{
    auto dir = scratch("persistence");
    int rc = run_cli({"persistence", "--T", "16,64,256", "--trials", "2000", "--seed",
                      "4", "--out", dir.string()});
    REQUIRE(rc == exit_ok);
    auto rows = lines(slurp(dir / "results.csv"));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "T,trials,p_hat,se,ci_lo,ci_hi");
    CHECK(rows[1].rfind("16,2000,", 0) == 0);

    auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary["tool"] == "rwrs_lab");
    CHECK(summary["subcommand"] == "persistence");
    CHECK(summary["master_seed"] == 4);
    CHECK(summary.contains("seed_ranges"));
    CHECK(summary.contains("wall_time_s"));
    CHECK(summary["config"]["trials"] == 2000);
    CHECK(summary["assertion"]["enforced"] == false);
}

TEST_CASE("output does not depend on the worker count")
{
    auto one = scratch("workers1");
    auto eight = scratch("workers8");
    std::vector<std::string> base{"persistence", "--T", "32,128", "--trials", "3000",
                                  "--seed", "11"};
    auto a = base, b = base;
    a.insert(a.end(), {"--workers", "1", "--out", one.string()});
    b.insert(b.end(), {"--workers", "8", "--out", eight.string()});
    REQUIRE(run_cli(a) == exit_ok);
    REQUIRE(run_cli(b) == exit_ok);
    CHECK(slurp(one / "results.csv") == slurp(eight / "results.csv"));
}

TEST_CASE("local limit subcommand on odd horizons")
{
    auto dir = scratch("llt");
    REQUIRE(run_cli({"llt", "--T", "201", "--trials", "20", "--out", dir.string()})
            == exit_ok);
    auto rows = lines(slurp(dir / "results.csv"));
    REQUIRE(rows.size() == 21);
    CHECK(rows[0] == "n,trial,v,p0,statistic,defined");
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        // n,trial,v,p0,...: an odd sum of +-1 values is never zero
        std::istringstream is(rows[i]);
        std::string n, trial, v, p0;
        std::getline(is, n, ',');
        std::getline(is, trial, ',');
        std::getline(is, v, ',');
        std::getline(is, p0, ',');
        CHECK(n == "201");
        CHECK(std::stod(p0) == 0.0);
    }
}

TEST_CASE("exit codes")
{
    auto dir = scratch("errors");
    CHECK(run_cli(std::vector<std::string>{}) == exit_invalid);
    CHECK(run_cli({"frobnicate"}) == exit_invalid);
    CHECK(run_cli({"persistence", "--trials", "many", "--out", dir.string()})
          == exit_invalid);
    CHECK(run_cli({"persistence", "--config", (dir / "missing.cfg").string()})
          == exit_invalid);

    write_file(dir / "bad.cfg", "model = oriented\n");
    CHECK(run_cli({"persistence", "--config", (dir / "bad.cfg").string(), "--out",
                   dir.string()})
          == exit_invalid);
    write_file(dir / "unknown.cfg", "speed = 3\n");
    CHECK(run_cli({"persistence", "--config", (dir / "unknown.cfg").string()})
          == exit_invalid);

    // flags override the file
    write_file(dir / "ok.cfg", "T_list = [8, 16, 32]\ntrials = 100\n");
    auto out = dir / "from_file";
    CHECK(run_cli({"persistence", "--config", (dir / "ok.cfg").string(), "--trials",
                   "50", "--out", out.string()})
          == exit_ok);
    CHECK(lines(slurp(out / "results.csv")).size() == 4);
    CHECK(slurp(out / "results.csv").find("8,50,") != std::string::npos);

    // an output path that is a regular file cannot be written
    write_file(dir / "blocker", "x");
    CHECK(run_cli({"persistence", "--T", "4,8,16", "--trials", "10", "--out",
                   (dir / "blocker").string()})
          == exit_failure);

    // three tiny horizons cannot produce the expected decay slope
    auto asserted = dir / "assert";
    CHECK(run_cli({"persistence", "--T", "1,2,3", "--trials", "100", "--threshold",
                   "1000", "--assert", "--out", asserted.string()})
          == exit_assertion);
    auto summary = nlohmann::json::parse(slurp(asserted / "summary.json"));
    CHECK(summary["assertion"]["passed"] == false);
    CHECK(summary["assertion"]["enforced"] == true);
}

TEST_CASE("remaining subcommands run")
{
    struct Case
    {
        std::vector<std::string> args;
        std::string header;
    };
    std::vector<Case> cases{
        {{"expfunc", "--T", "10,100", "--trials", "200"},
         "T,trials,start,estimate,se,ci_lo,ci_hi,scaled"},
        {{"kappa", "--T", "64,256", "--trials", "200"}, "T,trials,kappa,se,ci_lo,ci_hi"},
        {{"berry", "--T", "50", "--trials", "5"},
         "n,trial,v,q3,gap,bound_factor,ratio,holds"},
        {{"inequalities", "--T", "8", "--trials", "50"}, "check,index,T,lhs,rhs,holds,mode"},
        {{"reversal", "--T", "16", "--trials", "200"},
         "model,T,functional,statistic,p_value,rejected"},
        {{"dump-traj", "--T", "25"}, "T,Z_T,max_Z,V_T,range"},
    };
    for (auto const& c : cases)
    {
        CAPTURE(c.args[0]);
        auto dir = scratch("sub_" + c.args[0]);
        auto args = c.args;
        args.insert(args.end(), {"--out", dir.string()});
        CHECK(run_cli(args) == exit_ok);
        auto rows = lines(slurp(dir / "results.csv"));
        REQUIRE(!rows.empty());
        CHECK(rows[0] == c.header);
        auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
        CHECK(summary["subcommand"] == c.args[0]);
    }
    auto traj = lines(slurp(fs::path(RWRS_TEST_TMP) / "sub_dump-traj" / "trajectory.csv"));
    CHECK(traj.size() == 26);
    CHECK(traj[0] == "k,S_k,eps_k,Z_k");

    auto dir = scratch("oriented");
    CHECK(run_cli({"persistence", "--delta", "0.5", "--T", "8,16,32", "--trials", "100",
                   "--out", dir.string()})
          == exit_invalid);
    write_file(dir / "o.cfg", "model = oriented\ndelta = 0.5\n");
    CHECK(run_cli({"persistence", "--config", (dir / "o.cfg").string(), "--T", "8,16,32",
                   "--trials", "100", "--out", dir.string()})
          == exit_ok);
}
