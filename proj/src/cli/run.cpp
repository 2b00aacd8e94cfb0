#include "rwrs/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rwrs/cli/config.hpp"
#include "rwrs/cli/report.hpp"
#include "rwrs/conditional/diagnostics.hpp"
#include "rwrs/core/error.hpp"
#include "rwrs/model/trajectory.hpp"
#include "rwrs/persistence/estimators.hpp"
#include "rwrs/persistence/exponent_fit.hpp"
#include "rwrs/persistence/inequalities.hpp"
#include "rwrs/persistence/reversal.hpp"

#ifndef RWRS_VERSION
#    define RWRS_VERSION "unknown"
#endif

namespace rwrs::cli
{
namespace
{
using nlohmann::json;

//! Flags shared by every subcommand; unset ones keep the config value.
struct Overrides
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::optional<std::string> out;
    std::vector<std::int64_t> T;
    std::optional<std::uint64_t> trials;
    std::optional<std::int64_t> threshold;
    std::optional<double> delta;
    bool assert_checks{false};
};

//! What a subcommand hands back to the reporting step.
struct Outcome
{
    ResultTable table;
    json results = json::object();
    json seed_ranges = json::array();
    std::optional<bool> assertion;  //!< nullopt if the subcommand has none
    std::string assertion_text;
};

std::string fmt(std::int64_t x)
{
    return std::to_string(x);
}

std::string fmt(std::uint64_t x)
{
    return std::to_string(x);
}

std::string fmt(double x)
{
    return format_real(x);
}

std::string fmt(bool x)
{
    return x ? "1" : "0";
}

json seed_range(std::string label, std::uint64_t first, std::uint64_t count)
{
    return json{{"label", std::move(label)},
                {"first_stream", first},
                {"end_stream", first + count}};
}

json config_json(ExperimentConfig const& c)
{
    json j{{"model", to_string(c.model)},
           {"scenery_law", c.scenery_law},
           {"step_law", c.step_law},
           {"vertical_law", c.vertical_law},
           {"T_list", c.T_list},
           {"trials", c.trials},
           {"threshold", c.threshold},
           {"master_seed", c.master_seed},
           {"workers", c.workers},
           {"output_path", c.output_path},
           {"scenery_mode", to_string(c.scenery_mode)},
           {"quenched_scenery_seed", c.quenched_scenery_seed},
           {"gamma", c.gamma},
           {"instances", c.instances},
           {"alpha", c.alpha}};
    j["delta"] = c.delta ? json(*c.delta) : json(nullptr);
    return j;
}

//! Local times of trial i (marked visits only for the oriented model).
OccupationField
sample_field(ModelSpec const& spec, RunOptions const& opt, std::uint64_t i, std::int64_t T)
{
    OccupationField field;
    run_trial(spec,
              opt.master_seed,
              i,
              T,
              [&](std::int64_t, std::int64_t s, std::int64_t, bool marked) {
                  if (marked)
                      field.advance(s);
                  return true;
              });
    return field;
}

//---------------------------------------------------------------------------//
Outcome run_persistence(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    auto reports = persistence_curve(spec, c.T_list, c.trials, c.threshold, opt);

    Outcome out;
    out.table.columns = {"T", "trials", "p_hat", "se", "ci_lo", "ci_hi"};
    std::vector<FitPoint> points;
    for (std::size_t i = 0; i < reports.size(); ++i)
    {
        auto const& r = reports[i];
        out.table.add_row({fmt(c.T_list[i]),
                           fmt(r.trials),
                           fmt(r.estimate),
                           fmt(r.std_error),
                           fmt(r.ci_lo),
                           fmt(r.ci_hi)});
        points.push_back({double(c.T_list[i]), r.estimate, r.std_error});
    }
    out.seed_ranges.push_back(seed_range("all rows", 0, c.trials));

    out.assertion = false;
    out.assertion_text = "fitted slope in [-0.35, -0.15]";
    try
    {
        auto fit = fit_exponent(points);
        out.results["slope"] = fit.slope;
        out.results["slope_se"] = fit.slope_se;
        out.results["intercept"] = fit.intercept;
        out.results["weighted"] = fit.weighted;
        out.assertion = fit.slope >= -0.35 && fit.slope <= -0.15;
    }
    catch (Error const& e)
    {
        out.results["fit_error"] = e.what();
    }
    return out;
}

Outcome run_expfunc(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    Outcome out;
    out.table.columns
        = {"T", "trials", "start", "estimate", "se", "ci_lo", "ci_hi", "scaled"};
    bool ordered = true;
    for (auto T : c.T_list)
    {
        auto pair = estimate_exp_functionals(spec, T, c.trials, opt);
        double quarter = std::pow(double(T), 0.25);
        for (int start : {0, 1})
        {
            auto const& r = start == 0 ? pair.from_zero : pair.from_one;
            out.table.add_row({fmt(T),
                               fmt(r.trials),
                               fmt(std::int64_t(start)),
                               fmt(r.estimate),
                               fmt(r.std_error),
                               fmt(r.ci_lo),
                               fmt(r.ci_hi),
                               fmt(quarter * r.estimate)});
        }
        ordered = ordered && pair.from_zero.estimate <= pair.from_one.estimate;
    }
    out.seed_ranges.push_back(seed_range("each T", 0, c.trials));
    out.assertion = ordered;
    out.assertion_text = "start 0 estimate <= start 1 estimate at every T";
    return out;
}

Outcome run_kappa(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    Outcome out;
    out.table.columns = {"T", "trials", "kappa", "se", "ci_lo", "ci_hi"};
    std::vector<double> values;
    for (auto T : c.T_list)
    {
        auto r = estimate_kappa(spec, T, c.trials, opt);
        out.table.add_row({fmt(T),
                           fmt(r.trials),
                           fmt(r.estimate),
                           fmt(r.std_error),
                           fmt(r.ci_lo),
                           fmt(r.ci_hi)});
        values.push_back(r.estimate);
    }
    out.seed_ranges.push_back(seed_range("each T", 0, c.trials));
    if (spec.model == Model::oriented)
        out.results["K_delta"] = k_delta(spec.delta);
    out.assertion_text = "last two kappa estimates agree within 10%";
    if (values.size() >= 2)
    {
        double a = values[values.size() - 2];
        double b = values.back();
        out.assertion = std::abs(a - b) <= 0.1 * std::max(a, b);
    }
    else
    {
        out.assertion = false;
    }
    return out;
}

Outcome run_llt(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    Outcome out;
    out.table.columns = {"n", "trial", "v", "p0", "statistic", "defined"};
    bool consistent = true;
    double min_stat = INFINITY;
    std::uint64_t defined = 0;
    for (auto T : c.T_list)
    {
        for (std::uint64_t i = 0; i < c.trials; ++i)
        {
            auto field = sample_field(spec, opt, i, T);
            if (field.empty())
            {
                out.table.add_row({fmt(std::int64_t(0)), fmt(i), "0", "1", "0", "1"});
                continue;
            }
            auto d = llt_diagnostic(field, spec.scenery_law);
            out.table.add_row({fmt(field.n()),
                               fmt(i),
                               fmt(d.v),
                               fmt(d.p0),
                               fmt(d.statistic),
                               fmt(d.defined)});
            if (d.defined)
            {
                ++defined;
                min_stat = std::min(min_stat, d.statistic);
                consistent = consistent && d.p0 > 0;
            }
            else
            {
                consistent = consistent && d.p0 == 0;
            }
        }
    }
    out.seed_ranges.push_back(seed_range("each n", 0, c.trials));
    out.results["defined_rows"] = defined;
    out.results["min_statistic"] = defined ? json(min_stat) : json(nullptr);
    out.assertion = consistent;
    out.assertion_text = "p0 > 0 on defined rows and p0 = 0 otherwise";
    return out;
}

Outcome run_berry(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    Outcome out;
    out.table.columns
        = {"n", "trial", "v", "q3", "gap", "bound_factor", "ratio", "holds"};
    bool all = true;
    double worst = 0;
    for (auto T : c.T_list)
    {
        for (std::uint64_t i = 0; i < c.trials; ++i)
        {
            auto field = sample_field(spec, opt, i, T);
            if (field.empty())
                continue;
            auto b = berry_esseen_check(field, spec.scenery_law);
            out.table.add_row({fmt(field.n()),
                               fmt(i),
                               fmt(field.v()),
                               to_string(field.q3()),
                               fmt(b.gap),
                               fmt(b.bound_factor),
                               fmt(b.ratio),
                               fmt(b.holds)});
            all = all && b.holds;
            worst = std::max(worst, b.ratio);
        }
    }
    out.seed_ranges.push_back(seed_range("each n", 0, c.trials));
    out.results["max_ratio"] = worst;
    out.results["constant"] = berry_esseen_constant;
    out.assertion = all;
    out.assertion_text = "gap <= 0.56 * bound_factor on every field";
    return out;
}

Outcome run_inequalities(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    Outcome out;
    out.table.columns = {"check", "index", "T", "lhs", "rhs", "holds", "mode"};
    bool all = true;

    // Small quenched instances; walks use their own streams of a derived key.
    std::uint64_t const instance_key = hash_draw(c.master_seed, 0, 0x1a57a9c3u);
    auto instances = random_instances(spec.walk_law, c.instances, 12, instance_key);
    for (std::size_t i = 0; i < instances.size(); ++i)
    {
        auto const& inst = instances[i];
        auto T = std::int64_t(inst.positions.size());
        auto levy = levy_check(inst.positions, spec.scenery_law, inst.levy_threshold);
        auto assoc = association_check(inst.positions, spec.scenery_law, inst.split);
        out.table.add_row({"levy", fmt(std::uint64_t(i)), fmt(T), fmt(levy.lhs),
                           fmt(levy.rhs), fmt(levy.holds),
                           std::string(to_string(levy.mode))});
        out.table.add_row({"association", fmt(std::uint64_t(i)), fmt(T),
                           fmt(assoc.joint), fmt(assoc.product), fmt(assoc.holds),
                           std::string(to_string(assoc.mode))});
        out.table.add_row({"association_increment", fmt(std::uint64_t(i)), fmt(T),
                           fmt(assoc.joint_inc), fmt(assoc.product_inc),
                           fmt(assoc.holds_inc), std::string(to_string(assoc.mode))});
        all = all && levy.holds && assoc.holds && assoc.holds_inc;
    }

    for (std::size_t j = 0; j < c.T_list.size(); ++j)
    {
        auto T = c.T_list[j];
        auto l2 = l2_max_bound_check(spec, T, c.trials, opt);
        out.table.add_row({"l2_max", fmt(std::uint64_t(j)), fmt(T), fmt(l2.lhs),
                           fmt(l2.rhs), fmt(l2.holds), "monte_carlo"});
        double freq = tail_event_frequency(spec.walk_law, T, c.trials, c.gamma, opt);
        bool tail_ok = freq >= 0.99;
        out.table.add_row({"tail_event", fmt(std::uint64_t(j)), fmt(T), fmt(freq),
                           fmt(0.99), fmt(tail_ok), "monte_carlo"});
        all = all && l2.holds && tail_ok;
    }
    out.seed_ranges.push_back(
        json{{"label", "levy/association instances"},
             {"instance_key", instance_key},
             {"first_stream", 0},
             {"end_stream", c.instances}});
    out.seed_ranges.push_back(seed_range("l2_max and tail_event rows", 0, c.trials));
    out.assertion = all;
    out.assertion_text = "every inequality row holds";
    return out;
}

Outcome run_reversal(ExperimentConfig const& c)
{
    auto spec = model_spec(c);
    auto opt = run_options(c);
    ModelSpec specs[] = {spec};
    auto battery = reversal_battery(specs, c.T_list, c.trials, c.alpha, opt);
    Outcome out;
    out.table.columns
        = {"model", "T", "functional", "statistic", "p_value", "rejected"};
    for (auto const& t : battery.tests)
    {
        out.table.add_row({std::string(to_string(t.model)), fmt(t.T), t.functional,
                           fmt(t.ks.statistic), fmt(t.ks.p_value), fmt(t.rejected)});
    }
    out.seed_ranges.push_back(seed_range("original", 0, c.trials));
    out.seed_ranges.push_back(seed_range("reversed", c.trials, c.trials));
    out.results["rejections"] = battery.rejections;
    out.results["allowance"] = battery.allowance;
    out.assertion = battery.passed;
    out.assertion_text = "rejections within the multiple-testing allowance";
    return out;
}

Outcome run_dump_traj(ExperimentConfig const& c, std::filesystem::path const& dir)
{
    auto spec = model_spec(c);
    auto seeds = trial_seeds(spec, c.master_seed, 0);
    Scenery scenery(spec.scenery_law, seeds.scenery_seed);
    std::int64_t T = c.T_list.front();
    auto traj = simulate(spec, scenery, T, seeds.walk);

    std::filesystem::create_directories(dir);
    std::ofstream os(dir / "trajectory.csv", std::ios::binary);
    if (!os)
        throw Error(ErrorCode::io_error, "cannot write trajectory.csv");
    write_trajectory_csv(os, traj);

    Outcome out;
    out.table.columns = {"T", "Z_T", "max_Z", "V_T", "range"};
    out.table.add_row({fmt(T),
                       fmt(traj.z.back()),
                       fmt(*std::max_element(traj.z.begin(), traj.z.end())),
                       fmt(traj.field.v()),
                       fmt(traj.field.range())});
    out.seed_ranges.push_back(seed_range("trajectory", 0, 1));
    return out;
}

}  // namespace

//---------------------------------------------------------------------------//
int run_cli(std::vector<std::string> args)
{
    CLI::App app{"Random walk in random scenery laboratory", "rwrs_lab"};
    app.set_version_flag("--version", std::string(RWRS_VERSION));
    app.require_subcommand(1);

    Overrides ov;
    auto add_common = [&ov](CLI::App* sub) {
        sub->add_option("--config", ov.config_path, "key = value config file");
        sub->add_option("--seed", ov.seed, "master seed");
        sub->add_option("--workers", ov.workers, "worker threads");
        sub->add_option("--out", ov.out, "output directory");
        sub->add_option("--T", ov.T, "horizons, comma separated")->delimiter(',');
        sub->add_option("--trials", ov.trials, "trials per horizon");
        sub->add_option("--threshold", ov.threshold, "persistence level");
        sub->add_option("--delta", ov.delta, "horizontal move probability");
        sub->add_flag("--assert", ov.assert_checks, "exit 3 when the check fails");
    };

    std::vector<std::pair<std::string, std::string>> const commands = {
        {"persistence", "persistence curve over T_list and exponent fit"},
        {"expfunc", "exponential functionals from l = 0 and l = 1"},
        {"kappa", "E[max(0, max Z)] / T^{3/4}"},
        {"llt", "P[Z_n = 0 | S] sqrt(V_n) on sampled walks"},
        {"berry", "conditional Berry-Esseen gap on sampled walks"},
        {"inequalities", "Levy, association, L2 and tail-event battery"},
        {"reversal", "time-reversal KS tests"},
        {"dump-traj", "write one trajectory as CSV"},
    };
    for (auto const& [name, help] : commands)
        add_common(app.add_subcommand(name, help));

    try
    {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    std::string const command = app.get_subcommands().front()->get_name();
    auto const start = std::chrono::steady_clock::now();
    try
    {
        ExperimentConfig c = ov.config_path.empty() ? ExperimentConfig{}
                                                    : load_config(ov.config_path);
        if (ov.seed)
            c.master_seed = *ov.seed;
        if (ov.workers)
            c.workers = *ov.workers;
        if (ov.out)
            c.output_path = *ov.out;
        if (!ov.T.empty())
            c.T_list = ov.T;
        if (ov.trials)
            c.trials = *ov.trials;
        if (ov.threshold)
            c.threshold = *ov.threshold;
        if (ov.delta)
            c.delta = *ov.delta;
        validate(c);

        std::filesystem::path const dir = c.output_path;
        Outcome out;
        if (command == "persistence")
            out = run_persistence(c);
        else if (command == "expfunc")
            out = run_expfunc(c);
        else if (command == "kappa")
            out = run_kappa(c);
        else if (command == "llt")
            out = run_llt(c);
        else if (command == "berry")
            out = run_berry(c);
        else if (command == "inequalities")
            out = run_inequalities(c);
        else if (command == "reversal")
            out = run_reversal(c);
        else
            out = run_dump_traj(c, dir);

        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        json summary{{"tool", "rwrs_lab"},
                     {"version", RWRS_VERSION},
                     {"subcommand", command},
                     {"config", config_json(c)},
                     {"master_seed", c.master_seed},
                     {"seed_ranges", out.seed_ranges},
                     {"results", out.results},
                     {"wall_time_s", elapsed}};
        if (out.assertion)
        {
            summary["assertion"] = {{"check", out.assertion_text},
                                    {"passed", *out.assertion},
                                    {"enforced", ov.assert_checks}};
        }
        emit_report(dir, out.table, summary);

        if (ov.assert_checks && out.assertion && !*out.assertion)
        {
            std::cerr << "rwrs_lab " << command
                      << ": assertion failed: " << out.assertion_text << '\n';
            return exit_assertion;
        }
        return exit_ok;
    }
    catch (Error const& e)
    {
        std::cerr << "rwrs_lab " << command << ": " << e.what() << '\n';
        return e.code() == ErrorCode::io_error ? exit_failure : exit_invalid;
    }
    catch (std::exception const& e)
    {
        std::cerr << "rwrs_lab " << command << ": " << e.what() << '\n';
        return exit_failure;
    }
}

int run_cli(int argc, char const* const* argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(std::move(args));
}

}  // namespace rwrs::cli
