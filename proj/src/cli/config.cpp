#include "rwrs/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rwrs/core/error.hpp"
#include "rwrs/core/lattice_distribution.hpp"

namespace rwrs::cli
{
namespace
{
std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_value(std::string const& key, std::string const& value)
{
    throw Error(ErrorCode::config_error,
                "invalid value '" + value + "' for key '" + key + "'");
}

template<class T>
T parse_integer(std::string const& key, std::string const& value)
{
    T out{};
    auto [ptr, ec]
        = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(key, value);
    return out;
}

double parse_real(std::string const& key, std::string const& value)
{
    double out{};
    auto [ptr, ec]
        = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(key, value);
    return out;
}

std::vector<std::int64_t>
parse_int_list(std::string const& key, std::string const& value)
{
    std::string cleaned = value;
    for (char& c : cleaned)
    {
        if (c == '[' || c == ']' || c == ',')
            c = ' ';
    }
    std::istringstream is(cleaned);
    std::vector<std::int64_t> out;
    std::string tok;
    while (is >> tok)
        out.push_back(parse_integer<std::int64_t>(key, tok));
    if (out.empty())
        bad_value(key, value);
    return out;
}

LatticeDistribution law_from(std::string const& text, LawKind kind)
{
    return LatticeDistribution::validate(parse_atoms(text), kind);
}

}  // namespace

ExperimentConfig parse_config(std::istream& is)
{
    ExperimentConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
        {
            throw Error(ErrorCode::config_error,
                        "line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));

        if (key == "model")
            c.model = parse_model(value);
        else if (key == "scenery_law")
            c.scenery_law = value;
        else if (key == "step_law")
            c.step_law = value;
        else if (key == "vertical_law")
            c.vertical_law = value;
        else if (key == "delta")
            c.delta = parse_real(key, value);
        else if (key == "T_list")
            c.T_list = parse_int_list(key, value);
        else if (key == "trials")
            c.trials = parse_integer<std::uint64_t>(key, value);
        else if (key == "threshold")
            c.threshold = parse_integer<std::int64_t>(key, value);
        else if (key == "master_seed")
            c.master_seed = parse_integer<std::uint64_t>(key, value);
        else if (key == "workers")
            c.workers = parse_integer<unsigned>(key, value);
        else if (key == "output_path")
            c.output_path = value;
        else if (key == "scenery_mode")
            c.scenery_mode = parse_scenery_mode(value);
        else if (key == "quenched_scenery_seed")
            c.quenched_scenery_seed = parse_integer<std::uint64_t>(key, value);
        else if (key == "gamma")
            c.gamma = parse_real(key, value);
        else if (key == "instances")
            c.instances = parse_integer<std::uint64_t>(key, value);
        else if (key == "alpha")
            c.alpha = parse_real(key, value);
        else
            throw Error(ErrorCode::config_error, "unknown key '" + key + "'");
    }
    return c;
}

ExperimentConfig load_config(std::filesystem::path const& path)
{
    std::ifstream is(path);
    if (!is)
    {
        throw Error(ErrorCode::config_error,
                    "cannot open config file '" + path.string() + "'");
    }
    return parse_config(is);
}

void validate(ExperimentConfig const& c)
{
    law_from(c.scenery_law, LawKind::scenery);
    if (c.model == Model::rwrs)
    {
        law_from(c.step_law, LawKind::step);
        if (c.delta)
            throw Error(ErrorCode::config_error, "delta is only used with model = oriented");
    }
    else
    {
        law_from(c.vertical_law, LawKind::vertical);
        if (!c.delta)
            throw Error(ErrorCode::config_error, "model = oriented requires delta");
        if (!(*c.delta > 0 && *c.delta < 1))
            throw Error(ErrorCode::config_error, "delta must lie in (0, 1)");
    }
    if (c.T_list.empty())
        throw Error(ErrorCode::config_error, "T_list is empty");
    for (std::size_t i = 0; i < c.T_list.size(); ++i)
    {
        if (c.T_list[i] < 1)
            throw Error(ErrorCode::config_error, "T_list entries must be >= 1");
        if (i > 0 && c.T_list[i] <= c.T_list[i - 1])
            throw Error(ErrorCode::config_error, "T_list must be strictly increasing");
    }
    if (c.trials == 0)
        throw Error(ErrorCode::config_error, "trials must be >= 1");
    if (c.workers == 0)
        throw Error(ErrorCode::config_error, "workers must be >= 1");
    if (!(c.gamma > 0 && c.gamma < 0.5))
        throw Error(ErrorCode::config_error, "gamma must lie in (0, 1/2)");
    if (!(c.alpha > 0 && c.alpha < 1))
        throw Error(ErrorCode::config_error, "alpha must lie in (0, 1)");
}

ModelSpec model_spec(ExperimentConfig const& c)
{
    validate(c);
    ModelSpec spec;
    spec.model = c.model;
    spec.scenery_law = law_from(c.scenery_law, LawKind::scenery);
    if (c.model == Model::rwrs)
    {
        spec.walk_law = law_from(c.step_law, LawKind::step);
    }
    else
    {
        spec.walk_law = law_from(c.vertical_law, LawKind::vertical);
        spec.delta = *c.delta;
    }
    spec.scenery_mode = c.scenery_mode;
    spec.quenched_scenery_seed = c.quenched_scenery_seed;
    spec.check();
    return spec;
}

RunOptions run_options(ExperimentConfig const& c)
{
    return RunOptions{c.master_seed, c.workers};
}

std::string to_text(ExperimentConfig const& c)
{
    std::ostringstream os;
    os.precision(17);
    os << "model = " << to_string(c.model) << '\n'
       << "scenery_law = " << c.scenery_law << '\n'
       << "step_law = " << c.step_law << '\n'
       << "vertical_law = " << c.vertical_law << '\n';
    if (c.delta)
        os << "delta = " << *c.delta << '\n';
    os << "T_list = [";
    for (std::size_t i = 0; i < c.T_list.size(); ++i)
        os << (i ? ", " : "") << c.T_list[i];
    os << "]\n"
       << "trials = " << c.trials << '\n'
       << "threshold = " << c.threshold << '\n'
       << "master_seed = " << c.master_seed << '\n'
       << "workers = " << c.workers << '\n'
       << "output_path = " << c.output_path << '\n'
       << "scenery_mode = " << to_string(c.scenery_mode) << '\n'
       << "quenched_scenery_seed = " << c.quenched_scenery_seed << '\n'
       << "gamma = " << c.gamma << '\n'
       << "instances = " << c.instances << '\n'
       << "alpha = " << c.alpha << '\n';
    return os.str();
}

}  // namespace rwrs::cli
