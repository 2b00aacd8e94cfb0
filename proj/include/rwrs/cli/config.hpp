#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rwrs/model/engine.hpp"
#include "rwrs/persistence/estimators.hpp"

namespace rwrs::cli
{
//---------------------------------------------------------------------------//
/*!
 * Experiment settings read from a flat "key = value" file.
 *
 * Laws are atom lists such as "{-1: 1/2, 1: 1/2}" and T_list is a bracketed
 * integer list. '#' starts a comment. Unknown keys are rejected.
 */
struct ExperimentConfig
{
    Model model{Model::rwrs};
    std::string scenery_law{"{-1: 1/2, 1: 1/2}"};
    std::string step_law{"{-1: 1/2, 1: 1/2}"};
    std::string vertical_law{"{-1: 1/2, 1: 1/2}"};
    std::optional<double> delta;
    std::vector<std::int64_t> T_list{256, 512, 1024};
    std::uint64_t trials{10'000};
    std::int64_t threshold{1};
    std::uint64_t master_seed{0};
    unsigned workers{1};
    std::string output_path{"."};

    // Optional extras
    SceneryMode scenery_mode{SceneryMode::annealed};
    std::uint64_t quenched_scenery_seed{0};
    double gamma{0.1};  //!< tail-event exponent for `inequalities`
    std::uint64_t instances{100};  //!< random small instances for `inequalities`
    double alpha{0.01};  //!< KS significance for `reversal`
};

ExperimentConfig parse_config(std::istream& is);
ExperimentConfig load_config(std::filesystem::path const& path);

//! Check laws, delta and T_list; throws Error with a validation code.
void validate(ExperimentConfig const& config);

//! Model description for the engine; validates first.
ModelSpec model_spec(ExperimentConfig const& config);

RunOptions run_options(ExperimentConfig const& config);

//! key = value text that parses back to the same configuration.
std::string to_text(ExperimentConfig const& config);

}  // namespace rwrs::cli
