#include "rwrs/model/engine.hpp"

#include <string>

#include "rwrs/core/error.hpp"

namespace rwrs
{
namespace
{
constexpr std::uint32_t annealed_scenery_tag = 0xa22ea1edu;
}

std::string_view to_string(Model model)
{
    return model == Model::rwrs ? "rwrs" : "oriented";
}

Model parse_model(std::string_view text)
{
    if (text == "rwrs")
        return Model::rwrs;
    if (text == "oriented")
        return Model::oriented;
    throw Error(ErrorCode::config_error,
                "unknown model '" + std::string(text) + "'");
}

std::string_view to_string(SceneryMode mode)
{
    return mode == SceneryMode::annealed ? "annealed" : "quenched";
}

SceneryMode parse_scenery_mode(std::string_view text)
{
    if (text == "annealed")
        return SceneryMode::annealed;
    if (text == "quenched")
        return SceneryMode::quenched;
    throw Error(ErrorCode::config_error,
                "unknown scenery mode '" + std::string(text) + "'");
}

void ModelSpec::check() const
{
    if (scenery_law.kind() != LawKind::scenery)
        throw Error(ErrorCode::config_error, "scenery law has wrong kind");
    if (model == Model::oriented && !(delta > 0 && delta < 1))
        throw Error(ErrorCode::config_error, "delta must lie in (0,1)");
}

TrialSeeds
trial_seeds(ModelSpec const& spec, std::uint64_t master_seed, std::uint64_t index)
{
    std::uint64_t scenery_seed
        = spec.scenery_mode == SceneryMode::quenched
              ? spec.quenched_scenery_seed
              : hash_draw(master_seed, index, annealed_scenery_tag);
    return {RngStream(SeedSpec{master_seed, index}), scenery_seed};
}

}  // namespace rwrs
