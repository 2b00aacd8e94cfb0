#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "rwrs/core/lattice_distribution.hpp"
#include "rwrs/core/rng.hpp"
#include "rwrs/model/scenery.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
enum class Model
{
    rwrs,  //!< Z_n = sum_{i<=n} xi_{S_i}
    oriented,  //!< first coordinate of the randomly oriented lattice walk
};

std::string_view to_string(Model model);
Model parse_model(std::string_view text);

//! Annealed trials redraw the scenery; quenched trials share one.
enum class SceneryMode
{
    annealed,
    quenched,
};

std::string_view to_string(SceneryMode mode);
SceneryMode parse_scenery_mode(std::string_view text);

//---------------------------------------------------------------------------//
/*!
 * Everything needed to simulate one model.
 *
 * \c walk_law is the step law X for the RWRS and the vertical law nu for the
 * oriented model; \c delta is the horizontal-move probability (oriented
 * only).
 */
struct ModelSpec
{
    Model model{Model::rwrs};
    LatticeDistribution scenery_law{LatticeDistribution::rademacher()};
    LatticeDistribution walk_law{LatticeDistribution::rademacher(LawKind::step)};
    double delta{0.5};
    SceneryMode scenery_mode{SceneryMode::annealed};
    std::uint64_t quenched_scenery_seed{0};

    void check() const;
};

//! Random inputs of trial \c index under \c master_seed.
struct TrialSeeds
{
    RngStream walk;
    std::uint64_t scenery_seed;
};

TrialSeeds trial_seeds(ModelSpec const& spec,
                       std::uint64_t master_seed,
                       std::uint64_t index);

//---------------------------------------------------------------------------//
/*!
 * Drive one trajectory step by step without storing it.
 *
 * \c on_step(k, s, z, marked) is called for k = 1..steps with the walk
 * position S_k, the process value Z_k and whether step k read the scenery
 * (always true for the RWRS; eps_k for the oriented model). Returning false
 * stops the trajectory early.
 */
template<class OnStep>
void run_trajectory(ModelSpec const& spec,
                    Scenery const& scenery,
                    std::int64_t steps,
                    RngStream& rng,
                    OnStep&& on_step)
{
    SceneryCache cache(scenery);
    LatticeDistribution const& walk_law = spec.walk_law;
    std::int64_t s = 0;
    std::int64_t z = 0;
    if (spec.model == Model::rwrs)
    {
        for (std::int64_t k = 1; k <= steps; ++k)
        {
            s += walk_law.sample(rng.next_u64());
            z += cache.at(s);
            if (!on_step(k, s, z, true))
                return;
        }
    }
    else
    {
        std::uint64_t const horizontal = probability_threshold(spec.delta);
        for (std::int64_t k = 1; k <= steps; ++k)
        {
            bool marked = rng.next_u64() < horizontal;
            if (marked)
                z += cache.at(s);
            else
                s += walk_law.sample(rng.next_u64());
            if (!on_step(k, s, z, marked))
                return;
        }
    }
}

//! run_trajectory for trial \c index, with its own walk stream and scenery.
template<class OnStep>
void run_trial(ModelSpec const& spec,
               std::uint64_t master_seed,
               std::uint64_t index,
               std::int64_t steps,
               OnStep&& on_step)
{
    auto seeds = trial_seeds(spec, master_seed, index);
    Scenery scenery(spec.scenery_law, seeds.scenery_seed);
    run_trajectory(spec, scenery, steps, seeds.walk, on_step);
}

}  // namespace rwrs
