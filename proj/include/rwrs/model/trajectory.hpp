#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rwrs/model/engine.hpp"
#include "rwrs/walk/occupation_field.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
/*!
 * Stored trajectory of one trial: Z_1..Z_T, S_1..S_T and, for the oriented
 * model, eps_1..eps_T. The occupation field counts every visit in RWRS mode
 * and only marked (eps = 1) visits in oriented mode, so in both cases
 * Z_T = sum_y xi_y field.count(y).
 */
struct Trajectory
{
    Model mode{Model::rwrs};
    std::vector<std::int64_t> z;
    std::vector<std::int64_t> s;
    std::vector<std::uint8_t> eps;
    OccupationField field;

    std::int64_t steps() const { return static_cast<std::int64_t>(z.size()); }
};

Trajectory simulate_rwrs(std::int64_t steps,
                         Scenery const& scenery,
                         LatticeDistribution const& step_law,
                         RngStream& rng);

Trajectory simulate_oriented(std::int64_t steps,
                             Scenery const& scenery,
                             LatticeDistribution const& vertical_law,
                             double delta,
                             RngStream& rng);

//! Simulate according to \c spec (either model).
Trajectory simulate(ModelSpec const& spec,
                    Scenery const& scenery,
                    std::int64_t steps,
                    RngStream& rng);

//! RWRS along a prescribed walk S_1..S_T.
Trajectory rwrs_from_path(Scenery const& scenery,
                          std::span<std::int64_t const> positions);

/*!
 * Oriented trajectory from prescribed eps_k and vertical increments; the
 * increment at index k is used only when eps_k = 0.
 */
Trajectory oriented_from_moves(Scenery const& scenery,
                               std::span<std::uint8_t const> eps,
                               std::span<std::int64_t const> vertical_steps);

//! (Z_{T-k} - Z_T) for k = 0..T, with Z_0 = 0.
std::vector<std::int64_t> time_reversed(std::span<std::int64_t const> z);

inline std::vector<std::int64_t> time_reversed(Trajectory const& traj)
{
    return time_reversed(traj.z);
}

//! CSV with header k,S_k,eps_k,Z_k; eps_k is 1 on every RWRS row.
void write_trajectory_csv(std::ostream& os, Trajectory const& traj);

}  // namespace rwrs
