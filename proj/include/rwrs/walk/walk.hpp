#pragma once

#include <cstdint>
#include <vector>

#include "rwrs/core/lattice_distribution.hpp"
#include "rwrs/core/rng.hpp"
#include "rwrs/walk/occupation_field.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
//! Positions S_1..S_n of a walk started at S_0 = 0 and their local times.
struct WalkPath
{
    std::vector<std::int64_t> positions;
    OccupationField field;
};

WalkPath simulate_walk(std::int64_t steps,
                       LatticeDistribution const& step_law,
                       RngStream& rng,
                       OccupationStorage storage = OccupationStorage::dense);

/*!
 * Hoelder-type modulus of the local times:
 * sup |N(y) - N(z)| / |y - z|^mu over integer pairs with 0 < |y - z| < n^theta.
 *
 * Outside [min_site - 1, max_site + 1] both counts vanish, so the supremum
 * over all of Z is attained inside that window.
 */
double holder_statistic(OccupationField const& field, double mu, double theta);

}  // namespace rwrs
