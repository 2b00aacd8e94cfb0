#include "rwrs/model/trajectory.hpp"

#include <cassert>
#include <ostream>

#include "rwrs/core/error.hpp"

namespace rwrs
{
namespace
{
Trajectory run_stored(ModelSpec const& spec,
                      Scenery const& scenery,
                      std::int64_t steps,
                      RngStream& rng)
{
    if (steps < 1)
        throw Error(ErrorCode::domain_error, "trajectory needs T >= 1");
    Trajectory traj;
    traj.mode = spec.model;
    traj.z.reserve(static_cast<std::size_t>(steps));
    traj.s.reserve(static_cast<std::size_t>(steps));
    if (spec.model == Model::oriented)
        traj.eps.reserve(static_cast<std::size_t>(steps));

    run_trajectory(spec,
                   scenery,
                   steps,
                   rng,
                   [&](std::int64_t, std::int64_t s, std::int64_t z, bool marked) {
                       traj.z.push_back(z);
                       traj.s.push_back(s);
                       if (spec.model == Model::oriented)
                           traj.eps.push_back(marked ? 1 : 0);
                       if (marked)
                           traj.field.advance(s);
                       return true;
                   });
    return traj;
}

}  // namespace

Trajectory simulate_rwrs(std::int64_t steps,
                         Scenery const& scenery,
                         LatticeDistribution const& step_law,
                         RngStream& rng)
{
    ModelSpec spec;
    spec.model = Model::rwrs;
    spec.scenery_law = scenery.law();
    spec.walk_law = step_law;
    return run_stored(spec, scenery, steps, rng);
}

Trajectory simulate_oriented(std::int64_t steps,
                             Scenery const& scenery,
                             LatticeDistribution const& vertical_law,
                             double delta,
                             RngStream& rng)
{
    ModelSpec spec;
    spec.model = Model::oriented;
    spec.scenery_law = scenery.law();
    spec.walk_law = vertical_law;
    spec.delta = delta;
    spec.check();
    return run_stored(spec, scenery, steps, rng);
}

Trajectory simulate(ModelSpec const& spec,
                    Scenery const& scenery,
                    std::int64_t steps,
                    RngStream& rng)
{
    spec.check();
    return run_stored(spec, scenery, steps, rng);
}

Trajectory rwrs_from_path(Scenery const& scenery,
                          std::span<std::int64_t const> positions)
{
    Trajectory traj;
    traj.mode = Model::rwrs;
    std::int64_t z = 0;
    for (auto site : positions)
    {
        std::int64_t prev = z;
        z += scenery.at(site);
        assert(z - prev == scenery.at(site));
        (void)prev;
        traj.z.push_back(z);
        traj.s.push_back(site);
        traj.field.advance(site);
    }
    return traj;
}

Trajectory oriented_from_moves(Scenery const& scenery,
                               std::span<std::uint8_t const> eps,
                               std::span<std::int64_t const> vertical_steps)
{
    if (eps.size() != vertical_steps.size())
    {
        throw Error(ErrorCode::domain_error,
                    "eps and vertical steps differ in length");
    }
    Trajectory traj;
    traj.mode = Model::oriented;
    std::int64_t s = 0;
    std::int64_t z = 0;
    for (std::size_t k = 0; k < eps.size(); ++k)
    {
        if (eps[k])
        {
            // S does not move on a horizontal step, so xi_{S_{k-1}} = xi_{S_k}.
            z += scenery.at(s);
            traj.field.advance(s);
        }
        else
        {
            s += vertical_steps[k];
        }
        traj.z.push_back(z);
        traj.s.push_back(s);
        traj.eps.push_back(eps[k] ? 1 : 0);
    }
    return traj;
}

std::vector<std::int64_t> time_reversed(std::span<std::int64_t const> z)
{
    auto const steps = z.size();
    auto value = [&](std::size_t k) -> std::int64_t {
        return k == 0 ? 0 : z[k - 1];
    };
    std::int64_t const last = value(steps);
    std::vector<std::int64_t> out(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        out[k] = value(steps - k) - last;
    return out;
}

void write_trajectory_csv(std::ostream& os, Trajectory const& traj)
{
    os << "k,S_k,eps_k,Z_k\n";
    for (std::size_t k = 0; k < traj.z.size(); ++k)
    {
        int eps = traj.mode == Model::oriented ? traj.eps[k] : 1;
        os << (k + 1) << ',' << traj.s[k] << ',' << eps << ',' << traj.z[k]
           << '\n';
    }
    if (!os)
        throw Error(ErrorCode::io_error, "failed writing trajectory CSV");
}

}  // namespace rwrs
