#include "rwrs/walk/walk.hpp"

#include <algorithm>
#include <cmath>

#include "rwrs/core/error.hpp"

namespace rwrs
{
WalkPath simulate_walk(std::int64_t steps,
                       LatticeDistribution const& step_law,
                       RngStream& rng,
                       OccupationStorage storage)
{
    if (steps < 1)
        throw Error(ErrorCode::domain_error, "walk needs at least one step");
    WalkPath path{{}, OccupationField(storage)};
    path.positions.reserve(static_cast<std::size_t>(steps));
    std::int64_t s = 0;
    for (std::int64_t k = 0; k < steps; ++k)
    {
        s += step_law.sample(rng.next_u64());
        path.positions.push_back(s);
        path.field.advance(s);
    }
    return path;
}

double holder_statistic(OccupationField const& field, double mu, double theta)
{
    if (field.empty())
        throw Error(ErrorCode::domain_error, "holder statistic of empty field");
    if (!(mu > 0 && mu <= 1) || !(theta > 0))
        throw Error(ErrorCode::domain_error, "need mu in (0,1] and theta > 0");

    std::int64_t const lo = field.min_site() - 1;
    std::int64_t const hi = field.max_site() + 1;
    std::vector<double> counts(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (auto [site, c] : field.entries())
        counts[static_cast<std::size_t>(site - lo)] = static_cast<double>(c);

    // Pairs satisfy 0 < |y - z| < n^theta, i.e. gap <= max_gap.
    double bound = std::pow(static_cast<double>(field.n()), theta);
    auto max_gap = static_cast<std::int64_t>(std::ceil(bound)) - 1;
    max_gap = std::min<std::int64_t>(max_gap, hi - lo);

    std::vector<double> scale(static_cast<std::size_t>(max_gap + 1), 1.0);
    for (std::int64_t g = 1; g <= max_gap; ++g)
        scale[static_cast<std::size_t>(g)] = std::pow(static_cast<double>(g), mu);

    double best = 0;
    auto const width = static_cast<std::int64_t>(counts.size());
    for (std::int64_t i = 0; i < width; ++i)
    {
        std::int64_t jmax = std::min(width - 1, i + max_gap);
        for (std::int64_t j = i + 1; j <= jmax; ++j)
        {
            double diff = std::abs(counts[std::size_t(i)] - counts[std::size_t(j)]);
            best = std::max(best, diff / scale[std::size_t(j - i)]);
        }
    }
    return best;
}

}  // namespace rwrs
