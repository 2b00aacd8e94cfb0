#include "rwrs/persistence/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rwrs/core/error.hpp"
#include "rwrs/core/parallel.hpp"
#include "rwrs/core/rng.hpp"
#include "rwrs/core/statistics.hpp"
#include "rwrs/model/scenery.hpp"
#include "rwrs/walk/walk.hpp"

namespace rwrs
{
namespace
{
//! Visited sites in order plus, for each step, the index of its site.
struct SiteIndex
{
    std::vector<std::int64_t> sites;
    std::vector<std::size_t> step_site;
};

SiteIndex index_sites(std::span<std::int64_t const> positions)
{
    if (positions.empty())
        throw Error(ErrorCode::domain_error, "empty walk");
    SiteIndex idx;
    idx.sites.assign(positions.begin(), positions.end());
    std::sort(idx.sites.begin(), idx.sites.end());
    idx.sites.erase(std::unique(idx.sites.begin(), idx.sites.end()),
                    idx.sites.end());
    for (auto s : positions)
    {
        auto it = std::lower_bound(idx.sites.begin(), idx.sites.end(), s);
        idx.step_site.push_back(std::size_t(it - idx.sites.begin()));
    }
    return idx;
}

//! Number of sceneries on r sites, or nullopt-like 0 if above the cap.
std::uint64_t config_count(std::size_t atoms, std::size_t r, std::uint64_t cap)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i)
    {
        if (total > cap / atoms)
            return 0;
        total *= atoms;
    }
    return total <= cap ? total : 0;
}

/*!
 * Call visit(values, weight) for every scenery on the visited sites
 * (exhaustive) or for mc_trials sampled ones with weight 1/mc_trials.
 */
template<class Visit>
std::pair<CheckMode, std::uint64_t>
for_each_scenery(SiteIndex const& idx,
                 LatticeDistribution const& law,
                 EnumerationOptions const& options,
                 Visit&& visit)
{
    auto const& atoms = law.atoms();
    std::size_t const r = idx.sites.size();
    std::vector<std::int64_t> values(r);
    std::uint64_t total = config_count(atoms.size(), r, options.max_configs);
    if (total > 0)
    {
        std::vector<std::size_t> digit(r, 0);
        for (std::uint64_t c = 0; c < total; ++c)
        {
            double weight = 1;
            for (std::size_t j = 0; j < r; ++j)
            {
                values[j] = atoms[digit[j]].value;
                weight *= atoms[digit[j]].prob;
            }
            visit(values, weight);
            for (std::size_t j = 0; j < r; ++j)
            {
                if (++digit[j] < atoms.size())
                    break;
                digit[j] = 0;
            }
        }
        return {CheckMode::exhaustive, total};
    }

    if (options.mc_trials == 0)
        throw Error(ErrorCode::domain_error, "need at least one scenery sample");
    double const weight = 1 / double(options.mc_trials);
    for (std::uint64_t t = 0; t < options.mc_trials; ++t)
    {
        Scenery scenery(law, hash_draw(options.master_seed, t, 0x1e5ce4e1u));
        for (std::size_t j = 0; j < r; ++j)
            values[j] = scenery.at(idx.sites[j]);
        visit(values, weight);
    }
    return {CheckMode::monte_carlo, options.mc_trials};
}

double proportion_se(double p, std::uint64_t n)
{
    return std::sqrt(std::max(0.0, p * (1 - p)) / double(n));
}

}  // namespace

std::string_view to_string(CheckMode mode)
{
    return mode == CheckMode::exhaustive ? "exhaustive" : "monte_carlo";
}

//---------------------------------------------------------------------------//
LevyCheck levy_check(std::span<std::int64_t const> positions,
                     LatticeDistribution const& scenery_law,
                     std::int64_t threshold,
                     EnumerationOptions const& options)
{
    auto idx = index_sites(positions);
    CompensatedSum max_above, end_above;
    auto [mode, configs] = for_each_scenery(
        idx, scenery_law, options, [&](auto const& xi, double weight) {
            std::int64_t z = 0;
            bool crossed = false;
            for (auto j : idx.step_site)
            {
                z += xi[j];
                crossed = crossed || z > threshold;
            }
            if (crossed)
                max_above.add(weight);
            if (z > threshold)
                end_above.add(weight);
        });

    LevyCheck out;
    out.mode = mode;
    out.configs = configs;
    out.lhs = max_above.value();
    double p_end = end_above.value();
    out.rhs = 2 * p_end;
    if (mode == CheckMode::exhaustive)
    {
        out.holds = out.lhs <= out.rhs;
    }
    else
    {
        out.lhs_se = proportion_se(out.lhs, configs);
        out.rhs_se = 2 * proportion_se(p_end, configs);
        out.holds = out.lhs
                    <= out.rhs
                           + 3 * std::hypot(out.lhs_se, out.rhs_se);
    }
    return out;
}

//---------------------------------------------------------------------------//
AssociationCheck association_check(std::span<std::int64_t const> positions,
                                   LatticeDistribution const& scenery_law,
                                   AssociationSplit const& split,
                                   EnumerationOptions const& options)
{
    auto const T = std::int64_t(positions.size());
    if (!(1 <= split.u && split.u <= split.v && split.v < split.w
          && split.w <= T))
    {
        throw Error(ErrorCode::domain_error,
                    "split must satisfy 1 <= u <= v < w <= T");
    }
    auto idx = index_sites(positions);
    auto const lo = std::numeric_limits<std::int64_t>::min();

    CompensatedSum pa, pb, pab, pb_inc, pab_inc;
    auto [mode, configs] = for_each_scenery(
        idx, scenery_law, options, [&](auto const& xi, double weight) {
            std::int64_t z = 0, z_v = 0;
            std::int64_t max1 = lo, max2 = lo, max2_inc = lo;
            for (std::int64_t k = 1; k <= split.w; ++k)
            {
                z += xi[idx.step_site[std::size_t(k - 1)]];
                if (k >= split.u && k <= split.v)
                    max1 = std::max(max1, z);
                if (k == split.v)
                    z_v = z;
                if (k > split.v)
                {
                    max2 = std::max(max2, z);
                    max2_inc = std::max(max2_inc, z - z_v);
                }
            }
            bool a = max1 <= split.a;
            bool b = max2 <= split.b;
            bool b_inc = max2_inc <= split.b;
            if (a)
                pa.add(weight);
            if (b)
                pb.add(weight);
            if (a && b)
                pab.add(weight);
            if (b_inc)
                pb_inc.add(weight);
            if (a && b_inc)
                pab_inc.add(weight);
        });

    AssociationCheck out;
    out.mode = mode;
    out.configs = configs;
    out.joint = pab.value();
    out.product = pa.value() * pb.value();
    out.joint_inc = pab_inc.value();
    out.product_inc = pa.value() * pb_inc.value();
    if (mode == CheckMode::exhaustive)
    {
        out.holds = out.joint >= out.product - 1e-12;
        out.holds_inc = out.joint_inc >= out.product_inc - 1e-12;
    }
    else
    {
        auto allowance = [&](double joint, double p1, double p2) {
            double se_joint = proportion_se(joint, configs);
            double se_prod = std::hypot(p2 * proportion_se(p1, configs),
                                        p1 * proportion_se(p2, configs));
            return 3 * std::hypot(se_joint, se_prod);
        };
        out.holds = out.joint >= out.product
                                     - allowance(out.joint, pa.value(), pb.value());
        out.holds_inc
            = out.joint_inc
              >= out.product_inc
                     - allowance(out.joint_inc, pa.value(), pb_inc.value());
    }
    return out;
}

//---------------------------------------------------------------------------//
std::vector<InequalityInstance> random_instances(LatticeDistribution const& step_law,
                                                 std::size_t count,
                                                 std::int64_t max_T,
                                                 std::uint64_t seed)
{
    if (max_T < 2)
        throw Error(ErrorCode::domain_error, "instances need max_T >= 2");
    std::vector<InequalityInstance> out(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        RngStream rng(SeedSpec{seed, i});
        // uniform on [lo, hi]; the modulo bias is below 2^-50 here
        auto pick = [&](std::int64_t lo, std::int64_t hi) {
            return lo + std::int64_t(rng.next_u64() % std::uint64_t(hi - lo + 1));
        };
        auto& inst = out[i];
        std::int64_t T = pick(2, max_T);
        std::int64_t s = 0;
        for (std::int64_t k = 0; k < T; ++k)
        {
            s += step_law.sample(rng.next_u64());
            inst.positions.push_back(s);
        }
        inst.split.u = pick(1, T - 1);
        inst.split.v = pick(inst.split.u, T - 1);
        inst.split.w = pick(inst.split.v + 1, T);
        inst.split.a = pick(-2, 3);
        inst.split.b = pick(-2, 3);
        inst.levy_threshold = pick(-2, 3);
    }
    return out;
}

//---------------------------------------------------------------------------//
L2Check l2_max_bound_check(ModelSpec const& spec,
                           std::int64_t T,
                           std::uint64_t trials,
                           RunOptions const& options)
{
    spec.check();
    if (T < 1 || trials == 0)
        throw Error(ErrorCode::domain_error, "need T >= 1 and trials >= 1");

    struct Pair
    {
        SampleMoments max_sq;
        SampleMoments v;
    };
    auto chunks = run_chunks<Pair>(
        trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            Pair p;
            for (std::uint64_t i = begin; i < end; ++i)
            {
                OccupationField field;
                auto best = std::numeric_limits<std::int64_t>::min();
                run_trial(spec,
                          options.master_seed,
                          i,
                          T,
                          [&](std::int64_t, std::int64_t s, std::int64_t z, bool marked) {
                              if (marked)
                                  field.advance(s);
                              best = std::max(best, z);
                              return true;
                          });
                p.max_sq.add(double(best) * double(best));
                p.v.add(double(field.v()));
            }
            return p;
        });
    Pair total;
    for (auto const& c : chunks)
    {
        total.max_sq.merge(c.max_sq);
        total.v.merge(c.v);
    }

    L2Check out;
    out.lhs = total.max_sq.mean();
    out.lhs_se = total.max_sq.std_error();
    out.rhs = total.v.mean();
    out.rhs_se = total.v.std_error();
    out.holds = out.lhs <= out.rhs + 3 * std::hypot(out.lhs_se, out.rhs_se);
    return out;
}

//---------------------------------------------------------------------------//
namespace
{
template<class Pred>
double walk_frequency(LatticeDistribution const& step_law,
                      std::int64_t n,
                      std::uint64_t trials,
                      RunOptions const& options,
                      Pred&& pred)
{
    if (n < 1 || trials == 0)
        throw Error(ErrorCode::domain_error, "need n >= 1 and trials >= 1");
    auto chunks = run_chunks<std::uint64_t>(
        trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t hits = 0;
            for (std::uint64_t i = begin; i < end; ++i)
            {
                RngStream rng(SeedSpec{options.master_seed, i});
                auto path = simulate_walk(n, step_law, rng);
                hits += pred(path.field);
            }
            return hits;
        });
    std::uint64_t hits = 0;
    for (auto h : chunks)
        hits += h;
    return double(hits) / double(trials);
}

}  // namespace

double tail_event_frequency(LatticeDistribution const& step_law,
                            std::int64_t n,
                            std::uint64_t trials,
                            double gamma,
                            RunOptions const& options)
{
    if (!(gamma > 0 && gamma < 0.5))
        throw Error(ErrorCode::domain_error, "gamma must lie in (0, 1/2)");
    double const bound = std::pow(double(n), 0.5 + gamma);
    return walk_frequency(
        step_law, n, trials, options, [&](OccupationField const& f) {
            return double(f.n_star()) <= bound && double(f.range()) <= bound;
        });
}

double holder_frequency(LatticeDistribution const& step_law,
                        std::int64_t n,
                        std::uint64_t trials,
                        double mu,
                        double theta,
                        double exponent,
                        RunOptions const& options)
{
    double const bound = std::pow(double(n), exponent);
    return walk_frequency(
        step_law, n, trials, options, [&](OccupationField const& f) {
            return holder_statistic(f, mu, theta) <= bound;
        });
}

}  // namespace rwrs
