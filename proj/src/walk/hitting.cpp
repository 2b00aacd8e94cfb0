#include "rwrs/walk/hitting.hpp"

#include <cmath>

#include "rwrs/core/error.hpp"
#include "rwrs/core/parallel.hpp"
#include "rwrs/core/rng.hpp"

namespace rwrs
{
namespace
{
struct HitTally
{
    std::uint64_t trials{0};
    std::uint64_t hits{0};
    std::uint64_t censored{0};
};

//! Outcome of one excursion: 1 hit, 0 miss, -1 censored.
template<class Excursion>
HitEstimate tally_hits(HitOptions const& options, Excursion&& excursion)
{
    if (options.trials == 0)
        throw Error(ErrorCode::domain_error, "need at least one trial");
    auto chunks = run_chunks<HitTally>(
        options.trials, options.workers, [&](std::uint64_t b, std::uint64_t e) {
            HitTally t;
            for (std::uint64_t i = b; i < e; ++i)
            {
                RngStream rng(SeedSpec{options.master_seed, i});
                int outcome = excursion(rng);
                ++t.trials;
                t.hits += outcome == 1;
                t.censored += outcome < 0;
            }
            return t;
        });
    HitEstimate est;
    for (auto const& t : chunks)
    {
        est.trials += t.trials;
        est.hits += t.hits;
        est.censored += t.censored;
    }
    auto n = static_cast<double>(est.trials);
    est.value = double(est.hits) / n;
    est.std_error = std::sqrt(est.value * (1 - est.value) / n);
    return est;
}

}  // namespace

HitEstimate hit_prob(LatticeDistribution const& step_law,
                     std::int64_t x,
                     HitMethod method,
                     HitOptions const& options)
{
    if (x == 0)
        throw Error(ErrorCode::domain_error, "hit_prob needs x != 0");

    if (method == HitMethod::closed_form_srw)
    {
        if (!step_law.is_rademacher())
        {
            throw Error(ErrorCode::method_unavailable,
                        "closed form only for the simple random walk");
        }
        HitEstimate est;
        est.value = 1.0 / (2.0 * static_cast<double>(std::abs(x)));
        return est;
    }

    return tally_hits(options, [&](RngStream& rng) {
        std::int64_t s = 0;
        for (std::uint64_t k = 0; k < options.max_steps; ++k)
        {
            s += step_law.sample(rng.next_u64());
            if (s == x)
                return 1;
            if (s == 0)
                return 0;
        }
        return -1;
    });
}

double oriented_hit_prob(double p, double delta)
{
    if (!(p > 0 && p < 1) || !(delta > 0 && delta < 1))
        throw Error(ErrorCode::domain_error, "need p, delta in (0,1)");
    return p / (delta + 2 * p);
}

double lazy_hit_prob(double jump_chain_p, double delta)
{
    if (!(jump_chain_p > 0 && jump_chain_p <= 1) || !(delta > 0 && delta < 1))
        throw Error(ErrorCode::domain_error, "need p in (0,1], delta in (0,1)");
    return (1 - delta) * jump_chain_p;
}

HitEstimate oriented_hit_prob_mc(LatticeDistribution const& vertical_law,
                                 std::int64_t x,
                                 double delta,
                                 HitOptions const& options)
{
    if (x == 0)
        throw Error(ErrorCode::domain_error, "oriented hit needs x != 0");
    if (!(delta > 0 && delta < 1))
        throw Error(ErrorCode::domain_error, "need delta in (0,1)");
    std::uint64_t const horizontal = probability_threshold(delta);

    return tally_hits(options, [&](RngStream& rng) {
        std::int64_t s = 0;
        for (std::uint64_t k = 0; k < options.max_steps; ++k)
        {
            if (rng.next_u64() < horizontal)
            {
                if (s == x)
                    return 1;
                if (s == 0)
                    return 0;
            }
            else
            {
                s += vertical_law.sample(rng.next_u64());
            }
        }
        return -1;
    });
}

}  // namespace rwrs
