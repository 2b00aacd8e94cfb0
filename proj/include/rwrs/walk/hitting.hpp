#pragma once

#include <cstdint>

#include "rwrs/core/lattice_distribution.hpp"

namespace rwrs
{
enum class HitMethod
{
    closed_form_srw,
    monte_carlo,
};

struct HitOptions
{
    std::uint64_t trials{100000};
    //! Excursions still undecided after this many steps are censored.
    std::uint64_t max_steps{10'000'000};
    std::uint64_t master_seed{0};
    unsigned workers{1};
};

struct HitEstimate
{
    double value{0};
    double std_error{0};
    std::uint64_t trials{0};
    std::uint64_t hits{0};
    std::uint64_t censored{0};

    double censored_fraction() const
    {
        return trials ? double(censored) / double(trials) : 0.0;
    }
};

/*!
 * p(x): probability that the walk started at 0 visits x before returning
 * to 0. The closed form 1/(2|x|) holds for the simple random walk only.
 * Monte Carlo counts censored excursions as misses and reports them.
 */
HitEstimate hit_prob(LatticeDistribution const& step_law,
                     std::int64_t x,
                     HitMethod method,
                     HitOptions const& options = {});

/*!
 * Probability that (S_n, eps_n)_{n>=1} visits (x, 1) before (0, 1), as a
 * function of the hitting probability p of the oriented model's vertical
 * walk S (the lazy walk that holds with probability delta):
 * p / (delta + 2 p).
 *
 * For a vertical law nu, that lazy hitting probability is (1 - delta) times
 * the hitting probability of the nu-walk; see \c lazy_hit_prob.
 */
double oriented_hit_prob(double p, double delta);

//! Hitting probability of the lazy walk given that of the jump chain.
double lazy_hit_prob(double jump_chain_p, double delta);

//! Direct simulation of (S_n, eps_n) for the oriented hitting probability.
HitEstimate oriented_hit_prob_mc(LatticeDistribution const& vertical_law,
                                 std::int64_t x,
                                 double delta,
                                 HitOptions const& options = {});

}  // namespace rwrs
