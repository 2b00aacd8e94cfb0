#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rwrs/model/engine.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
//! Seed and parallelism shared by all Monte Carlo estimators.
struct RunOptions
{
    std::uint64_t master_seed{0};
    unsigned workers{1};
};

/*!
 * Monte Carlo point estimate with its uncertainty.
 *
 * For proportions the interval is Wilson's; otherwise it is
 * estimate +- 1.96 std_error. Trial i always uses stream i of master_seed,
 * so the summary identifies the seed range [0, trials).
 */
struct EstimateReport
{
    double estimate{0};
    std::uint64_t trials{0};
    double std_error{0};
    double ci_lo{0};
    double ci_hi{0};
    std::uint64_t master_seed{0};
    double wall_time_s{0};
};

//---------------------------------------------------------------------------//
//! P[max_{1<=k<=T} Z_k <= threshold], annealed.
EstimateReport estimate_persistence(ModelSpec const& spec,
                                    std::int64_t T,
                                    std::uint64_t trials,
                                    std::int64_t threshold,
                                    RunOptions const& options);

/*!
 * Persistence at every horizon of an increasing list from one pass to the
 * largest horizon. Each trial is followed until its first exceedance, so
 * the estimates share trajectories and are nonincreasing in T.
 */
std::vector<EstimateReport>
persistence_curve(ModelSpec const& spec,
                  std::span<std::int64_t const> horizons,
                  std::uint64_t trials,
                  std::int64_t threshold,
                  RunOptions const& options);

//---------------------------------------------------------------------------//
struct ExpFunctionalPair
{
    EstimateReport from_zero;  //!< E[(sum_{l=0}^T e^{Z_l})^{-1}]
    EstimateReport from_one;  //!< E[(sum_{l=1}^T e^{Z_l})^{-1}]
};

/*!
 * Both exponential functionals from the same trajectories.
 *
 * The sum is kept as e^M s with M the running maximum of Z, so nothing
 * overflows. A trial stops once M exceeds 50: both reciprocals are then
 * below e^{-50} and the remaining steps cannot change them by more.
 */
ExpFunctionalPair estimate_exp_functionals(ModelSpec const& spec,
                                           std::int64_t T,
                                           std::uint64_t trials,
                                           RunOptions const& options);

//! One of the two exponential functionals; \c start is 0 or 1.
EstimateReport estimate_exp_functional(ModelSpec const& spec,
                                       std::int64_t T,
                                       std::uint64_t trials,
                                       int start,
                                       RunOptions const& options);

//! E[max(0, max_{k<=T} Z_k)] / T^{3/4}
EstimateReport estimate_kappa(ModelSpec const& spec,
                              std::int64_t T,
                              std::uint64_t trials,
                              RunOptions const& options);

//! E[V_T] / T^{3/2}, with V_T the self-intersection local time of the field.
EstimateReport estimate_v_scaling(ModelSpec const& spec,
                                  std::int64_t T,
                                  std::uint64_t trials,
                                  RunOptions const& options);

//! K_delta = delta / (1 - delta)^{1/4}
double k_delta(double delta);

}  // namespace rwrs
