#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rwrs/core/lattice_distribution.hpp"
#include "rwrs/persistence/estimators.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
// Quenched-walk checks: the walk S_1..S_T is fixed and only the scenery is
// random, so Z_k = sum_{i<=k} xi_{S_i}. Small instances enumerate every
// scenery on the visited sites with its exact probability; larger ones
// sample sceneries and compare with a 3 standard error allowance.

enum class CheckMode
{
    exhaustive,
    monte_carlo,
};

std::string_view to_string(CheckMode mode);

struct EnumerationOptions
{
    std::uint64_t max_configs{1u << 20};
    std::uint64_t mc_trials{100'000};
    std::uint64_t master_seed{0};
};

//! lhs = P[max_{k<=T} Z_k > a | S], rhs = 2 P[Z_T > a | S]
struct LevyCheck
{
    double lhs{0};
    double rhs{0};
    double lhs_se{0};
    double rhs_se{0};
    bool holds{false};
    CheckMode mode{CheckMode::exhaustive};
    std::uint64_t configs{0};  //!< sceneries enumerated or sampled
};

//! Exhaustive mode requires lhs <= rhs with no tolerance.
LevyCheck levy_check(std::span<std::int64_t const> positions,
                     LatticeDistribution const& scenery_law,
                     std::int64_t threshold,
                     EnumerationOptions const& options = {});

//! Time indices 1 <= u <= v < w <= T and the two levels.
struct AssociationSplit
{
    std::int64_t u{1};
    std::int64_t v{1};
    std::int64_t w{2};
    std::int64_t a{0};
    std::int64_t b{0};
};

/*!
 * joint   = P[max_{u..v} Z <= a, max_{v+1..w} Z <= b | S]
 * product = P[max_{u..v} Z <= a | S] P[max_{v+1..w} Z <= b | S]
 * and the same with Z_k - Z_v in the second block (the _inc fields).
 */
struct AssociationCheck
{
    double joint{0};
    double product{0};
    double joint_inc{0};
    double product_inc{0};
    bool holds{false};  //!< joint >= product - tolerance
    bool holds_inc{false};
    CheckMode mode{CheckMode::exhaustive};
    std::uint64_t configs{0};
};

AssociationCheck association_check(std::span<std::int64_t const> positions,
                                   LatticeDistribution const& scenery_law,
                                   AssociationSplit const& split,
                                   EnumerationOptions const& options = {});

//! A random small instance for the quenched-walk checks.
struct InequalityInstance
{
    std::vector<std::int64_t> positions;  //!< S_1..S_T
    AssociationSplit split;
    std::int64_t levy_threshold{1};
};

/*!
 * \c count instances with T uniform on [2, max_T], walks drawn from
 * \c step_law, a uniform split u <= v < w and levels in [-2, 3].
 */
std::vector<InequalityInstance> random_instances(LatticeDistribution const& step_law,
                                                 std::size_t count,
                                                 std::int64_t max_T,
                                                 std::uint64_t seed);

//---------------------------------------------------------------------------//
//! E[(max_{k<=T} Z_k)^2] against E[V_T], annealed.
struct L2Check
{
    double lhs{0};
    double lhs_se{0};
    double rhs{0};
    double rhs_se{0};
    bool holds{false};  //!< lhs <= rhs + 3 sqrt(lhs_se^2 + rhs_se^2)
};

L2Check l2_max_bound_check(ModelSpec const& spec,
                           std::int64_t T,
                           std::uint64_t trials,
                           RunOptions const& options);

//! Frequency of {N*_n <= n^{1/2+gamma}, R_n <= n^{1/2+gamma}}.
double tail_event_frequency(LatticeDistribution const& step_law,
                            std::int64_t n,
                            std::uint64_t trials,
                            double gamma,
                            RunOptions const& options);

//! Frequency of {holder_statistic(field, mu, theta) <= n^exponent}.
double holder_frequency(LatticeDistribution const& step_law,
                        std::int64_t n,
                        std::uint64_t trials,
                        double mu,
                        double theta,
                        double exponent,
                        RunOptions const& options);

}  // namespace rwrs
