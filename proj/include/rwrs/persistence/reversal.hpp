#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rwrs/core/statistics.hpp"
#include "rwrs/persistence/estimators.hpp"

namespace rwrs
{
/*!
 * One two-sample KS comparison between a functional of (Z_k)_{k=1..T} and
 * the same functional of the reversed vector (Z_{T-k} - Z_T)_{k=1..T}.
 *
 * The two samples come from disjoint trial ranges, [0, samples) for the
 * original and [samples, 2 samples) for the reversed vector.
 */
struct ReversalTest
{
    Model model{Model::rwrs};
    std::int64_t T{0};
    std::string functional;  //!< "max", "Z_1", "Z_{T/2}" or "Z_T"
    KsResult ks;
    bool rejected{false};
};

std::vector<ReversalTest> reversal_tests(ModelSpec const& spec,
                                         std::int64_t T,
                                         std::uint64_t samples,
                                         double alpha,
                                         RunOptions const& options);

/*!
 * Same battery for stationarity of increments: (Z_{k+m} - Z_m)_{k=1..T}
 * against (Z_k)_{k=1..T}, with m = \c shift.
 */
std::vector<ReversalTest> stationarity_tests(ModelSpec const& spec,
                                             std::int64_t T,
                                             std::int64_t shift,
                                             std::uint64_t samples,
                                             double alpha,
                                             RunOptions const& options);

struct ReversalBattery
{
    std::vector<ReversalTest> tests;
    std::size_t rejections{0};
    //! one rejection tolerated per 20 tests, rounded up
    std::size_t allowance{0};
    bool passed{false};
};

ReversalBattery reversal_battery(std::span<ModelSpec const> specs,
                                 std::span<std::int64_t const> horizons,
                                 std::uint64_t samples,
                                 double alpha,
                                 RunOptions const& options);

}  // namespace rwrs
