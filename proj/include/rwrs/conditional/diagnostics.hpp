#pragma once

#include <cstdint>

#include "rwrs/conditional/conditional_law.hpp"

namespace rwrs
{
//! Standard normal distribution function, via erfc.
double std_normal_cdf(double x);

enum class ZeroMassMethod
{
    fourier,
    convolution,
};

struct LltDiagnostic
{
    double p0{0};  //!< P[Z_n = 0 | S]
    std::int64_t v{0};  //!< V_n of the conditioning field
    double statistic{0};  //!< p0 * sqrt(V_n)
    bool defined{false};  //!< total count lies in dN
};

/*!
 * P[Z_n = 0 | S] sqrt(V_n), the quantity bounded below by the conditional
 * local limit theorem on typical walks. When the visit total is not a
 * multiple of the period, p0 is 0 and the record is flagged undefined.
 */
LltDiagnostic llt_diagnostic(OccupationField const& field,
                             LatticeDistribution const& scenery_law,
                             ZeroMassMethod method = ZeroMassMethod::fourier);

//! Universal Berry-Esseen constant for independent, non-identical summands.
inline constexpr double berry_esseen_constant = 0.56;

struct BerryEsseenCheck
{
    //! sup_x |P[Z_n / (sigma sqrt(V_n)) <= x | S] - Phi(x)|
    double gap{0};
    //! (E|xi|^3 / sigma^3) Q3 / V^{3/2}
    double bound_factor{0};
    double ratio{0};
    bool holds{false};  //!< gap <= berry_esseen_constant * bound_factor
};

/*!
 * Compare the exact conditional CDF of Z_n / (sigma sqrt(V_n)) with Phi.
 * The difference between a step function and a continuous one peaks at a
 * jump, so both one-sided limits at every atom are checked.
 */
BerryEsseenCheck berry_esseen_check(OccupationField const& field,
                                    LatticeDistribution const& scenery_law,
                                    std::int64_t budget
                                    = default_convolution_budget);

}  // namespace rwrs
