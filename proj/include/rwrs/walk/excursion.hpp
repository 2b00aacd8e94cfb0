#pragma once

#include <cstdint>

#include "rwrs/core/rng.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
/*!
 * Law of the number M of visits to z between two consecutive visits to y,
 * for a walk whose probability of reaching z before returning to y is p:
 *
 *   P[M = 0] = 1 - p,   P[M = l] = (1 - p)^{l-1} p^2  (l >= 1).
 *
 * The mean is exactly 1 for every p.
 */
class ExcursionLaw
{
  public:
    explicit ExcursionLaw(double p);

    double p() const { return p_; }
    double pmf(std::int64_t count) const;
    double mean() const { return 1.0; }
    double variance() const;

    /*!
     * G(t) = E[exp(t (1 - M))] = ((1-p) e^t - 1 + 2p) / (1 - (1-p) e^{-t}),
     * finite for t > log(1 - p).
     */
    double mgf(double t) const;

    std::int64_t sample(RngStream& rng) const;

  private:
    double p_;
};

//! Free-function forms of the excursion law.
inline ExcursionLaw excursion_law(double p)
{
    return ExcursionLaw(p);
}

inline double excursion_mgf(double p, double t)
{
    return ExcursionLaw(p).mgf(t);
}

}  // namespace rwrs
