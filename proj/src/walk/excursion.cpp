#include "rwrs/walk/excursion.hpp"

#include <cmath>

#include "rwrs/core/error.hpp"

namespace rwrs
{
ExcursionLaw::ExcursionLaw(double p) : p_(p)
{
    if (!(p > 0 && p < 1))
        throw Error(ErrorCode::domain_error, "excursion law needs p in (0,1)");
}

double ExcursionLaw::pmf(std::int64_t count) const
{
    if (count < 0)
        return 0.0;
    if (count == 0)
        return 1 - p_;
    return std::pow(1 - p_, static_cast<double>(count - 1)) * p_ * p_;
}

double ExcursionLaw::variance() const
{
    // E[M^2] = p^2 sum l^2 q^{l-1} = (1 + q) / p with q = 1 - p
    return (2 - p_) / p_ - 1;
}

double ExcursionLaw::mgf(double t) const
{
    double q = 1 - p_;
    double denom = 1 - q * std::exp(-t);
    if (!(denom > 0))
        throw Error(ErrorCode::domain_error, "mgf needs t > log(1 - p)");
    return (q * std::exp(t) - 1 + 2 * p_) / denom;
}

std::int64_t ExcursionLaw::sample(RngStream& rng) const
{
    if (rng.uniform() >= p_)
        return 0;
    // 1 + number of failures before a success of probability p
    double u = rng.uniform_pos();
    return 1 + static_cast<std::int64_t>(std::floor(std::log(u) / std::log1p(-p_)));
}

}  // namespace rwrs
