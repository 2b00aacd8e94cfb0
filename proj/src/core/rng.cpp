#include "rwrs/core/rng.hpp"

#include <cmath>

namespace rwrs
{
std::uint64_t probability_threshold(double p)
{
    if (!(p > 0))
        return 0;
    if (p >= 1)
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
}

}  // namespace rwrs
