#include "rwrs/conditional/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rwrs/core/error.hpp"

namespace rwrs
{
double std_normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

LltDiagnostic llt_diagnostic(OccupationField const& field,
                             LatticeDistribution const& scenery_law,
                             ZeroMassMethod method)
{
    LltDiagnostic out;
    out.v = field.v();
    out.defined = field.n() % detect_period(scenery_law) == 0;
    if (!out.defined)
        return out;
    out.p0 = method == ZeroMassMethod::fourier
                 ? conditional_zero_fourier(field, scenery_law)
                 : exact_conditional_pmf(field, scenery_law).prob(0);
    out.statistic = out.p0 * std::sqrt(static_cast<double>(out.v));
    return out;
}

BerryEsseenCheck berry_esseen_check(OccupationField const& field,
                                    LatticeDistribution const& scenery_law,
                                    std::int64_t budget)
{
    auto law = exact_conditional_pmf(field, scenery_law, budget);
    double const sigma = scenery_law.std_dev();
    double const v = static_cast<double>(field.v());
    double const scale = sigma * std::sqrt(v);

    BerryEsseenCheck out;
    double below = 0;
    for (std::size_t i = 0; i < law.pmf.probs.size(); ++i)
    {
        double p = law.pmf.probs[i];
        if (p <= 0)
            continue;
        double x = static_cast<double>(law.pmf.offset + std::int64_t(i)) / scale;
        double phi = std_normal_cdf(x);
        double above = below + p;
        out.gap = std::max({out.gap, std::abs(below - phi), std::abs(above - phi)});
        below = above;
    }

    double lyapunov = scenery_law.abs_moment(3) / std::pow(sigma, 3);
    auto q3 = static_cast<double>(field.q3());
    out.bound_factor = lyapunov * q3 / std::pow(v, 1.5);
    out.ratio = out.gap / out.bound_factor;
    out.holds = out.gap <= berry_esseen_constant * out.bound_factor;
    return out;
}

}  // namespace rwrs
