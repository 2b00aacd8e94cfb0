#include "rwrs/conditional/conditional_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rwrs/core/error.hpp"
#include "rwrs/core/statistics.hpp"

namespace rwrs
{
namespace
{
IntegerPmf scaled_law(LatticeDistribution const& law, std::int64_t m)
{
    IntegerPmf pmf;
    pmf.offset = law.min_value() * m;
    pmf.probs.assign(
        static_cast<std::size_t>((law.max_value() - law.min_value()) * m + 1),
        0.0);
    for (auto const& a : law.atoms())
        pmf.probs[static_cast<std::size_t>(a.value * m - pmf.offset)] = a.prob;
    return pmf;
}

double ipow(double base, std::int64_t exp)
{
    double result = 1;
    while (exp > 0)
    {
        if (exp & 1)
            result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

}  // namespace

IntegerPmf convolve(IntegerPmf const& a, IntegerPmf const& b)
{
    IntegerPmf out;
    out.offset = a.offset + b.offset;
    out.probs.assign(a.probs.size() + b.probs.size() - 1, 0.0);
    // Outer loop over the operand with fewer nonzero entries.
    auto nonzeros = [](IntegerPmf const& p) {
        return std::count_if(
            p.probs.begin(), p.probs.end(), [](double x) { return x != 0; });
    };
    IntegerPmf const& sparse = nonzeros(a) <= nonzeros(b) ? a : b;
    IntegerPmf const& dense = &sparse == &a ? b : a;
    for (std::size_t i = 0; i < sparse.probs.size(); ++i)
    {
        double pi = sparse.probs[i];
        if (pi == 0)
            continue;
        double* dst = out.probs.data() + i;
        for (std::size_t j = 0; j < dense.probs.size(); ++j)
            dst[j] += pi * dense.probs[j];
    }
    return out;
}

IntegerPmf convolve_power(IntegerPmf const& base, std::int64_t exponent)
{
    IntegerPmf result;
    IntegerPmf square = base;
    bool first = true;
    while (exponent > 0)
    {
        if (exponent & 1)
        {
            result = first ? square : convolve(result, square);
            first = false;
        }
        exponent >>= 1;
        if (exponent > 0)
            square = convolve(square, square);
    }
    return result;
}

ConditionalLaw exact_conditional_pmf(OccupationField const& field,
                                     LatticeDistribution const& scenery_law,
                                     std::int64_t budget)
{
    if (field.empty())
        throw Error(ErrorCode::domain_error, "conditional law of empty field");
    std::int64_t span = field.n() * scenery_law.max_abs();
    if (span > budget)
    {
        throw Error(ErrorCode::budget_exceeded,
                    "n*max|xi| = " + std::to_string(span) + " exceeds budget "
                        + std::to_string(budget));
    }

    ConditionalLaw law;
    law.n = field.n();
    law.v = field.v();
    for (auto [m, count] : field.multiplicities())
    {
        IntegerPmf group = convolve_power(scaled_law(scenery_law, m), count);
        law.pmf = convolve(law.pmf, group);
    }
    return law;
}

double conditional_zero_fourier(OccupationField const& field,
                                LatticeDistribution const& scenery_law,
                                std::int64_t quadrature_points)
{
    if (field.empty())
        throw Error(ErrorCode::domain_error, "fourier inversion of empty field");
    int const d = detect_period(scenery_law);
    if (field.n() % d != 0)
        return 0.0;

    std::int64_t degree = field.n() * scenery_law.max_abs();
    std::int64_t points = std::max(quadrature_points, 2 * degree + 2);
    points += points % 2;

    auto groups = field.multiplicities();
    double const h = 2 * std::numbers::pi / (d * static_cast<double>(points));
    double const start = -std::numbers::pi / d;

    // The integrand is even; midpoints pair up as t_j and t_{M-1-j}.
    CompensatedSum sum;
    for (std::int64_t j = 0; j < points / 2; ++j)
    {
        double t = start + (static_cast<double>(j) + 0.5) * h;
        double f = 1;
        for (auto [m, count] : groups)
        {
            f *= ipow(char_fn(scenery_law, t * static_cast<double>(m)), count);
            if (f == 0)
                break;
        }
        sum.add(f);
    }
    return 2 * sum.value() / static_cast<double>(points);
}

}  // namespace rwrs
