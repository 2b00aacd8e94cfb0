#pragma once

#include <cstdint>
#include <vector>

#include "rwrs/core/lattice_distribution.hpp"
#include "rwrs/walk/occupation_field.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
//! Dense pmf on the integers {offset, ..., offset + probs.size() - 1}.
struct IntegerPmf
{
    std::int64_t offset{0};
    std::vector<double> probs{1.0};

    double at(std::int64_t z) const
    {
        std::int64_t i = z - offset;
        if (i < 0 || i >= static_cast<std::int64_t>(probs.size()))
            return 0.0;
        return probs[static_cast<std::size_t>(i)];
    }
    std::int64_t lo() const { return offset; }
    std::int64_t hi() const
    {
        return offset + static_cast<std::int64_t>(probs.size()) - 1;
    }
};

IntegerPmf convolve(IntegerPmf const& a, IntegerPmf const& b);
IntegerPmf convolve_power(IntegerPmf const& base, std::int64_t exponent);

//---------------------------------------------------------------------------//
/*!
 * Law of Z_n = sum_y xi_y N_n(y) given the walk, i.e. given the local times.
 */
struct ConditionalLaw
{
    IntegerPmf pmf;
    std::int64_t n{0};
    std::int64_t v{0};

    double prob(std::int64_t z) const { return pmf.at(z); }
};

inline constexpr std::int64_t default_convolution_budget = 1'000'000;

/*!
 * Exact conditional law by convolution. Sites sharing a multiplicity m are
 * grouped: the law of xi * m is raised to the group size by repeated
 * squaring before being folded into the result.
 *
 * Throws BudgetExceeded when n * max|xi| exceeds \c budget.
 */
ConditionalLaw
exact_conditional_pmf(OccupationField const& field,
                      LatticeDistribution const& scenery_law,
                      std::int64_t budget = default_convolution_budget);

inline constexpr std::int64_t default_quadrature_points = 1 << 14;

/*!
 * P[Z_n = 0 | S] by Fourier inversion over [-pi/d, pi/d]:
 *
 *   (d / 2 pi) int prod_y phi(t N(y)) dt * 1{total in dN*},
 *
 * where total is the field's visit count (n, or sum eps_k for a marked
 * field). The integrand is a trigonometric polynomial, so the uniform
 * midpoint rule is exact once the point count exceeds 2 n max|xi|; the
 * count is raised to that level automatically.
 */
double conditional_zero_fourier(OccupationField const& field,
                                LatticeDistribution const& scenery_law,
                                std::int64_t quadrature_points
                                = default_quadrature_points);

}  // namespace rwrs
