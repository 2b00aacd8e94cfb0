#pragma once

#include <span>
#include <vector>

namespace rwrs
{
struct FitPoint
{
    double T{0};
    double estimate{0};
    double std_error{0};
};

/*!
 * Power-law fit estimate ~ e^intercept * T^slope.
 *
 * When every point carries a positive standard error the fit is weighted
 * least squares of log estimate on log T with weights (estimate / se)^2,
 * and slope_se follows from the weights. Otherwise ordinary least squares
 * is used with the residual standard error.
 */
struct ExponentFit
{
    std::vector<FitPoint> points;
    double slope{0};
    double slope_se{0};
    double intercept{0};
    bool weighted{false};
};

//! Throws DegenerateInput for < 3 points, repeated T or nonpositive values.
ExponentFit fit_exponent(std::span<FitPoint const> points);

}  // namespace rwrs
