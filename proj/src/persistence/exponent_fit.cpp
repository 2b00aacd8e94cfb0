#include "rwrs/persistence/exponent_fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rwrs/core/error.hpp"
#include "rwrs/core/statistics.hpp"

namespace rwrs
{
ExponentFit fit_exponent(std::span<FitPoint const> points)
{
    if (points.size() < 3)
        throw Error(ErrorCode::degenerate_input, "need at least 3 points");
    std::set<double> seen;
    for (auto const& p : points)
    {
        if (!(p.T > 0) || !(p.estimate > 0))
            throw Error(ErrorCode::degenerate_input,
                        "T and estimates must be positive");
        if (!seen.insert(p.T).second)
            throw Error(ErrorCode::degenerate_input, "repeated T value");
    }

    ExponentFit fit;
    fit.points.assign(points.begin(), points.end());
    fit.weighted = std::all_of(points.begin(), points.end(), [](auto const& p) {
        return p.std_error > 0;
    });

    std::vector<double> x, y, w;
    for (auto const& p : points)
    {
        x.push_back(std::log(p.T));
        y.push_back(std::log(p.estimate));
        double rel = p.std_error / p.estimate;
        w.push_back(fit.weighted ? 1 / (rel * rel) : 1.0);
    }

    CompensatedSum sw, swx, swy;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sw.add(w[i]);
        swx.add(w[i] * x[i]);
        swy.add(w[i] * y[i]);
    }
    double const xbar = swx.value() / sw.value();
    double const ybar = swy.value() / sw.value();
    CompensatedSum sxx, sxy;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx.add(w[i] * (x[i] - xbar) * (x[i] - xbar));
        sxy.add(w[i] * (x[i] - xbar) * (y[i] - ybar));
    }
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = ybar - fit.slope * xbar;

    if (fit.weighted)
    {
        fit.slope_se = std::sqrt(1 / sxx.value());
    }
    else
    {
        CompensatedSum rss;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            double r = y[i] - fit.intercept - fit.slope * x[i];
            rss.add(r * r);
        }
        double dof = double(x.size()) - 2;
        fit.slope_se = std::sqrt(rss.value() / dof / sxx.value());
    }
    return fit;
}

}  // namespace rwrs
