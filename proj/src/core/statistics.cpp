#include "rwrs/core/statistics.hpp"

#include <algorithm>

#include "rwrs/core/error.hpp"

namespace rwrs
{
double SampleMoments::mean() const
{
    return count_ ? sum_.value() / static_cast<double>(count_) : 0.0;
}

double SampleMoments::variance() const
{
    if (count_ < 2)
        return 0.0;
    auto n = static_cast<double>(count_);
    double m = this->mean();
    double var = (sum_sq_.value() - n * m * m) / (n - 1);
    return var > 0 ? var : 0.0;
}

double SampleMoments::std_error() const
{
    return count_ ? std::sqrt(this->variance() / static_cast<double>(count_))
                  : 0.0;
}

std::pair<double, double>
wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0)
        return {0.0, 1.0};
    auto n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double kolmogorov_q(double lambda)
{
    if (lambda < 1e-3)
        return 1.0;
    double sum = 0;
    double sign = 1;
    for (int j = 1; j <= 200; ++j)
    {
        double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum))
            break;
        sign = -sign;
    }
    return std::clamp(2 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    if (a.empty() || b.empty())
        throw Error(ErrorCode::degenerate_input, "KS test needs two samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto const na = static_cast<double>(a.size());
    auto const nb = static_cast<double>(b.size());

    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0;
    while (i < a.size() && j < b.size())
    {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::abs(double(i) / na - double(j) / nb));
    }

    double en = std::sqrt(na * nb / (na + nb));
    KsResult r;
    r.statistic = d;
    r.p_value = kolmogorov_q((en + 0.12 + 0.11 / en) * d);
    return r;
}

}  // namespace rwrs
