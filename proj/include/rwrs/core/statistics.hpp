#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rwrs
{
//---------------------------------------------------------------------------//
//! Neumaier compensated summation.
class CompensatedSum
{
  public:
    void add(double x)
    {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    void merge(CompensatedSum const& other)
    {
        this->add(other.sum_);
        this->add(other.comp_);
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_{0};
    double comp_{0};
};

//---------------------------------------------------------------------------//
//! Count, sum and sum of squares of a sample; mergeable in a fixed order.
class SampleMoments
{
  public:
    void add(double x)
    {
        ++count_;
        sum_.add(x);
        sum_sq_.add(x * x);
    }

    void merge(SampleMoments const& other)
    {
        count_ += other.count_;
        sum_.merge(other.sum_);
        sum_sq_.merge(other.sum_sq_);
    }

    std::uint64_t count() const { return count_; }
    double mean() const;
    //! Unbiased sample variance (0 for fewer than two samples).
    double variance() const;
    //! sample std / sqrt(count)
    double std_error() const;

  private:
    std::uint64_t count_{0};
    CompensatedSum sum_;
    CompensatedSum sum_sq_;
};

//---------------------------------------------------------------------------//
//! Wilson score interval for a binomial proportion at normal quantile z.
std::pair<double, double>
wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

struct KsResult
{
    double statistic{0};
    double p_value{1};
};

//! Kolmogorov survival function Q(lambda) = 2 sum (-1)^{j-1} e^{-2 j^2 lambda^2}
double kolmogorov_q(double lambda);

/*!
 * Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
 * (Stephens' effective-size correction). Conservative for discrete data.
 */
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace rwrs
