#include "rwrs/persistence/estimators.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "rwrs/core/error.hpp"
#include "rwrs/core/parallel.hpp"
#include "rwrs/core/statistics.hpp"
#include "rwrs/walk/occupation_field.hpp"

namespace rwrs
{
namespace
{
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_positive(std::int64_t T, std::uint64_t trials, bool allow_zero_T)
{
    if (T < 0 || (T == 0 && !allow_zero_T))
        throw Error(ErrorCode::domain_error, "horizon must be positive");
    if (trials == 0)
        throw Error(ErrorCode::domain_error, "need at least one trial");
}

EstimateReport proportion_report(std::uint64_t successes,
                                 std::uint64_t trials,
                                 RunOptions const& options)
{
    EstimateReport r;
    r.trials = trials;
    r.master_seed = options.master_seed;
    r.estimate = double(successes) / double(trials);
    r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / double(trials));
    std::tie(r.ci_lo, r.ci_hi) = wilson_interval(successes, trials);
    return r;
}

EstimateReport mean_report(SampleMoments const& m, RunOptions const& options)
{
    EstimateReport r;
    r.trials = m.count();
    r.master_seed = options.master_seed;
    r.estimate = m.mean();
    r.std_error = m.std_error();
    r.ci_lo = r.estimate - 1.96 * r.std_error;
    r.ci_hi = r.estimate + 1.96 * r.std_error;
    return r;
}

//! Mean of f(trial index) over [0, trials), reduced in chunk order.
template<class F>
SampleMoments
collect(std::uint64_t trials, RunOptions const& options, F&& per_trial)
{
    auto chunks = run_chunks<SampleMoments>(
        trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            SampleMoments m;
            for (std::uint64_t i = begin; i < end; ++i)
                m.add(per_trial(i));
            return m;
        });
    SampleMoments total;
    for (auto const& c : chunks)
        total.merge(c);
    return total;
}

// e^{-j} for j < 1024; smaller values underflow to zero anyway
std::array<double, 1024> const& neg_exp_table()
{
    static auto const table = [] {
        std::array<double, 1024> t{};
        for (std::size_t j = 0; j < t.size(); ++j)
            t[j] = std::exp(-double(j));
        return t;
    }();
    return table;
}

inline double neg_exp(std::int64_t j)
{
    auto const& t = neg_exp_table();
    return j < std::int64_t(t.size()) ? t[std::size_t(j)] : 0.0;
}

}  // namespace

//---------------------------------------------------------------------------//
std::vector<EstimateReport>
persistence_curve(ModelSpec const& spec,
                  std::span<std::int64_t const> horizons,
                  std::uint64_t trials,
                  std::int64_t threshold,
                  RunOptions const& options)
{
    spec.check();
    if (horizons.empty())
        return {};
    for (std::size_t i = 0; i < horizons.size(); ++i)
    {
        require_positive(horizons[i], trials, false);
        if (i > 0 && horizons[i] <= horizons[i - 1])
            throw Error(ErrorCode::domain_error,
                        "horizons must be strictly increasing");
    }
    auto const start = Clock::now();
    std::int64_t const t_max = horizons.back();

    using Counts = std::vector<std::uint64_t>;
    auto chunks = run_chunks<Counts>(
        trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            Counts survived(horizons.size(), 0);
            for (std::uint64_t i = begin; i < end; ++i)
            {
                std::int64_t exit_time = t_max + 1;
                run_trial(spec,
                          options.master_seed,
                          i,
                          t_max,
                          [&](std::int64_t k, std::int64_t, std::int64_t z, bool) {
                              if (z > threshold)
                              {
                                  exit_time = k;
                                  return false;
                              }
                              return true;
                          });
                for (std::size_t h = 0; h < horizons.size(); ++h)
                    survived[h] += exit_time > horizons[h];
            }
            return survived;
        });

    Counts total(horizons.size(), 0);
    for (auto const& c : chunks)
        for (std::size_t h = 0; h < total.size(); ++h)
            total[h] += c[h];

    double const elapsed = seconds_since(start);
    std::vector<EstimateReport> out;
    for (auto s : total)
    {
        out.push_back(proportion_report(s, trials, options));
        out.back().wall_time_s = elapsed;
    }
    return out;
}

EstimateReport estimate_persistence(ModelSpec const& spec,
                                    std::int64_t T,
                                    std::uint64_t trials,
                                    std::int64_t threshold,
                                    RunOptions const& options)
{
    std::int64_t horizon[] = {T};
    return persistence_curve(spec, horizon, trials, threshold, options).front();
}

//---------------------------------------------------------------------------//
ExpFunctionalPair estimate_exp_functionals(ModelSpec const& spec,
                                           std::int64_t T,
                                           std::uint64_t trials,
                                           RunOptions const& options)
{
    spec.check();
    require_positive(T, trials, true);
    auto const start = Clock::now();
    constexpr std::int64_t cutoff = 50;

    struct Pair
    {
        SampleMoments zero;
        SampleMoments one;
    };
    auto chunks = run_chunks<Pair>(
        trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            Pair p;
            for (std::uint64_t i = begin; i < end; ++i)
            {
                if (T == 0)
                {
                    // Only Z_0 = 0 contributes; the sum from 1 is empty.
                    p.zero.add(1.0);
                    p.one.add(0.0);
                    continue;
                }
                // sum_{l=1}^k e^{Z_l} = e^M * s
                std::int64_t m = 0;
                double s = 0;
                run_trial(spec,
                          options.master_seed,
                          i,
                          T,
                          [&](std::int64_t k, std::int64_t, std::int64_t z, bool) {
                              if (k == 1)
                              {
                                  m = z;
                                  s = 1;
                              }
                              else if (z > m)
                              {
                                  s = s * neg_exp(z - m) + 1;
                                  m = z;
                              }
                              else
                              {
                                  s += neg_exp(m - z);
                              }
                              return m <= cutoff;
                          });
                double sum_one = std::exp(double(m)) * s;
                p.zero.add(1 / (1 + sum_one));
                p.one.add(1 / sum_one);
            }
            return p;
        });

    Pair total;
    for (auto const& c : chunks)
    {
        total.zero.merge(c.zero);
        total.one.merge(c.one);
    }
    double const elapsed = seconds_since(start);
    ExpFunctionalPair out{mean_report(total.zero, options),
                          mean_report(total.one, options)};
    out.from_zero.wall_time_s = out.from_one.wall_time_s = elapsed;
    return out;
}

EstimateReport estimate_exp_functional(ModelSpec const& spec,
                                       std::int64_t T,
                                       std::uint64_t trials,
                                       int start,
                                       RunOptions const& options)
{
    if (start != 0 && start != 1)
        throw Error(ErrorCode::domain_error, "start must be 0 or 1");
    auto pair = estimate_exp_functionals(spec, T, trials, options);
    return start == 0 ? pair.from_zero : pair.from_one;
}

//---------------------------------------------------------------------------//
EstimateReport estimate_kappa(ModelSpec const& spec,
                              std::int64_t T,
                              std::uint64_t trials,
                              RunOptions const& options)
{
    spec.check();
    require_positive(T, trials, false);
    auto const start = Clock::now();
    double const scale = std::pow(double(T), 0.75);
    auto m = collect(trials, options, [&](std::uint64_t i) {
        std::int64_t best = 0;
        run_trial(spec,
                  options.master_seed,
                  i,
                  T,
                  [&](std::int64_t, std::int64_t, std::int64_t z, bool) {
                      best = std::max(best, z);
                      return true;
                  });
        return double(best) / scale;
    });
    auto r = mean_report(m, options);
    r.wall_time_s = seconds_since(start);
    return r;
}

EstimateReport estimate_v_scaling(ModelSpec const& spec,
                                  std::int64_t T,
                                  std::uint64_t trials,
                                  RunOptions const& options)
{
    spec.check();
    require_positive(T, trials, false);
    auto const start = Clock::now();
    double const scale = std::pow(double(T), 1.5);
    auto m = collect(trials, options, [&](std::uint64_t i) {
        OccupationField field;
        run_trial(spec,
                  options.master_seed,
                  i,
                  T,
                  [&](std::int64_t, std::int64_t s, std::int64_t, bool marked) {
                      if (marked)
                          field.advance(s);
                      return true;
                  });
        return double(field.v()) / scale;
    });
    auto r = mean_report(m, options);
    r.wall_time_s = seconds_since(start);
    return r;
}

double k_delta(double delta)
{
    if (!(delta > 0 && delta < 1))
        throw Error(ErrorCode::domain_error, "delta must lie in (0, 1)");
    return delta / std::pow(1 - delta, 0.25);
}

}  // namespace rwrs
