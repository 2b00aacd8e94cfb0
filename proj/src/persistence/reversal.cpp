#include "rwrs/persistence/reversal.hpp"

#include <algorithm>
#include <array>

#include "rwrs/core/error.hpp"
#include "rwrs/core/parallel.hpp"
#include "rwrs/model/trajectory.hpp"

namespace rwrs
{
namespace
{
constexpr std::size_t n_functionals = 4;

using Row = std::array<double, n_functionals>;

//! max, then the marginals at k = 1, T/2, T of x_1..x_T.
Row functionals(std::span<std::int64_t const> x)
{
    auto T = x.size();
    return {double(*std::max_element(x.begin(), x.end())),
            double(x[0]),
            double(x[T / 2 - 1]),
            double(x[T - 1])};
}

enum class Transform
{
    none,
    reverse,
    shift,  //!< Z_{k+m} - Z_m
};

std::vector<Row> sample_rows(ModelSpec const& spec,
                             std::int64_t T,
                             std::uint64_t first,
                             std::uint64_t samples,
                             Transform transform,
                             std::int64_t shift,
                             RunOptions const& options)
{
    std::int64_t const steps = transform == Transform::shift ? T + shift : T;
    auto chunks = run_chunks<std::vector<Row>>(
        samples, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<Row> rows;
            std::vector<std::int64_t> z;
            for (std::uint64_t i = begin; i < end; ++i)
            {
                z.clear();
                run_trial(spec,
                          options.master_seed,
                          first + i,
                          steps,
                          [&](std::int64_t, std::int64_t, std::int64_t zk, bool) {
                              z.push_back(zk);
                              return true;
                          });
                if (transform == Transform::reverse)
                {
                    auto r = time_reversed(z);
                    rows.push_back(
                        functionals(std::span<std::int64_t const>(r).subspan(1)));
                }
                else if (transform == Transform::shift)
                {
                    std::int64_t base = shift > 0 ? z[std::size_t(shift - 1)] : 0;
                    std::vector<std::int64_t> d(z.begin() + shift, z.end());
                    for (auto& x : d)
                        x -= base;
                    rows.push_back(functionals(d));
                }
                else
                {
                    rows.push_back(functionals(z));
                }
            }
            return rows;
        });
    std::vector<Row> out;
    out.reserve(samples);
    for (auto& c : chunks)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::vector<ReversalTest> compare(ModelSpec const& spec,
                                  std::int64_t T,
                                  std::vector<Row> const& original,
                                  std::vector<Row> const& reversed,
                                  double alpha)
{
    static char const* const names[n_functionals]
        = {"max", "Z_1", "Z_{T/2}", "Z_T"};
    std::vector<ReversalTest> out;
    for (std::size_t f = 0; f < n_functionals; ++f)
    {
        std::vector<double> a, b;
        a.reserve(original.size());
        b.reserve(reversed.size());
        for (auto const& r : original)
            a.push_back(r[f]);
        for (auto const& r : reversed)
            b.push_back(r[f]);
        ReversalTest t;
        t.model = spec.model;
        t.T = T;
        t.functional = names[f];
        t.ks = ks_two_sample(std::move(a), std::move(b));
        t.rejected = t.ks.p_value < alpha;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<ReversalTest> reversal_tests(ModelSpec const& spec,
                                         std::int64_t T,
                                         std::uint64_t samples,
                                         double alpha,
                                         RunOptions const& options)
{
    spec.check();
    if (T < 2 || samples == 0)
        throw Error(ErrorCode::domain_error, "need T >= 2 and samples >= 1");
    auto original = sample_rows(spec, T, 0, samples, Transform::none, 0, options);
    auto reversed
        = sample_rows(spec, T, samples, samples, Transform::reverse, 0, options);
    return compare(spec, T, original, reversed, alpha);
}

std::vector<ReversalTest> stationarity_tests(ModelSpec const& spec,
                                             std::int64_t T,
                                             std::int64_t shift,
                                             std::uint64_t samples,
                                             double alpha,
                                             RunOptions const& options)
{
    spec.check();
    if (T < 2 || shift < 0 || samples == 0)
        throw Error(ErrorCode::domain_error,
                    "need T >= 2, shift >= 0 and samples >= 1");
    auto original = sample_rows(spec, T, 0, samples, Transform::none, 0, options);
    auto shifted
        = sample_rows(spec, T, samples, samples, Transform::shift, shift, options);
    return compare(spec, T, original, shifted, alpha);
}

ReversalBattery reversal_battery(std::span<ModelSpec const> specs,
                                 std::span<std::int64_t const> horizons,
                                 std::uint64_t samples,
                                 double alpha,
                                 RunOptions const& options)
{
    ReversalBattery out;
    for (auto const& spec : specs)
    {
        for (auto T : horizons)
        {
            auto tests = reversal_tests(spec, T, samples, alpha, options);
            out.tests.insert(out.tests.end(), tests.begin(), tests.end());
        }
    }
    out.rejections = std::size_t(std::count_if(
        out.tests.begin(), out.tests.end(), [](auto const& t) {
            return t.rejected;
        }));
    out.allowance = (out.tests.size() + 19) / 20;
    out.passed = out.rejections <= out.allowance;
    return out;
}

}  // namespace rwrs
