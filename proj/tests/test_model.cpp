#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <doctest.h>

#include "rwrs/core/error.hpp"
#include "rwrs/core/statistics.hpp"
#include "rwrs/model/engine.hpp"
#include "rwrs/model/scenery.hpp"
#include "rwrs/model/trajectory.hpp"

using namespace rwrs;

namespace
{
LatticeDistribution four_point()
{
    return LatticeDistribution::uniform({-3, -1, 1, 3}, LawKind::scenery);
}

// P(S_T = 0) for the oriented model with a simple vertical walk: sum over
// the number m of vertical moves, of which exactly half must go up.
double oriented_origin_prob(std::int64_t T, double delta)
{
    double total = 0;
    for (std::int64_t m = 0; m <= T; m += 2)
    {
        double ways = boost::math::binomial_coefficient<double>(unsigned(T), unsigned(m));
        double balanced = boost::math::binomial_coefficient<double>(unsigned(m),
                                                                    unsigned(m / 2));
        total += ways * std::pow(1 - delta, double(m)) * std::pow(delta, double(T - m))
                 * balanced * std::pow(0.5, double(m));
    }
    return total;
}
}  // namespace

TEST_CASE("scenery is a deterministic i.i.d. field")
{
    Scenery a(four_point(), 99), b(four_point(), 99), c(four_point(), 100);
    int differ = 0;
    for (std::int64_t y = -500; y <= 500; ++y)
    {
        REQUIRE(a.at(y) == b.at(y));
        differ += a.at(y) != c.at(y);
    }
    CHECK(differ > 500);

    constexpr std::int64_t sites = 40'000;
    std::map<std::int64_t, double> observed;
    double sum = 0, lag = 0;
    for (std::int64_t y = -sites / 2; y < sites / 2; ++y)
    {
        auto v = a.at(y);
        observed[v] += 1;
        sum += double(v);
        lag += double(v * a.at(y + 1));
    }
    REQUIRE(observed.size() == 4);
    double chi = 0;
    for (auto [v, o] : observed)
    {
        double e = double(sites) / 4;
        chi += (o - e) * (o - e) / e;
    }
    boost::math::chi_squared dist(3);
    CHECK(chi < boost::math::quantile(dist, 0.999));
    // mean 0, variance 5; neighbour products have variance 25
    CHECK(std::abs(sum / sites) <= 4 * std::sqrt(5.0 / sites));
    CHECK(std::abs(lag / sites) <= 4 * std::sqrt(25.0 / sites));

    SceneryCache cache(a);
    for (std::int64_t y : {5, -3, 1000, -1000, 0, 5})
        CHECK(cache.at(y) == a.at(y));

    auto pinned = Scenery::with_pinned(four_point(), 99, {{0, 7}});
    CHECK(pinned.at(0) == 7);
    CHECK(pinned.at(1) == a.at(1));
}

TEST_CASE("RWRS along a prescribed path")
{
    auto sc = Scenery::with_pinned(LatticeDistribution::rademacher(), 0,
                                   {{0, 1}, {1, -1}});
    std::vector<std::int64_t> path{0, 1, 0};
    auto t = rwrs_from_path(sc, path);
    CHECK(t.z == std::vector<std::int64_t>{1, 0, 1});
    CHECK(t.field.count(0) == 2);
    CHECK(t.field.count(1) == 1);
    CHECK(time_reversed(t) == std::vector<std::int64_t>{0, -1, 0, -1});

    std::ostringstream os;
    write_trajectory_csv(os, t);
    CHECK(os.str() == "k,S_k,eps_k,Z_k\n1,0,1,1\n2,1,1,0\n3,0,1,1\n");
}

TEST_CASE("oriented model along prescribed moves")
{
    auto sc = Scenery::with_pinned(LatticeDistribution::rademacher(), 0,
                                   {{0, 1}, {1, -1}});
    std::vector<std::uint8_t> eps{1, 0, 1};
    std::vector<std::int64_t> vertical{5, 1, -5};
    auto t = oriented_from_moves(sc, eps, vertical);
    CHECK(t.z == std::vector<std::int64_t>{1, 1, 0});
    CHECK(t.s == std::vector<std::int64_t>{0, 1, 1});
    CHECK(t.field.n() == 2);
    CHECK(t.field.count(0) == 1);
    CHECK(t.field.count(1) == 1);
}

TEST_CASE("simulated trajectories agree with the occupation field")
{
    auto law = four_point();
    for (auto model : {Model::rwrs, Model::oriented})
    {
        ModelSpec spec;
        spec.model = model;
        spec.scenery_law = law;
        spec.delta = 0.3;
        for (std::uint64_t i = 0; i < 20; ++i)
        {
            auto seeds = trial_seeds(spec, 1, i);
            Scenery sc(law, seeds.scenery_seed);
            auto t = simulate(spec, sc, 2000, seeds.walk);
            REQUIRE(t.steps() == 2000);
            std::int64_t z = 0, marked = 0;
            OccupationField partial;
            for (std::int64_t k = 0; k < t.steps(); ++k)
            {
                bool e = model == Model::rwrs || t.eps[std::size_t(k)];
                if (e)
                {
                    z += sc.at(t.s[std::size_t(k)]);
                    partial.advance(t.s[std::size_t(k)]);
                    ++marked;
                }
                REQUIRE(t.z[std::size_t(k)] == z);
                if (k % 400 == 399)
                {
                    // Z_k = sum_y xi_y N_k(y)
                    std::int64_t dot = 0;
                    for (auto [y, c] : partial.entries())
                        dot += sc.at(y) * c;
                    CHECK(dot == z);
                }
            }
            CHECK(t.field.n() == marked);
            std::int64_t dot = 0;
            for (auto [y, c] : t.field.entries())
                dot += sc.at(y) * c;
            CHECK(dot == t.z.back());

            // the streaming engine yields the same path
            auto again = trial_seeds(spec, 1, i);
            std::vector<std::int64_t> zs;
            run_trajectory(spec, sc, 2000, again.walk,
                           [&](std::int64_t, std::int64_t, std::int64_t zk, bool) {
                               zs.push_back(zk);
                               return true;
                           });
            CHECK(zs == t.z);
        }
    }
}

TEST_CASE("annealed variance equals sigma^2 E[V_T]")
{
    ModelSpec spec;
    spec.scenery_law = four_point();
    constexpr std::int64_t T = 1000;
    constexpr std::uint64_t trials = 20'000;
    SampleMoments z2, v, diff;
    for (std::uint64_t i = 0; i < trials; ++i)
    {
        OccupationField f;
        std::int64_t zt = 0;
        run_trial(spec, 2, i, T, [&](std::int64_t, std::int64_t s, std::int64_t z, bool) {
            f.advance(s);
            zt = z;
            return true;
        });
        z2.add(double(zt) * double(zt));
        v.add(double(f.v()));
        diff.add(double(zt) * double(zt) - 5.0 * double(f.v()));
    }
    CHECK(z2.mean() / v.mean() == doctest::Approx(5.0).epsilon(0.05));
    CHECK(std::abs(diff.mean()) <= 3 * diff.std_error());
}

TEST_CASE("oriented model with rare vertical moves")
{
    ModelSpec spec;
    spec.model = Model::oriented;
    spec.delta = 0.999;
    constexpr std::int64_t T = 100;
    constexpr std::uint64_t trials = 100'000;
    std::uint64_t at_origin = 0;
    for (std::uint64_t i = 0; i < trials; ++i)
    {
        std::int64_t last = 0;
        run_trial(spec, 3, i, T, [&](std::int64_t, std::int64_t s, std::int64_t, bool) {
            last = s;
            return true;
        });
        at_origin += last == 0;
    }
    double p = oriented_origin_prob(T, spec.delta);
    // no vertical move at all is only the leading term
    CHECK(p > std::pow(0.999, 100));
    double freq = double(at_origin) / trials;
    CHECK(std::abs(freq - p) <= 3 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("trial seeding")
{
    ModelSpec spec;
    auto a0 = trial_seeds(spec, 7, 0), a1 = trial_seeds(spec, 7, 1);
    CHECK(a0.scenery_seed != a1.scenery_seed);
    CHECK(a0.walk.next_u64() != a1.walk.next_u64());
    CHECK(trial_seeds(spec, 7, 0).scenery_seed == a0.scenery_seed);

    spec.scenery_mode = SceneryMode::quenched;
    spec.quenched_scenery_seed = 1234;
    CHECK(trial_seeds(spec, 7, 0).scenery_seed == 1234);
    CHECK(trial_seeds(spec, 8, 5).scenery_seed == 1234);
}

TEST_CASE("model names and validation")
{
    CHECK(parse_model("rwrs") == Model::rwrs);
    CHECK(parse_model("oriented") == Model::oriented);
    CHECK(to_string(Model::oriented) == "oriented");
    CHECK(parse_scenery_mode("quenched") == SceneryMode::quenched);
    CHECK(to_string(SceneryMode::annealed) == "annealed");
    CHECK_THROWS_AS(parse_model("lattice"), Error);
    CHECK_THROWS_AS(parse_scenery_mode("frozen"), Error);

    ModelSpec spec;
    spec.model = Model::oriented;
    spec.delta = 1.0;
    CHECK_THROWS_AS(spec.check(), Error);
    spec.delta = 0.5;
    CHECK_NOTHROW(spec.check());
    spec.scenery_law = LatticeDistribution::rademacher(LawKind::step);
    CHECK_THROWS_AS(spec.check(), Error);

    Scenery sc(LatticeDistribution::rademacher(), 0);
    RngStream rng(SeedSpec{0, 0});
    CHECK_THROWS_AS(simulate_rwrs(0, sc, LatticeDistribution::rademacher(LawKind::step), rng),
                    Error);
}
