#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <doctest.h>

#include "rwrs/core/error.hpp"
#include "rwrs/walk/excursion.hpp"
#include "rwrs/walk/hitting.hpp"
#include "rwrs/walk/occupation_field.hpp"
#include "rwrs/walk/walk.hpp"

using namespace rwrs;

namespace
{
struct Recount
{
    std::int64_t n = 0, n_star = 0, range = 0, v = 0;
    Int128 q3 = 0;
};

Recount recount(std::vector<std::int64_t> const& sites)
{
    std::map<std::int64_t, std::int64_t> c;
    for (auto s : sites)
        ++c[s];
    Recount r;
    r.n = std::int64_t(sites.size());
    r.range = std::int64_t(c.size());
    for (auto [site, k] : c)
    {
        r.n_star = std::max(r.n_star, k);
        r.v += k * k;
        r.q3 += Int128(k) * k * k;
    }
    return r;
}

//! Brute-force Hoelder statistic over a generous window of Z.
double holder_reference(std::map<std::int64_t, std::int64_t> const& counts,
                        double mu,
                        double theta)
{
    std::int64_t n = 0;
    for (auto [s, c] : counts)
        n += c;
    auto lo = counts.begin()->first - 10;
    auto hi = counts.rbegin()->first + 10;
    auto at = [&](std::int64_t y) {
        auto it = counts.find(y);
        return it == counts.end() ? 0.0 : double(it->second);
    };
    double limit = std::pow(double(n), theta);
    double best = 0;
    for (auto y = lo; y <= hi; ++y)
    {
        for (auto z = y + 1; z <= hi; ++z)
        {
            if (double(z - y) >= limit)
                break;
            best = std::max(best, std::abs(at(y) - at(z)) / std::pow(double(z - y), mu));
        }
    }
    return best;
}

}  // namespace

TEST_CASE("occupation field bookkeeping")
{
    std::vector<std::int64_t> visits{0, 1, 0};
    for (auto storage : {OccupationStorage::dense, OccupationStorage::sparse})
    {
        auto f = OccupationField::from_sites(visits, storage);
        CHECK(f.n() == 3);
        CHECK(f.count(0) == 2);
        CHECK(f.count(1) == 1);
        CHECK(f.count(7) == 0);
        CHECK(f.v() == 5);
        CHECK(f.range() == 2);
        CHECK(f.n_star() == 2);
        CHECK(f.q3() == 9);
        CHECK(f.min_site() == 0);
        CHECK(f.max_site() == 1);
    }
    std::vector<std::int64_t> one{0};
    auto g = OccupationField::from_sites(one);
    CHECK(g.v() == 1);
    CHECK(g.range() == 1);
    CHECK(g.n_star() == 1);

    std::vector<std::pair<std::int64_t, std::int64_t>> counts{{-3, 2}, {4, 1}};
    auto h = OccupationField::from_counts(counts);
    CHECK(h.n() == 3);
    CHECK(h.v() == 5);
    CHECK(h.min_site() == -3);
    CHECK(h.entries() == counts);
    CHECK(h.multiplicities() == std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}});
}

TEST_CASE("incremental statistics equal a from-scratch recount")
{
    RngStream rng(SeedSpec{11, 0});
    for (auto storage : {OccupationStorage::dense, OccupationStorage::sparse})
    {
        OccupationField f(storage);
        std::vector<std::int64_t> sites;
        std::int64_t prev_v = 0;
        Int128 prev_q3 = 0;
        for (int i = 0; i < 10'000; ++i)
        {
            // spread-out visits with both signs exercise dense regrowth
            auto site = std::int64_t(rng.next_u64() % 301) - 150
                        + (i % 1000 == 999 ? 5000 : 0);
            sites.push_back(site);
            f.advance(site);
            REQUIRE(f.v() >= prev_v);
            REQUIRE(f.q3() >= prev_q3);
            prev_v = f.v();
            prev_q3 = f.q3();
        }
        auto r = recount(sites);
        CHECK(f.n() == r.n);
        CHECK(f.n_star() == r.n_star);
        CHECK(f.range() == r.range);
        CHECK(f.v() == r.v);
        CHECK(f.q3() == r.q3);
        CHECK(f.power_sum(1) == f.n());
        CHECK(f.power_sum(2) == f.v());
        CHECK(f.power_sum(3) == f.q3());
        // structural inequalities
        CHECK(f.n_star() >= 1);
        CHECK(f.n_star() <= f.n());
        CHECK(f.range() * f.n_star() >= f.n());
        CHECK(f.v() <= f.n() * f.n_star());
        CHECK(Int128(f.n()) * f.n() <= Int128(f.range()) * f.v());
    }
}

TEST_CASE("128-bit rendering")
{
    CHECK(to_string(Int128(0)) == "0");
    CHECK(to_string(Int128(-42)) == "-42");
    Int128 big = Int128(1) << 100;
    CHECK(to_string(big) == "1267650600228229401496703205376");
}

TEST_CASE("simulate_walk")
{
    auto srw = LatticeDistribution::rademacher(LawKind::step);

    int plus = 0;
    constexpr int trials = 100'000;
    for (int i = 0; i < trials; ++i)
    {
        RngStream rng(SeedSpec{3, std::uint64_t(i)});
        auto p = simulate_walk(1, srw, rng);
        REQUIRE(p.positions.size() == 1);
        REQUIRE(std::abs(p.positions[0]) == 1);
        plus += p.positions[0] == 1;
    }
    double freq = double(plus) / trials;
    CHECK(std::abs(freq - 0.5) <= 3 * std::sqrt(0.25 / trials));

    // E[S_T^2] / T = sigma^2
    auto lazy = LatticeDistribution::validate({{-1, 0.25}, {0, 0.5}, {1, 0.25}},
                                              LawKind::step);
    double sum = 0;
    constexpr int walks = 4000;
    constexpr std::int64_t T = 10'000;
    for (int i = 0; i < walks; ++i)
    {
        RngStream rng(SeedSpec{4, std::uint64_t(i)});
        auto p = simulate_walk(T, lazy, rng, OccupationStorage::sparse);
        double s = double(p.positions.back());
        sum += s * s / double(T);
    }
    // Var(S_T^2 / T) ~ 2 sigma^4, so the 5% band is about 3.6 standard errors
    CHECK(sum / walks == doctest::Approx(0.5).epsilon(0.05));

    RngStream a(SeedSpec{8, 8}), b(SeedSpec{8, 8});
    auto pa = simulate_walk(500, srw, a);
    auto pb = simulate_walk(500, srw, b);
    CHECK(pa.positions == pb.positions);
    auto r = recount(pa.positions);
    CHECK(pa.field.v() == r.v);
    CHECK(pa.field.q3() == r.q3);
    for (std::size_t k = 1; k < pa.positions.size(); ++k)
        REQUIRE(std::abs(pa.positions[k] - pa.positions[k - 1]) == 1);
    CHECK(std::abs(pa.positions[0]) == 1);
}

TEST_CASE("holder statistic")
{
    std::vector<std::pair<std::int64_t, std::int64_t>> c1{{0, 2}, {1, 1}};
    CHECK(holder_statistic(OccupationField::from_counts(c1), 1.0, 1.0) == 2.0);
    std::vector<std::pair<std::int64_t, std::int64_t>> c2{{0, 5}};
    CHECK(holder_statistic(OccupationField::from_counts(c2), 1.0, 1.0) == 5.0);
    CHECK_THROWS_AS(holder_statistic(OccupationField{}, 1.0, 1.0), Error);
    CHECK_THROWS_AS(holder_statistic(OccupationField::from_counts(c2), 0.0, 1.0),
                    Error);

    auto srw = LatticeDistribution::rademacher(LawKind::step);
    for (std::uint64_t i = 0; i < 40; ++i)
    {
        RngStream rng(SeedSpec{12, i});
        auto p = simulate_walk(std::int64_t(20 + 7 * i), srw, rng);
        std::map<std::int64_t, std::int64_t> counts;
        for (auto s : p.positions)
            ++counts[s];
        for (double mu : {0.3, 0.5, 1.0})
        {
            for (double theta : {0.2, 0.5, 1.0})
            {
                CHECK(holder_statistic(p.field, mu, theta)
                      == doctest::Approx(holder_reference(counts, mu, theta)));
            }
        }
    }
}

TEST_CASE("excursion law")
{
    auto half = excursion_law(0.5);
    CHECK(half.pmf(0) == 0.5);
    CHECK(half.pmf(1) == 0.25);
    CHECK(half.pmf(4) == doctest::Approx(std::pow(0.5, 3) * 0.25));
    CHECK(half.pmf(-1) == 0.0);

    for (double p : {0.05, 0.3, 0.5, 0.9})
    {
        auto law = excursion_law(p);
        double total = 0, mean = 0, second = 0;
        for (std::int64_t l = 0; l < 5000; ++l)
        {
            double q = law.pmf(l);
            total += q;
            mean += double(l) * q;
            second += double(l * l) * q;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mean == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(law.variance() == doctest::Approx(second - 1).epsilon(1e-9));
        CHECK(law.mgf(0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(excursion_mgf(p, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        // series form of E[exp(t (1 - M))]
        for (double t : {-0.5 * std::log1p(-p), 0.1, 0.5})
        {
            double series = 0;
            for (std::int64_t l = 0; l < 20000; ++l)
                series += law.pmf(l) * std::exp(t * double(1 - l));
            CHECK(law.mgf(t) == doctest::Approx(series).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(excursion_law(0.0), Error);
    CHECK_THROWS_AS(excursion_law(1.0), Error);
    CHECK_THROWS_AS(excursion_mgf(0.5, std::log(0.5) - 0.1), Error);

    RngStream rng(SeedSpec{21, 0});
    double sum = 0, sum_sq = 0;
    constexpr int n = 1'000'000;
    for (int i = 0; i < n; ++i)
    {
        double m = double(half.sample(rng));
        sum += m;
        sum_sq += m * m;
    }
    double mean = sum / n;
    double se = std::sqrt((sum_sq / n - mean * mean) / n);
    CHECK(std::abs(mean - 1.0) <= 3 * se);
}

TEST_CASE("hitting probabilities of the simple random walk")
{
    auto srw = LatticeDistribution::rademacher(LawKind::step);
    CHECK(hit_prob(srw, 1, HitMethod::closed_form_srw).value == 0.5);
    CHECK(hit_prob(srw, 5, HitMethod::closed_form_srw).value == doctest::Approx(0.1));
    CHECK(hit_prob(srw, -5, HitMethod::closed_form_srw).value
          == doctest::Approx(0.1));
    CHECK_THROWS_AS(hit_prob(srw, 0, HitMethod::closed_form_srw), Error);

    auto lazy = LatticeDistribution::validate({{-1, 0.25}, {0, 0.5}, {1, 0.25}},
                                              LawKind::step);
    try
    {
        hit_prob(lazy, 1, HitMethod::closed_form_srw);
        FAIL("closed form accepted a lazy step law");
    }
    catch (Error const& e)
    {
        CHECK(e.code() == ErrorCode::method_unavailable);
    }

    HitOptions opt;
    opt.trials = 40'000;
    opt.max_steps = 1'000'000;
    opt.master_seed = 5;
    for (std::int64_t x : {1, 2, -3})
    {
        auto mc = hit_prob(srw, x, HitMethod::monte_carlo, opt);
        CHECK(mc.trials == opt.trials);
        CHECK(mc.censored_fraction() < 0.01);
        CHECK(std::abs(mc.value - 0.5 / double(std::abs(x))) <= 3 * mc.std_error);
    }
}

TEST_CASE("oriented hitting probability")
{
    CHECK(oriented_hit_prob(0.5, 0.5) == doctest::Approx(1.0 / 3));
    for (double delta : {0.1, 0.5, 0.9})
    {
        CHECK(oriented_hit_prob(1e-9, delta) / 1e-9 == doctest::Approx(1 / delta));
        for (double p : {0.01, 0.2, 0.5, 0.9})
        {
            double q = oriented_hit_prob(p, delta);
            CHECK(q >= p / (2 + delta));
            CHECK(q <= p / delta);
        }
    }
    CHECK_THROWS_AS(oriented_hit_prob(0.0, 0.5), Error);
    CHECK_THROWS_AS(oriented_hit_prob(0.5, 1.0), Error);
    CHECK(lazy_hit_prob(0.5, 0.5) == 0.25);

    // The closed form applies to the lazy vertical walk: with the SRW at
    // x = 1 and delta = 1/2 the lazy hitting probability is 1/4, so the
    // exact answer is (1/4) / (1/2 + 1/2) = 1/4. A two-state linear system
    // gives the same value: f0 = (f1 + f0) / 4, f1 = 1/2 + (f1 + f0) / 4.
    auto srw = LatticeDistribution::rademacher(LawKind::vertical);
    HitOptions opt;
    opt.trials = 100'000;
    opt.max_steps = 1'000'000;
    opt.master_seed = 17;
    auto mc = oriented_hit_prob_mc(srw, 1, 0.5, opt);
    double exact = oriented_hit_prob(lazy_hit_prob(0.5, 0.5), 0.5);
    CHECK(exact == doctest::Approx(0.25));
    CHECK(std::abs(mc.value - exact) <= 3 * mc.std_error);
    // and it is clearly not 1/3
    CHECK(std::abs(mc.value - 1.0 / 3) > 10 * mc.std_error);
}
