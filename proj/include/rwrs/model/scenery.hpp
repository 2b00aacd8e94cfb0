#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <vector>

#include "rwrs/core/lattice_distribution.hpp"
#include "rwrs/core/rng.hpp"

namespace rwrs
{
//---------------------------------------------------------------------------//
/*!
 * I.i.d. integer field xi_y indexed by y in Z, generated on demand.
 *
 * The value at a site is a pure function of (seed, site): a Philox draw
 * addressed by the site, mapped through the law's inverse CDF. Nothing is
 * stored, so a Scenery is immutable and may be shared across threads
 * (quenched runs). Pinned values override the generated ones; they exist to
 * build hand-checkable unit cases.
 */
class Scenery
{
  public:
    Scenery(LatticeDistribution law, std::uint64_t seed);

    //! Scenery whose listed sites take fixed values.
    static Scenery with_pinned(LatticeDistribution law,
                               std::uint64_t seed,
                               std::map<std::int64_t, std::int64_t> pinned);

    std::int64_t at(std::int64_t site) const
    {
        if (pinned_ && !pinned_->empty())
        {
            auto it = pinned_->find(site);
            if (it != pinned_->end())
                return it->second;
        }
        return law_->sample(
            hash_draw(seed_, static_cast<std::uint64_t>(site), scenery_tag));
    }

    LatticeDistribution const& law() const { return *law_; }
    std::uint64_t seed() const { return seed_; }

  private:
    static constexpr std::uint32_t scenery_tag = 0x5ce7e41du;

    std::shared_ptr<LatticeDistribution const> law_;
    std::uint64_t seed_;
    std::shared_ptr<std::map<std::int64_t, std::int64_t> const> pinned_;
};

inline std::int64_t scenery_at(Scenery const& scenery, std::int64_t site)
{
    return scenery.at(site);
}

//---------------------------------------------------------------------------//
/*!
 * Per-trajectory memo of scenery values over the visited window.
 *
 * Walks revisit each site many times, so caching the window avoids repeated
 * Philox evaluations. Single writer; one cache per trial.
 */
class SceneryCache
{
  public:
    explicit SceneryCache(Scenery const& scenery) : scenery_(&scenery) {}

    std::int64_t at(std::int64_t site)
    {
        std::int64_t idx = site - origin_;
        if (idx < 0 || idx >= static_cast<std::int64_t>(values_.size()))
        {
            this->grow(site);
            idx = site - origin_;
        }
        std::int64_t& v = values_[static_cast<std::size_t>(idx)];
        if (v == unset)
            v = scenery_->at(site);
        return v;
    }

  private:
    static constexpr std::int64_t unset = std::numeric_limits<std::int64_t>::min();

    void grow(std::int64_t site);

    Scenery const* scenery_;
    std::vector<std::int64_t> values_;
    std::int64_t origin_{0};
};

}  // namespace rwrs
