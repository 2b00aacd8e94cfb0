#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rwrs
{
using Int128 = __int128;

std::string to_string(Int128 value);

enum class OccupationStorage
{
    dense,  //!< growable array over [min_site, max_site]
    sparse,  //!< hash map keyed by site
};

//---------------------------------------------------------------------------//
/*!
 * Local times N(y) of a walk with incrementally maintained summaries.
 *
 * Each \c advance records one visit; the field keeps the total number of
 * visits n, the maximal local time N*, the range R (visited sites), the
 * self-intersection local time V = sum N(y)^2 and Q3 = sum N(y)^3 in exact
 * integer arithmetic. In the oriented model only marked visits are recorded,
 * so \c n() is then the number of horizontal moves rather than elapsed time.
 */
class OccupationField
{
  public:
    explicit OccupationField(OccupationStorage storage = OccupationStorage::dense)
        : storage_(storage)
    {
    }

    static OccupationField
    from_sites(std::span<std::int64_t const> sites,
               OccupationStorage storage = OccupationStorage::dense);

    //! Build from explicit (site, count) pairs; counts must be positive.
    static OccupationField
    from_counts(std::span<std::pair<std::int64_t, std::int64_t> const> counts,
                OccupationStorage storage = OccupationStorage::dense);

    void advance(std::int64_t site)
    {
        std::int64_t& c = this->slot(site);
        std::int64_t old = c++;
        if (old == 0)
        {
            ++range_;
            if (n_ == 0)
            {
                min_site_ = max_site_ = site;
            }
            else
            {
                min_site_ = site < min_site_ ? site : min_site_;
                max_site_ = site > max_site_ ? site : max_site_;
            }
        }
        ++n_;
        v_ += 2 * old + 1;
        q3_ += Int128(3) * old * old + 3 * old + 1;
        if (c > n_star_)
            n_star_ = c;
    }

    std::int64_t count(std::int64_t site) const;

    bool empty() const { return n_ == 0; }
    std::int64_t n() const { return n_; }
    std::int64_t n_star() const { return n_star_; }
    std::int64_t range() const { return range_; }
    std::int64_t v() const { return v_; }
    Int128 q3() const { return q3_; }
    std::int64_t min_site() const { return min_site_; }
    std::int64_t max_site() const { return max_site_; }
    OccupationStorage storage() const { return storage_; }

    //! Nonzero (site, count) pairs sorted by site.
    std::vector<std::pair<std::int64_t, std::int64_t>> entries() const;

    //! count value -> number of sites carrying it
    std::map<std::int64_t, std::int64_t> multiplicities() const;

    //! Q^(p) recomputed from the counts.
    Int128 power_sum(int p) const;

  private:
    std::int64_t& slot(std::int64_t site)
    {
        if (storage_ == OccupationStorage::sparse)
            return sparse_[site];
        std::int64_t idx = site - origin_;
        if (idx < 0 || idx >= static_cast<std::int64_t>(dense_.size()))
        {
            this->grow(site);
            idx = site - origin_;
        }
        return dense_[static_cast<std::size_t>(idx)];
    }

    void grow(std::int64_t site);

    OccupationStorage storage_;
    std::vector<std::int64_t> dense_;
    std::int64_t origin_{0};
    std::unordered_map<std::int64_t, std::int64_t> sparse_;

    std::int64_t n_{0};
    std::int64_t n_star_{0};
    std::int64_t range_{0};
    std::int64_t v_{0};
    Int128 q3_{0};
    std::int64_t min_site_{0};
    std::int64_t max_site_{0};
};

}  // namespace rwrs
