#include "rwrs/model/scenery.hpp"

#include <algorithm>

#include "rwrs/core/error.hpp"

namespace rwrs
{
Scenery::Scenery(LatticeDistribution law, std::uint64_t seed)
    : law_(std::make_shared<LatticeDistribution const>(std::move(law)))
    , seed_(seed)
{
    if (law_->kind() != LawKind::scenery)
        throw Error(ErrorCode::domain_error, "scenery needs a scenery law");
}

Scenery Scenery::with_pinned(LatticeDistribution law,
                             std::uint64_t seed,
                             std::map<std::int64_t, std::int64_t> pinned)
{
    Scenery s(std::move(law), seed);
    s.pinned_ = std::make_shared<std::map<std::int64_t, std::int64_t> const>(
        std::move(pinned));
    return s;
}

void SceneryCache::grow(std::int64_t site)
{
    if (values_.empty())
    {
        values_.assign(64, unset);
        origin_ = site - 32;
        return;
    }
    std::int64_t lo = origin_;
    std::int64_t hi = origin_ + static_cast<std::int64_t>(values_.size());
    std::int64_t new_lo = lo;
    std::int64_t new_hi = hi;
    while (site < new_lo)
        new_lo -= new_hi - new_lo;
    while (site >= new_hi)
        new_hi += new_hi - new_lo;
    std::vector<std::int64_t> next(static_cast<std::size_t>(new_hi - new_lo),
                                   unset);
    std::copy(values_.begin(), values_.end(), next.begin() + (lo - new_lo));
    values_ = std::move(next);
    origin_ = new_lo;
}

}  // namespace rwrs
