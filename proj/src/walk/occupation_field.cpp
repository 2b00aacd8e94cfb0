#include "rwrs/walk/occupation_field.hpp"

#include <algorithm>

#include "rwrs/core/error.hpp"

namespace rwrs
{
std::string to_string(Int128 value)
{
    if (value == 0)
        return "0";
    bool neg = value < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(value)
                                : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag > 0)
    {
        digits.push_back(static_cast<char>('0' + int(mag % 10)));
        mag /= 10;
    }
    if (neg)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

OccupationField OccupationField::from_sites(std::span<std::int64_t const> sites,
                                            OccupationStorage storage)
{
    OccupationField field(storage);
    for (auto s : sites)
        field.advance(s);
    return field;
}

OccupationField OccupationField::from_counts(
    std::span<std::pair<std::int64_t, std::int64_t> const> counts,
    OccupationStorage storage)
{
    OccupationField field(storage);
    for (auto [site, c] : counts)
    {
        if (c <= 0)
            throw Error(ErrorCode::domain_error, "counts must be positive");
        for (std::int64_t i = 0; i < c; ++i)
            field.advance(site);
    }
    return field;
}

void OccupationField::grow(std::int64_t site)
{
    if (dense_.empty())
    {
        dense_.assign(64, 0);
        origin_ = site - 32;
        return;
    }
    std::int64_t lo = origin_;
    std::int64_t hi = origin_ + static_cast<std::int64_t>(dense_.size());
    auto size = static_cast<std::int64_t>(dense_.size());
    std::int64_t new_lo = lo;
    std::int64_t new_hi = hi;
    while (site < new_lo)
        new_lo -= std::max<std::int64_t>(size, new_hi - new_lo);
    while (site >= new_hi)
        new_hi += std::max<std::int64_t>(size, new_hi - new_lo);

    std::vector<std::int64_t> next(static_cast<std::size_t>(new_hi - new_lo), 0);
    std::copy(dense_.begin(), dense_.end(), next.begin() + (lo - new_lo));
    dense_ = std::move(next);
    origin_ = new_lo;
}

std::int64_t OccupationField::count(std::int64_t site) const
{
    if (storage_ == OccupationStorage::sparse)
    {
        auto it = sparse_.find(site);
        return it == sparse_.end() ? 0 : it->second;
    }
    std::int64_t idx = site - origin_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(dense_.size()))
        return 0;
    return dense_[static_cast<std::size_t>(idx)];
}

std::vector<std::pair<std::int64_t, std::int64_t>>
OccupationField::entries() const
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(range_));
    if (storage_ == OccupationStorage::sparse)
    {
        for (auto [site, c] : sparse_)
        {
            if (c > 0)
                out.emplace_back(site, c);
        }
        std::sort(out.begin(), out.end());
    }
    else
    {
        for (std::size_t i = 0; i < dense_.size(); ++i)
        {
            if (dense_[i] > 0)
                out.emplace_back(origin_ + static_cast<std::int64_t>(i), dense_[i]);
        }
    }
    return out;
}

std::map<std::int64_t, std::int64_t> OccupationField::multiplicities() const
{
    std::map<std::int64_t, std::int64_t> out;
    for (auto [site, c] : this->entries())
        ++out[c];
    return out;
}

Int128 OccupationField::power_sum(int p) const
{
    Int128 total = 0;
    for (auto [site, c] : this->entries())
    {
        Int128 term = 1;
        for (int i = 0; i < p; ++i)
            term *= c;
        total += term;
    }
    return total;
}

}  // namespace rwrs
