#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace rwrs
{
//---------------------------------------------------------------------------//
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/*!
 * Philox4x32 with 10 rounds (Salmon et al., "Parallel random numbers: as
 * easy as 1, 2, 3", SC11). A keyed bijection on 128-bit counters.
 */
constexpr PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key)
{
    constexpr std::uint32_t m0 = 0xD2511F53u;
    constexpr std::uint32_t m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u;
    constexpr std::uint32_t w1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round)
    {
        if (round > 0)
        {
            key[0] += w0;
            key[1] += w1;
        }
        std::uint64_t p0 = std::uint64_t(m0) * ctr[0];
        std::uint64_t p1 = std::uint64_t(m1) * ctr[2];
        ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
               std::uint32_t(p1),
               std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
               std::uint32_t(p0)};
    }
    return ctr;
}

//---------------------------------------------------------------------------//
//! Identifies one reproducible random stream.
struct SeedSpec
{
    std::uint64_t master_seed{0};
    std::uint64_t stream_id{0};
};

//---------------------------------------------------------------------------//
/*!
 * Random stream keyed by the master seed, with the stream id in the upper
 * half of the Philox counter and the block index in the lower half.
 *
 * Satisfies UniformRandomBitGenerator. Each Philox block yields two 64-bit
 * words; the stream is a pure function of its SeedSpec.
 */
class RngStream
{
  public:
    using result_type = std::uint64_t;

    explicit RngStream(SeedSpec seed)
        : key_{std::uint32_t(seed.master_seed),
               std::uint32_t(seed.master_seed >> 32)}
        , stream_lo_(std::uint32_t(seed.stream_id))
        , stream_hi_(std::uint32_t(seed.stream_id >> 32))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() { return this->next_u64(); }

    std::uint64_t next_u64()
    {
        if (buffered_ == 0)
            this->refill();
        return buffer_[--buffered_];
    }

    //! Uniform double in [0, 1) with 53 random bits.
    double uniform() { return double(this->next_u64() >> 11) * 0x1.0p-53; }

    //! Uniform double in (0, 1].
    double uniform_pos() { return 1.0 - this->uniform(); }

    std::uint64_t blocks_used() const { return block_; }

  private:
    void refill()
    {
        auto out = philox4x32_10({std::uint32_t(block_),
                                  std::uint32_t(block_ >> 32),
                                  stream_lo_,
                                  stream_hi_},
                                 key_);
        ++block_;
        // Reverse order so the first word handed out is out[0..1].
        buffer_[1] = (std::uint64_t(out[1]) << 32) | out[0];
        buffer_[0] = (std::uint64_t(out[3]) << 32) | out[2];
        buffered_ = 2;
    }

    PhiloxKey key_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint64_t block_{0};
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_{0};
};

inline RngStream derive_stream(SeedSpec seed)
{
    return RngStream(seed);
}

//! Single 64-bit word addressed by (key, a, b, tag), stateless.
inline std::uint64_t
hash_draw(std::uint64_t key, std::uint64_t a, std::uint32_t tag)
{
    auto out = philox4x32_10(
        {std::uint32_t(a), std::uint32_t(a >> 32), 0u, tag},
        {std::uint32_t(key), std::uint32_t(key >> 32)});
    return (std::uint64_t(out[1]) << 32) | out[0];
}

//! 64-bit threshold t with P(u < t) = p for a uniform 64-bit u.
std::uint64_t probability_threshold(double p);

}  // namespace rwrs
