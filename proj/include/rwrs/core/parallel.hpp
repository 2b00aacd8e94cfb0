#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rwrs
{
//---------------------------------------------------------------------------//
//! Trials per work unit handed to a worker.
inline constexpr std::uint64_t default_chunk_size = 1024;

/*!
 * Run \c fn over the trial index range [0, n) split into fixed chunks.
 *
 * Chunks are claimed dynamically by \c workers threads but each result is
 * stored at its chunk index, so the returned vector (and any in-order
 * reduction over it) does not depend on the worker count or scheduling.
 * The first exception thrown by any chunk is rethrown on the caller.
 */
template<class Result, class Fn>
std::vector<Result> run_chunks(std::uint64_t n,
                               unsigned workers,
                               Fn&& fn,
                               std::uint64_t chunk_size = default_chunk_size)
{
    std::uint64_t const n_chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<Result> results(n_chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        while (true)
        {
            std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks)
                return;
            std::uint64_t begin = c * chunk_size;
            std::uint64_t end = std::min(n, begin + chunk_size);
            try
            {
                results[c] = fn(begin, end);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(n_chunks);
            }
        }
    };

    unsigned const n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1u, workers), n_chunks));
    if (n_threads <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i)
            pool.emplace_back(work);
    }
    if (error)
        std::rethrow_exception(error);
    return results;
}

}  // namespace rwrs
