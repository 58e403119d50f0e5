#ifndef ISOCENSUS_PARALLEL_HPP
#define ISOCENSUS_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace isocensus {

/* Worker count: hardware concurrency, capped by ISOGENY_CENSUS_THREADS. */
inline unsigned thread_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (char const * s = std::getenv("ISOGENY_CENSUS_THREADS")) {
        long cap = std::strtol(s, nullptr, 10);
        if (cap >= 1)
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

/* Split [0, n) into contiguous chunks, run f(begin, end) -> T on each, and
 * return the per-chunk results in chunk order.  The chunking depends only on
 * n, so reductions over the result are deterministic whatever the number of
 * threads. */
template <typename T, typename F>
std::vector<T> parallel_chunks(std::size_t n, F && f, std::size_t nchunks = 64)
{
    nchunks = std::max<std::size_t>(1, std::min(nchunks, n));
    std::vector<T> out(nchunks);
    std::vector<std::exception_ptr> errs(nchunks);
    auto work = [&](std::size_t c) {
        std::size_t b = n * c / nchunks, e = n * (c + 1) / nchunks;
        try {
            out[c] = f(b, e);
        } catch (...) {
            errs[c] = std::current_exception();
        }
    };
    unsigned nt = std::min<std::size_t>(thread_count(), nchunks);
    if (nt <= 1 || n == 0) {
        for (std::size_t c = 0; c < nchunks; c++)
            work(c);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nt; w++)
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < nchunks; c += nt)
                    work(c);
            });
        for (auto & t : pool)
            t.join();
    }
    for (auto & e : errs)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace isocensus

#endif
