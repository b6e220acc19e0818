#ifndef PLATEAU_PARALLEL_HPP
#define PLATEAU_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace plateau {

/// Run fn(i) for i in [0, total) on up to `threads` workers. Tasks must be
/// independent; callers index results by i, so output order never depends on
/// the thread count.
template <typename Fn>
void parallel_for(std::uint64_t total, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || total <= 1) {
        for (std::uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, total));
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= total || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace plateau

#endif // PLATEAU_PARALLEL_HPP
