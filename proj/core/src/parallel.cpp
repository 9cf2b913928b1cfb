#include "tgraph/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "tgraph/errors.hpp"

namespace tgraph {

namespace {
std::atomic<int> g_threads{0};
}

int max_threads() {
    const int n = g_threads.load();
    if (n > 0) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_max_threads(int n) {
    if (n < 1) throw DomainError("thread count must be at least 1");
    g_threads.store(n);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads) {
    const int t = static_cast<int>(std::min<std::size_t>(n, threads > 0 ? threads : max_threads()));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace tgraph
