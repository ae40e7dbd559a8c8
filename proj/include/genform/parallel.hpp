#pragma once

// A small fixed-size worker pool for data-parallel loops over index ranges.
// Work is split into contiguous chunks; chunk boundaries depend only on the
// range size and worker count, and every use in this project has
// independent per-index work, so results never depend on the schedule.

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace genform {

class ThreadPool {
public:
    // workers = total parallel lanes including the calling thread;
    // workers <= 1 means everything runs inline.
    explicit ThreadPool(unsigned workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned workers() const { return workers_; }

    // Runs fn(begin, end) over a partition of [0, n) across the lanes and
    // waits for completion. fn must be safe to call concurrently on
    // disjoint ranges.
    void run(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

    static unsigned default_workers();

private:
    void worker_loop(unsigned lane);

    unsigned workers_;
    std::vector<std::thread> threads_;

    std::mutex m_;
    std::condition_variable cv_work_;
    std::condition_variable cv_done_;
    std::uint64_t generation_ = 0;
    unsigned pending_ = 0;
    bool stop_ = false;
    const std::function<void(std::size_t, std::size_t)>* fn_ = nullptr;
    std::size_t n_ = 0;
};

// Splits [0, n) into `lanes` contiguous chunks; chunk i is [bounds[i], bounds[i+1]).
std::vector<std::size_t> chunk_bounds(std::size_t n, unsigned lanes);

} // namespace genform
