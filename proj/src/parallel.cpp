#include "genform/parallel.hpp"

#include <algorithm>

namespace genform {

std::vector<std::size_t> chunk_bounds(std::size_t n, unsigned lanes) {
    std::vector<std::size_t> bounds(lanes + 1, 0);
    std::size_t base = n / lanes;
    std::size_t extra = n % lanes;
    for (unsigned i = 0; i < lanes; ++i) {
        bounds[i + 1] = bounds[i] + base + (i < extra ? 1 : 0);
    }
    return bounds;
}

unsigned ThreadPool::default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

ThreadPool::ThreadPool(unsigned workers) : workers_(std::max(1u, workers)) {
    threads_.reserve(workers_ - 1);
    for (unsigned lane = 1; lane < workers_; ++lane) {
        threads_.emplace_back([this, lane] { worker_loop(lane); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lk(m_);
        stop_ = true;
    }
    cv_work_.notify_all();
    for (auto& t : threads_) t.join();
}

void ThreadPool::worker_loop(unsigned lane) {
    std::uint64_t seen = 0;
    for (;;) {
        const std::function<void(std::size_t, std::size_t)>* fn = nullptr;
        std::size_t n = 0;
        {
            std::unique_lock<std::mutex> lk(m_);
            cv_work_.wait(lk, [&] { return stop_ || generation_ != seen; });
            if (stop_) return;
            seen = generation_;
            fn = fn_;
            n = n_;
        }
        auto bounds = chunk_bounds(n, workers_);
        (*fn)(bounds[lane], bounds[lane + 1]);
        {
            std::lock_guard<std::mutex> lk(m_);
            if (--pending_ == 0) cv_done_.notify_one();
        }
    }
}

void ThreadPool::run(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (workers_ <= 1 || n == 1) {
        fn(0, n);
        return;
    }
    {
        std::lock_guard<std::mutex> lk(m_);
        fn_ = &fn;
        n_ = n;
        pending_ = workers_ - 1;
        ++generation_;
    }
    cv_work_.notify_all();
    auto bounds = chunk_bounds(n, workers_);
    fn(bounds[0], bounds[1]); // lane 0 runs on the calling thread
    std::unique_lock<std::mutex> lk(m_);
    cv_done_.wait(lk, [&] { return pending_ == 0; });
}

} // namespace genform
