#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace portmd {

/// Fixed set of workers that all run the same job until it returns.
/// The calling thread takes part as worker 0, so a pool of one spawns no
/// threads at all.
class ThreadPool {
public:
    explicit ThreadPool(unsigned workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned size() const noexcept { return workers_; }

    /// Runs `job(worker_index)` on every worker and blocks until all are done.
    /// The first exception thrown by any worker is rethrown here.
    void run(const std::function<void(unsigned)>& job);

private:
    void worker_loop(unsigned index);

    unsigned workers_;
    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    const std::function<void(unsigned)>* job_ = nullptr;
    std::uint64_t generation_ = 0;
    unsigned pending_ = 0;
    bool stopping_ = false;
    std::exception_ptr error_;
};

}  // namespace portmd
