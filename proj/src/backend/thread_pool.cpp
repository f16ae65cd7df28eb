#include "portmd/backend/thread_pool.hpp"

namespace portmd {

ThreadPool::ThreadPool(unsigned workers) : workers_(workers == 0 ? 1 : workers) {
    threads_.reserve(workers_ - 1);
    for (unsigned i = 1; i < workers_; ++i) {
        threads_.emplace_back([this, i] { worker_loop(i); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : threads_) {
        t.join();
    }
}

void ThreadPool::run(const std::function<void(unsigned)>& job) {
    if (workers_ == 1) {
        job(0);
        return;
    }
    {
        std::lock_guard lock(mutex_);
        job_ = &job;
        pending_ = workers_ - 1;
        error_ = nullptr;
        ++generation_;
    }
    start_cv_.notify_all();

    std::exception_ptr local_error;
    try {
        job(0);
    } catch (...) {
        local_error = std::current_exception();
    }

    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [this] { return pending_ == 0; });
    job_ = nullptr;
    if (local_error) {
        std::rethrow_exception(local_error);
    }
    if (error_) {
        std::rethrow_exception(error_);
    }
}

void ThreadPool::worker_loop(unsigned index) {
    std::uint64_t seen = 0;
    for (;;) {
        const std::function<void(unsigned)>* job = nullptr;
        {
            std::unique_lock lock(mutex_);
            start_cv_.wait(lock, [&] { return stopping_ || generation_ != seen; });
            if (stopping_) {
                return;
            }
            seen = generation_;
            job = job_;
        }
        try {
            (*job)(index);
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_) {
                error_ = std::current_exception();
            }
        }
        {
            std::lock_guard lock(mutex_);
            if (--pending_ == 0) {
                done_cv_.notify_one();
            }
        }
    }
}

}  // namespace portmd
