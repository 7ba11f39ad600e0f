#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mpm::detail {

// Fixed set of helper threads; the calling thread takes part in every parallel_for.
class WorkerPool {
public:
    explicit WorkerPool(unsigned threads) {
        for (unsigned t = 1; t < threads; ++t) helpers_.emplace_back([this, t] { loop(t); });
    }

    ~WorkerPool() {
        {
            std::lock_guard lock(mu_);
            stop_ = true;
            ++generation_;
        }
        wake_.notify_all();
        for (auto& h : helpers_) h.join();
    }

    unsigned size() const { return static_cast<unsigned>(helpers_.size()) + 1; }

    // Runs f(index, worker) for every index in [0, n); worker < size().
    void parallel_for(std::size_t n, const std::function<void(std::size_t, unsigned)>& f) {
        if (helpers_.empty() || n < 2) {
            for (std::size_t i = 0; i < n; ++i) f(i, 0);
            return;
        }
        {
            std::lock_guard lock(mu_);
            job_ = &f;
            count_ = n;
            next_.store(0);
            busy_ = helpers_.size();
            ++generation_;
        }
        wake_.notify_all();
        drain(0);
        std::unique_lock lock(mu_);
        done_.wait(lock, [this] { return busy_ == 0; });
        job_ = nullptr;
    }

private:
    void drain(unsigned worker) {
        for (std::size_t i; (i = next_.fetch_add(1)) < count_;) (*job_)(i, worker);
    }

    void loop(unsigned worker) {
        std::size_t seen = 0;
        for (;;) {
            {
                std::unique_lock lock(mu_);
                wake_.wait(lock, [&] { return generation_ != seen; });
                seen = generation_;
                if (stop_) return;
            }
            drain(worker);
            {
                std::lock_guard lock(mu_);
                --busy_;
            }
            done_.notify_one();
        }
    }

    std::vector<std::thread> helpers_;
    std::mutex mu_;
    std::condition_variable wake_, done_;
    const std::function<void(std::size_t, unsigned)>* job_ = nullptr;
    std::size_t count_ = 0;
    std::atomic<std::size_t> next_{0};
    std::size_t busy_ = 0;
    std::size_t generation_ = 0;
    bool stop_ = false;
};

}  // namespace mpm::detail
