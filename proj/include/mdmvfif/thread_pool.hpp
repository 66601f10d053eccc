#ifndef MDMVFIF_THREAD_POOL_HPP
#define MDMVFIF_THREAD_POOL_HPP

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mdmvfif {

/// Minimal persistent worker pool for data-parallel loops.
///
/// Work items must write to disjoint locations: parallel_for gives no
/// ordering guarantees, so determinism of results is the caller's contract
/// (reductions are combined in fixed index order by the caller).
class ThreadPool {
public:
    explicit ThreadPool(unsigned threads = 1);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned thread_count() const { return static_cast<unsigned>(workers_.size()) + 1; }

    /// Runs body(i) for i in [0, n). Blocks until all items finish.
    /// With no workers, runs inline on the calling thread.
    void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

private:
    void worker_loop();

    std::vector<std::thread> workers_;
    std::mutex mutex_;
    std::condition_variable cv_work_;
    std::condition_variable cv_done_;
    const std::function<void(std::size_t)>* body_ = nullptr;
    std::size_t next_ = 0;
    std::size_t total_ = 0;
    std::size_t active_ = 0;
    std::size_t generation_ = 0;
    bool stop_ = false;
};

/// Process-wide pool used by the library's internals. Starts with one
/// thread; the CLI resizes it once at startup via set_default_threads.
ThreadPool& default_pool();
void set_default_threads(unsigned threads);

} // namespace mdmvfif

#endif
