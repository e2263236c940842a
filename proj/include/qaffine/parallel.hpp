#pragma once

/*
 * Minimal ordered worker pool for pure sweep jobs. Results are handed to the
 * caller strictly in index order regardless of completion order, so sweep
 * output is deterministic. QAFFINE_THREADS caps the worker count.
 */

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qaffine {

inline std::size_t worker_count() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("QAFFINE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && static_cast<std::size_t>(v) < hw)
            hw = static_cast<std::size_t>(v);
    }
    return hw;
}

/// Evaluates job(0), ..., job(count-1), possibly concurrently, and calls
/// emit(i, result) for i = 0, 1, ... in order on the calling thread. A job
/// exception is rethrown on the calling thread once its turn comes up.
template <class Job, class Emit>
void ordered_for(std::size_t count, Job job, Emit emit) {
    using Result = std::invoke_result_t<Job, std::size_t>;
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) emit(i, job(i));
        return;
    }

    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            std::optional<Result> r;
            std::exception_ptr err;
            try {
                r.emplace(job(i));
            } catch (...) {
                err = std::current_exception();
            }
            std::lock_guard<std::mutex> lk(mu);
            slots[i] = std::move(r);
            errors[i] = err;
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);

    std::exception_ptr first_error;
    {
        std::unique_lock<std::mutex> lk(mu);
        for (std::size_t i = 0; i < count && !first_error; ++i) {
            cv.wait(lk, [&] { return slots[i].has_value() || errors[i] != nullptr; });
            if (errors[i]) {
                first_error = errors[i];
                break;
            }
            Result r = std::move(*slots[i]);
            slots[i].reset();
            lk.unlock();
            emit(i, std::move(r));
            lk.lock();
        }
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qaffine
