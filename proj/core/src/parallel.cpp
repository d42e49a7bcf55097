#include "loopkit/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace loopkit {

namespace {

std::atomic<int> g_threads{0};  // 0 means "not set yet"

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void set_thread_count(int count) { g_threads.store(count < 1 ? 1 : count); }

int thread_count() {
    int t = g_threads.load();
    return t == 0 ? default_threads() : t;
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    int total = end - begin;
    if (total <= 0) return;
    int workers = thread_count();
    if (workers > total) workers = total;
    if (workers <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    int chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = begin + w * chunk;
        int hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace loopkit
