#include "tuttelab/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace tuttelab::config {

namespace {
std::atomic<uint64_t> g_budget{2'000'000'000ull};
std::atomic<int> g_threads{0};  // 0 = unset
}

uint64_t point_budget() { return g_budget.load(); }
void set_point_budget(uint64_t b) { g_budget.store(b ? b : 1); }

int threads() {
    int t = g_threads.load();
    if (t > 0) return t;
    if (const char* env = std::getenv("TUTTELAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void set_threads(int t) { g_threads.store(t); }

uint64_t field_size_limit() { return 1ull << 20; }

int subset_edge_cap() { return 24; }

}  // namespace tuttelab::config
