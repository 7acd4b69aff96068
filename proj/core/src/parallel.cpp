#include "edgekeep/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace edgekeep {

int worker_count() noexcept {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EDGEKEEP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(std::min<long>(v, 256));
        }
    }
    return static_cast<int>(hw);
}

void parallel_rows(int rows, const std::function<void(int)>& body) {
    const int workers = std::min(worker_count(), rows / 16);
    if (workers <= 1) {
        for (int r = 0; r < rows; ++r) {
            body(r);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int begin = static_cast<int>(static_cast<long>(rows) * w / workers);
        const int end = static_cast<int>(static_cast<long>(rows) * (w + 1) / workers);
        pool.emplace_back([&body, begin, end] {
            for (int r = begin; r < end; ++r) {
                body(r);
            }
        });
    }
}

}  // namespace edgekeep
