#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace zcp {

// Worker count: explicit request, else ZCP_THREADS, else the hardware count.
inline int thread_count(int requested = 0) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("ZCP_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0 && v < 1024) t = static_cast<int>(v);
        }
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, t);
}

}  // namespace zcp
