#include "pou/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace pou {

int worker_count() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
        if (const char* env = std::getenv("POU_THREADS")) {
            char* end = nullptr;
            long cap = std::strtol(env, &end, 10);
            if (end != env && cap > 0) n = std::min<long>(n, cap);
        }
        return n;
    }();
    return cached;
}

}  // namespace pou
