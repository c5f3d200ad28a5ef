#include "landau/parallel.hpp"

#include <cstdlib>
#include <string>

namespace landau {

std::size_t worker_count() {
    static const std::size_t cached = []() -> std::size_t {
        std::size_t n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
        if (const char* env = std::getenv("LANDAU_LAB_THREADS")) {
            char* end = nullptr;
            const long cap = std::strtol(env, &end, 10);
            if (end != env && cap > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
        }
        return n;
    }();
    return cached;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 32) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace landau
