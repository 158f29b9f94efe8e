#pragma once

#include <algorithm>
#include <chrono>
#include <vector>

namespace dbgsr {

/// Median wall-clock time of `reps` runs of f, in nanoseconds, after
/// `warmup` untimed runs. Uses the monotonic clock.
template <class F>
double median_runtime_ns(F&& f, int reps, int warmup = 3) {
    for (int i = 0; i < warmup; ++i) f();
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
    std::nth_element(samples.begin(), mid, samples.end());
    return *mid;
}

}  // namespace dbgsr
