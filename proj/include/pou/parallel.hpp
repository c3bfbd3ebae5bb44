#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace pou {

/// Number of workers for data-parallel sweeps: hardware concurrency, capped
/// by the POU_THREADS environment variable when set. Always at least 1.
int worker_count();

/// Strided parallel reduction over the index range [0, n). Each worker folds
/// indices i = w, w + W, ... into its own accumulator via visit(i, acc); the
/// per-worker results are then folded left-to-right with fold(acc, part).
/// Deterministic as long as fold itself is order-insensitive (e.g. max with a
/// total tie-break), which is what all callers in this library use.
template <class Result, class Visit, class Fold>
Result parallel_index_reduce(std::size_t n, Result identity, Visit visit, Fold fold) {
    const int workers = worker_count();
    if (workers <= 1 || n < 64) {
        Result acc = identity;
        for (std::size_t i = 0; i < n; ++i) visit(i, acc);
        return acc;
    }
    std::vector<Result> parts(static_cast<std::size_t>(workers), identity);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            Result& acc = parts[static_cast<std::size_t>(w)];
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers)) {
                visit(i, acc);
            }
        });
    }
    for (auto& t : threads) t.join();
    Result acc = identity;
    for (const Result& part : parts) fold(acc, part);
    return acc;
}

}  // namespace pou
