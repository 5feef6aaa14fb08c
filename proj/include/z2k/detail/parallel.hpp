#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace z2k::detail {

/// Smallest index in [0, count) for which `ok(index)` is false, scanning with
/// up to `threads` workers. The answer does not depend on the thread count.
template <typename Pred>
std::optional<std::uint64_t> first_failure(std::uint64_t count, unsigned threads, Pred ok) {
    if (threads <= 1 || count < 2048) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (!ok(i)) return i;
        return std::nullopt;
    }

    constexpr std::uint64_t chunk = 1024;
    const std::uint64_t chunks = (count + chunk - 1) / chunk;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{count};

    auto worker = [&] {
        for (;;) {
            const auto c = next.fetch_add(1);
            if (c >= chunks) return;
            const auto begin = c * chunk;
            if (begin >= best.load()) return;
            const auto end = std::min(count, begin + chunk);
            for (auto i = begin; i < end; ++i) {
                if (!ok(i)) {
                    auto cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };

    std::vector<std::jthread> pool;
    const auto n = std::min<std::uint64_t>(threads, chunks);
    for (std::uint64_t t = 0; t < n; ++t) pool.emplace_back(worker);
    pool.clear();

    const auto found = best.load();
    if (found == count) return std::nullopt;
    return found;
}

}  // namespace z2k::detail
