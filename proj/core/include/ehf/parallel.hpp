#pragma once

#include <future>
#include <optional>
#include <vector>

namespace ehf {

/// Evaluate eval(0..count-1) until the first engaged result, returning the
/// lowest-index hit. With threads > 1 the evaluation fans out in
/// order-preserving chunks, so the returned value matches a sequential run.
template <typename Result, typename Fn>
std::optional<Result> first_hit(std::size_t count, int threads, Fn&& eval) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto r = eval(i)) return r;
        return std::nullopt;
    }
    const std::size_t chunk = static_cast<std::size_t>(threads) * 2;
    for (std::size_t base = 0; base < count; base += chunk) {
        std::size_t end = std::min(count, base + chunk);
        std::vector<std::future<std::optional<Result>>> futures;
        futures.reserve(end - base);
        for (std::size_t i = base; i < end; ++i)
            futures.push_back(std::async(std::launch::async, [&eval, i] { return eval(i); }));
        std::optional<Result> hit;
        for (auto& f : futures) {
            auto r = f.get();
            if (r && !hit) hit = std::move(r);
        }
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace ehf
