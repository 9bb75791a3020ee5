#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace relgraph {

/// Error raised for malformed inputs and violated preconditions.
/// The message carries the file/table/row context where it is known.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

// ---------------------------------------------------------------------------
// Deterministic RNG.
//
// All randomness in the library flows from 64-bit seeds fanned out with
// split(): substreams are derived by hashing (seed, tag) so unrelated
// components never share a stream. The generator is splitmix64; bounded
// draws use multiply-shift so results are identical on every platform
// (std::uniform_int_distribution is implementation-defined).
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // multiply-shift; bias is < 2^-64 per draw, irrelevant at our scales
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Standard normal via Box-Muller (uses two uniforms per pair, caches one).
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = next_double(-1.0, 1.0);
            v = next_double(-1.0, 1.0);
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[next_below(i)]);
        }
    }

    /// Derive an independent substream for (seed, tag).
    static std::uint64_t split(std::uint64_t seed, std::uint64_t tag) {
        Rng r(seed ^ (0x517cc1b727220a95ull * (tag + 1)));
        return r.next_u64();
    }
    static std::uint64_t split(std::uint64_t seed, std::string_view tag) {
        return split(seed, fnv1a(tag));
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// ---------------------------------------------------------------------------
// Worker pool sizing. RELGRAPH_THREADS caps the number of workers used by
// parallel build/eval loops; callers must keep output placement deterministic.
// ---------------------------------------------------------------------------

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RELGRAPH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Run fn(i) for i in [0, n) across up to worker_count() threads.
/// fn must write only to disjoint, preallocated slots.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// Number formatting: shortest decimal that round-trips (used for CSV cells
// and anywhere byte-stable float output matters).
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    require(ec == std::errc(), "format_double: conversion failed");
    return std::string(buf, p);
}

inline std::string format_i64(std::int64_t v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

inline bool parse_i64(std::string_view s, std::int64_t& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

inline bool parse_double(std::string_view s, double& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

}  // namespace relgraph
