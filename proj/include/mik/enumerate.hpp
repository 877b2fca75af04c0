#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mik/certify.hpp"
#include "mik/clutter.hpp"

namespace mik {

namespace detail {

inline bool edge_before(const Edge& a, const Edge& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace detail

/// Visit every clutter on {1..n} (every antichain of nonempty subsets with at
/// least one edge) exactly once, in a fixed deterministic order.  Candidate
/// edges are ordered by cardinality then lexicographically and antichains are
/// extended by appending later candidates only.
inline void for_each_clutter(std::size_t n,
                             const std::function<void(const Clutter&)>& fn) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("clutter enumeration is capped at 6 vertices");

    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                         if (std::popcount(a) != std::popcount(b))
                             return std::popcount(a) < std::popcount(b);
                         Edge ea, eb;
                         for (std::size_t i = 0; i < 6; ++i) {
                             if (a & (1u << i)) ea.push_back(i + 1);
                             if (b & (1u << i)) eb.push_back(i + 1);
                         }
                         return ea < eb;
                     });

    // comparable[i]: later candidates that are subsets or supersets of i.
    std::vector<std::uint64_t> comparable(masks.size(), 0);
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            std::uint32_t meet = masks[i] & masks[j];
            if (meet == masks[i] || meet == masks[j])
                comparable[i] |= std::uint64_t{1} << j;
        }

    std::vector<Edge> chosen;
    std::function<void(std::size_t, std::uint64_t)> extend =
        [&](std::size_t start, std::uint64_t forbidden) {
            for (std::size_t i = start; i < masks.size(); ++i) {
                if (forbidden & (std::uint64_t{1} << i)) continue;
                Edge e;
                for (std::size_t v = 0; v < n; ++v)
                    if (masks[i] & (1u << v)) e.push_back(v + 1);
                chosen.push_back(std::move(e));
                fn(Clutter(n, chosen));
                extend(i + 1, forbidden | comparable[i]);
                chosen.pop_back();
            }
        };
    extend(0, 0);
}

inline std::vector<Clutter> enumerate_clutters(std::size_t n) {
    std::vector<Clutter> out;
    for_each_clutter(n, [&](const Clutter& C) { out.push_back(C); });
    return out;
}

/// Representative of the isomorphism class of C: the lexicographically least
/// canonical edge list over all vertex relabelings.
inline Clutter canonical_form(const Clutter& C) {
    const std::size_t n = C.vertices();
    if (n > 8)
        throw std::invalid_argument("canonical_form is capped at 8 vertices");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::optional<std::vector<Edge>> best;
    do {
        std::vector<Edge> mapped;
        mapped.reserve(C.edges().size());
        for (const auto& e : C.edges()) {
            Edge f;
            f.reserve(e.size());
            for (auto v : e) f.push_back(perm[v - 1]);
            std::sort(f.begin(), f.end());
            mapped.push_back(std::move(f));
        }
        std::sort(mapped.begin(), mapped.end(), detail::edge_before);
        if (!best || std::lexicographical_compare(mapped.begin(), mapped.end(),
                                                  best->begin(), best->end()))
            best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Clutter(n, std::move(*best));
}

struct SweepOptions {
    unsigned jobs = 1;
    std::optional<std::chrono::milliseconds> per_instance_timeout;
};

struct SweepReport {
    std::size_t total = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t unknown = 0;
    // Canonical forms of the Fails instances, in enumeration order.
    std::vector<std::string> failing;
    double duration_ms = 0.0;
};

/// Run a property check over every clutter on {1..n} and tally the verdicts.
/// Work is sharded over `jobs` threads by instance index; an instance whose
/// check overruns the per-instance timeout is downgraded to Unknown.  The
/// report is deterministic for a fixed checker.
inline SweepReport batch_check(
    std::size_t n, const std::function<Verdict::Status(const Clutter&)>& check,
    SweepOptions opts = {}) {
    const unsigned jobs = std::max(1u, opts.jobs);
    const auto t0 = std::chrono::steady_clock::now();

    struct Shard {
        std::size_t total = 0, holds = 0, fails = 0, unknown = 0;
        std::vector<std::pair<std::size_t, std::string>> failing;  // index, form
    };
    std::vector<Shard> shards(jobs);

    auto worker = [&](unsigned id) {
        Shard& shard = shards[id];
        std::size_t index = 0;
        for_each_clutter(n, [&](const Clutter& C) {
            std::size_t my_index = index++;
            if (my_index % jobs != id) return;
            ++shard.total;
            const auto start = std::chrono::steady_clock::now();
            Verdict::Status status = check(C);
            if (opts.per_instance_timeout &&
                std::chrono::steady_clock::now() - start > *opts.per_instance_timeout)
                status = Verdict::Status::Unknown;
            switch (status) {
                case Verdict::Status::Holds: ++shard.holds; break;
                case Verdict::Status::Fails:
                    ++shard.fails;
                    shard.failing.emplace_back(my_index, canonical_form(C).str());
                    break;
                default: ++shard.unknown; break;
            }
        });
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
        for (auto& t : threads) t.join();
    }

    SweepReport report;
    std::vector<std::pair<std::size_t, std::string>> failing;
    for (const auto& shard : shards) {
        report.total += shard.total;
        report.holds += shard.holds;
        report.fails += shard.fails;
        report.unknown += shard.unknown;
        failing.insert(failing.end(), shard.failing.begin(), shard.failing.end());
    }
    std::sort(failing.begin(), failing.end());
    for (auto& [index, form] : failing) report.failing.push_back(std::move(form));
    report.duration_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return report;
}

}  // namespace mik
