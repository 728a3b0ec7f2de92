#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>
#include <vector>

#include "wirt/coloring.hpp"
#include "wirt/diagram.hpp"
#include "wirt/errors.hpp"

namespace wirt {

struct SearchOptions {
    int parallelism = 1;
    std::optional<int> cutoff_k;
    std::optional<std::chrono::milliseconds> time_budget;
};

struct WirtingerResult {
    int omega = 0;
    std::vector<int> witness; // sorted strand ids, lexicographically least
    uint64_t sets_tested = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

enum class BoundReason { Cutoff, Timeout };

// Search stopped before resolving omega; only omega > omega_gt is known.
struct BoundedResult {
    int omega_gt = 0;
    uint64_t sets_tested = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
    BoundReason reason = BoundReason::Cutoff;
};

using SearchOutcome = std::variant<WirtingerResult, BoundedResult>;

// Streams all k-subsets of the diagram's strand ids in lexicographic order.
class SeedSetStream {
public:
    SeedSetStream(const Diagram& d, int k) : n_(d.num_strands()), k_(k) {
        if (k < 1 || k > n_)
            throw KOutOfRange(std::to_string(k) + " for " + std::to_string(n_) + " strands");
    }

    bool next(std::vector<int>& out) {
        if (done_)
            return false;
        if (current_.empty()) {
            current_.resize(static_cast<size_t>(k_));
            for (int i = 0; i < k_; ++i)
                current_[static_cast<size_t>(i)] = i;
        } else if (!advance()) {
            done_ = true;
            return false;
        }
        out = current_;
        return true;
    }

private:
    bool advance() {
        int i = k_ - 1;
        while (i >= 0 && current_[static_cast<size_t>(i)] == n_ - k_ + i)
            --i;
        if (i < 0)
            return false;
        ++current_[static_cast<size_t>(i)];
        for (int j = i + 1; j < k_; ++j)
            current_[static_cast<size_t>(j)] = current_[static_cast<size_t>(j - 1)] + 1;
        return true;
    }

    int n_, k_;
    std::vector<int> current_;
    bool done_ = false;
};

namespace detail {

// Candidates at level k: all crossing-free strands (they can only be seeded)
// merged with (k - forced) subsets of the remaining strands, streamed in
// lexicographic order of the merged witness.
class CandidateStream {
public:
    CandidateStream(std::vector<int> forced, std::vector<int> rest, int k)
        : forced_(std::move(forced)), rest_(std::move(rest)),
          r_(k - static_cast<int>(forced_.size())) {}

    bool next(std::vector<int>& out) {
        if (r_ < 0 || r_ > static_cast<int>(rest_.size()))
            return false;
        if (r_ == 0) {
            if (exhausted_)
                return false;
            exhausted_ = true;
            out = forced_;
            return true;
        }
        if (idx_.empty()) {
            idx_.resize(static_cast<size_t>(r_));
            for (int i = 0; i < r_; ++i)
                idx_[static_cast<size_t>(i)] = i;
        } else if (!advance()) {
            return false;
        }
        out.clear();
        std::vector<int> chosen(static_cast<size_t>(r_));
        for (int i = 0; i < r_; ++i)
            chosen[static_cast<size_t>(i)] = rest_[static_cast<size_t>(idx_[static_cast<size_t>(i)])];
        std::merge(forced_.begin(), forced_.end(), chosen.begin(), chosen.end(),
                   std::back_inserter(out));
        return true;
    }

private:
    bool advance() {
        const int n = static_cast<int>(rest_.size());
        int i = r_ - 1;
        while (i >= 0 && idx_[static_cast<size_t>(i)] == n - r_ + i)
            --i;
        if (i < 0)
            return false;
        ++idx_[static_cast<size_t>(i)];
        for (int j = i + 1; j < r_; ++j)
            idx_[static_cast<size_t>(j)] = idx_[static_cast<size_t>(j - 1)] + 1;
        return true;
    }

    std::vector<int> forced_, rest_;
    int r_;
    std::vector<int> idx_;
    bool exhausted_ = false;
};

struct LevelShared {
    std::mutex mu;
    CandidateStream* stream = nullptr;
    uint64_t next_index = 0;
    uint64_t best_index = std::numeric_limits<uint64_t>::max();
    std::vector<int> best_witness;
    std::atomic<uint64_t> sets_tested{0};
    std::atomic<bool> timed_out{false};
};

// Tests candidates in index order; the success with the least stream index is
// the lexicographically least witness, so the merge is schedule-independent.
inline void level_worker(const Diagram& d, LevelShared& sh,
                         const std::chrono::steady_clock::time_point* deadline) {
    constexpr uint64_t kChunk = 256;
    std::vector<std::vector<int>> batch;
    std::vector<int> cand;
    for (;;) {
        uint64_t start;
        {
            std::lock_guard<std::mutex> lock(sh.mu);
            if (sh.next_index > sh.best_index)
                return;
            start = sh.next_index;
            batch.clear();
            while (batch.size() < kChunk && sh.stream->next(cand))
                batch.push_back(cand);
            sh.next_index += batch.size();
        }
        if (batch.empty())
            return;
        for (size_t i = 0; i < batch.size(); ++i) {
            uint64_t idx = start + i;
            if (deadline && std::chrono::steady_clock::now() > *deadline) {
                sh.timed_out.store(true);
                return;
            }
            {
                std::lock_guard<std::mutex> lock(sh.mu);
                if (idx > sh.best_index)
                    return;
            }
            sh.sets_tested.fetch_add(1, std::memory_order_relaxed);
            if (closure_bits(d, batch[i]).count == d.num_strands()) {
                std::lock_guard<std::mutex> lock(sh.mu);
                if (idx < sh.best_index) {
                    sh.best_index = idx;
                    sh.best_witness = batch[i];
                }
            }
        }
    }
}

} // namespace detail

// Least k such that some k-subset of strands is a Wirtinger generating system.
// Deterministic for any parallelism: all workers agree on the least candidate
// index that succeeds at the final level.
inline SearchOutcome wirtinger_number(const Diagram& d, const SearchOptions& opts = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    WirtingerResult res;
    if (d.empty())
        return res; // omega(empty diagram) = 0 by convention

    std::vector<int> forced, rest;
    for (const Strand& s : d.strands())
        (s.closed_curve ? forced : rest).push_back(s.id);

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (opts.time_budget)
        deadline = t0 + *opts.time_budget;

    const int n = d.num_strands();
    int k_min = std::max({1, d.num_components(), static_cast<int>(forced.size())});
    uint64_t tested = 0;
    for (int k = k_min; k <= n; ++k) {
        if (opts.cutoff_k && k > *opts.cutoff_k) {
            return BoundedResult{*opts.cutoff_k, tested,
                                 std::chrono::steady_clock::now() - t0, BoundReason::Cutoff};
        }
        detail::CandidateStream stream(forced, rest, k);
        detail::LevelShared sh;
        sh.stream = &stream;
        const int workers = std::max(1, opts.parallelism);
        if (workers == 1) {
            detail::level_worker(d, sh, deadline ? &*deadline : nullptr);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(workers));
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] { detail::level_worker(d, sh, deadline ? &*deadline : nullptr); });
            for (auto& th : pool)
                th.join();
        }
        tested += sh.sets_tested.load();
        if (sh.best_index != std::numeric_limits<uint64_t>::max()) {
            res.omega = k;
            res.witness = sh.best_witness;
            res.sets_tested = tested;
            res.elapsed = std::chrono::steady_clock::now() - t0;
            return res;
        }
        if (sh.timed_out.load()) {
            return BoundedResult{k - 1, tested, std::chrono::steady_clock::now() - t0,
                                 BoundReason::Timeout};
        }
    }
    // Unreachable: seeding every strand always colors the diagram.
    throw Error("seed search exhausted all subset sizes");
}

// Worst-case cutoff c(D) - 1 for knot diagrams with at least two crossings.
inline int omega_upper_bound(const Diagram& d) {
    if (d.num_components() != 1)
        throw NotApplicable("links have no c-1 guarantee");
    if (d.num_crossings() < 2)
        throw NotApplicable("fewer than two crossings");
    return d.num_crossings() - 1;
}

} // namespace wirt
