#pragma once

// Exhaustive backtracking search for T = {e} U {+-g_1, ..., +-g_n} satisfying
// the tiling conditions in a given abelian group of order 2n^2+2n+1.
//
// Inverse pairs are chosen in increasing canonical order. A dense ledger holds
// the partial coefficients of T^2 at non-identity elements; a branch dies as
// soon as some coefficient exceeds 2, or an element t^2 with t in T receives
// anything besides the single pair (t, t). At full size these bounds force
// T^2 = 2G - T^(2) + 2n exactly.

#include <leetile/abelian_group.hpp>
#include <leetile/errors.hpp>
#include <leetile/tiling.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace leetile {

struct SearchOptions {
    // Only honoured for cyclic groups (multiplication by units).
    bool use_automorphism_reduction = true;
    int worker_partitions = 1;
    std::optional<std::uint64_t> node_budget;
};

struct SearchOutcome {
    AbelianGroup group;
    int n = 0;
    std::vector<std::vector<GroupElement>> solutions;
    std::uint64_t nodes_explored = 0;
    bool exhausted = true;
    bool reduced = false;

    friend bool operator==(const SearchOutcome &, const SearchOutcome &) = default;
};

namespace detail {

class PairSearch {
  public:
    PairSearch(const AbelianGroup &group, int n, std::vector<std::int64_t> pairs)
        : group_(group), n_(n), pairs_(std::move(pairs)),
          coef_(static_cast<std::size_t>(group.order()), 0), square_(static_cast<std::size_t>(group.order()), 0) {
        chosen_.push_back(0);
    }

    struct BranchResult {
        std::vector<std::vector<std::int64_t>> solutions; // chosen pair representatives
        std::uint64_t nodes = 0;
        bool truncated = false;
    };

    // Explores every completion whose smallest pair is pairs_[first].
    BranchResult run_branch(std::size_t first, std::uint64_t cap) {
        result_ = BranchResult{};
        cap_ = cap;
        visit(first, 1);
        return std::move(result_);
    }

  private:
    struct JournalEntry {
        std::int64_t index;
        std::int32_t coef;
        std::uint8_t square;
    };

    void bump(std::int64_t x, std::int32_t amount, std::vector<std::int64_t> &touched) {
        if (x == 0) {
            return;
        }
        journal_.push_back({x, coef_[x], square_[x]});
        coef_[x] += amount;
        touched.push_back(x);
    }

    bool try_add(std::int64_t g) {
        const auto ng = group_.neg_index(g);
        std::vector<std::int64_t> touched;
        touched.reserve(2 * chosen_.size() + 2);
        for (const auto t : chosen_) {
            bump(group_.add_index(g, t), 2, touched);
            bump(group_.add_index(ng, t), 2, touched);
        }
        for (const auto s : {g, ng}) {
            const auto sq = group_.add_index(s, s);
            bump(sq, 1, touched);
            square_[sq] = 1;
        }
        for (const auto x : touched) {
            if (coef_[x] > 2 || (square_[x] && coef_[x] != 1)) {
                return false;
            }
        }
        chosen_.push_back(g);
        chosen_.push_back(ng);
        return true;
    }

    void undo(std::size_t journal_mark, std::size_t chosen_size) {
        while (journal_.size() > journal_mark) {
            const auto &j = journal_.back();
            coef_[j.index] = j.coef;
            square_[j.index] = j.square;
            journal_.pop_back();
        }
        chosen_.resize(chosen_size);
    }

    // Tries pairs_[i] as the depth-th chosen pair.
    void visit(std::size_t i, int depth) {
        if (result_.truncated) {
            return;
        }
        if (result_.nodes >= cap_) {
            result_.truncated = true;
            return;
        }
        ++result_.nodes;
        const auto mark = journal_.size();
        const auto size = chosen_.size();
        if (try_add(pairs_[i])) {
            picks_.push_back(pairs_[i]);
            if (depth == n_) {
                result_.solutions.push_back(picks_);
            } else {
                const auto needed = static_cast<std::size_t>(n_ - depth);
                for (std::size_t j = i + 1; j + needed <= pairs_.size(); ++j) {
                    visit(j, depth + 1);
                }
            }
            picks_.pop_back();
        }
        undo(mark, size);
    }

    const AbelianGroup &group_;
    int n_;
    std::vector<std::int64_t> pairs_;
    std::vector<std::int32_t> coef_;
    std::vector<std::uint8_t> square_;
    std::vector<std::int64_t> chosen_;
    std::vector<std::int64_t> picks_;
    std::vector<JournalEntry> journal_;
    BranchResult result_;
    std::uint64_t cap_ = 0;
};

// Canonical representatives of the inverse pairs {g, -g}, g != e: the
// lexicographically smaller residue tuple, which is the smaller index.
inline std::vector<std::int64_t> canonical_pairs(const AbelianGroup &G) {
    std::vector<std::int64_t> pairs;
    for (std::int64_t i = 1; i < G.order(); ++i) {
        if (i < G.neg_index(i)) {
            pairs.push_back(i);
        }
    }
    return pairs;
}

// Sorted canonical pair representatives of u * T in Z_m.
inline std::vector<std::int64_t> scaled_key(const std::vector<std::int64_t> &reps, std::int64_t u, std::int64_t m) {
    std::vector<std::int64_t> key;
    key.reserve(reps.size());
    for (auto r : reps) {
        const auto v = static_cast<std::int64_t>(static_cast<__int128>(r) * u % m);
        key.push_back(std::min(v, m - v));
    }
    std::sort(key.begin(), key.end());
    return key;
}

inline bool orbit_minimal(const std::vector<std::int64_t> &reps, std::int64_t m) {
    for (std::int64_t u = 2; u <= m / 2; ++u) {
        if (std::gcd(u, m) == 1 && scaled_key(reps, u, m) < reps) {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline SearchOutcome search_group(const AbelianGroup &G, int n, const SearchOptions &opts = {}) {
    if (n < 1) {
        throw DomainError("search requires n >= 1");
    }
    if (BigInt(G.order()) != tiling_order(n)) {
        throw DomainError("order mismatch: " + G.name() + " has order " + std::to_string(G.order()) +
                          ", expected 2n^2+2n+1 = " + to_string(tiling_order(n)));
    }
    if (opts.worker_partitions < 1) {
        throw DomainError("worker_partitions must be >= 1");
    }
    if (n >= 7 && !opts.node_budget) {
        throw DomainError("an explicit node budget is required for n >= 7");
    }
    const bool reduce = opts.use_automorphism_reduction && G.is_cyclic();
    const auto m = G.order();
    const auto pairs = detail::canonical_pairs(G);

    // Top-level branches: index of the smallest chosen pair. Under reduction
    // it must be minimal in its unit orbit, i.e. a divisor of m.
    std::vector<std::size_t> branches;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= pairs.size(); ++i) {
        if (!reduce || m % pairs[i] == 0) {
            branches.push_back(i);
        }
    }

    const auto cap = opts.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
    std::vector<detail::PairSearch::BranchResult> results(branches.size());
    const auto workers = static_cast<std::size_t>(opts.worker_partitions);
    auto run_partition = [&](std::size_t part) {
        detail::PairSearch engine(G, n, pairs);
        for (std::size_t b = part; b < branches.size(); b += workers) {
            results[b] = engine.run_branch(branches[b], cap);
        }
    };
    if (workers == 1) {
        run_partition(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t part = 0; part < workers; ++part) {
            threads.emplace_back(run_partition, part);
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    // Merge in branch order as if explored sequentially under one budget.
    SearchOutcome out{G, n, {}, 0, true, reduce};
    std::vector<std::vector<std::int64_t>> found;
    for (std::size_t b = 0; b < branches.size(); ++b) {
        auto r = std::move(results[b]);
        const auto remaining = cap - out.nodes_explored;
        if (r.truncated || r.nodes > remaining) {
            r = detail::PairSearch(G, n, pairs).run_branch(branches[b], remaining);
        }
        out.nodes_explored += r.nodes;
        found.insert(found.end(), r.solutions.begin(), r.solutions.end());
        if (r.truncated) {
            out.exhausted = false;
            break;
        }
    }
    if (reduce) {
        std::erase_if(found, [&](const auto &reps) { return !detail::orbit_minimal(reps, m); });
    }
    std::sort(found.begin(), found.end());
    for (const auto &reps : found) {
        std::vector<GroupElement> T{G.identity()};
        for (auto r : reps) {
            T.push_back(G.element_at(r));
            T.push_back(G.element_at(G.neg_index(r)));
        }
        std::sort(T.begin(), T.end());
        auto candidate = TilingCandidate::make(G, n, T);
        if (!check_conditions(candidate).accepted()) {
            throw std::logic_error("search produced a set that fails the tiling conditions");
        }
        out.solutions.push_back(std::move(candidate.T));
    }
    return out;
}

inline std::vector<SearchOutcome> search_all(int n, const SearchOptions &opts = {},
                                             std::uint64_t factor_bound = default_factor_bound()) {
    const auto order = tiling_order(n);
    if (n < 1 || !fits_int64(order)) {
        throw DomainError("n out of range for search");
    }
    std::vector<SearchOutcome> out;
    for (const auto &G : enumerate_groups(static_cast<std::int64_t>(order), factor_bound)) {
        out.push_back(search_group(G, n, opts));
    }
    return out;
}

} // namespace leetile
