#include "ramsey/search.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace ramsey {

namespace {

constexpr int kMaxColors = 64;
constexpr std::size_t kTargetSubtrees = 64;
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

void validate(const ColoringProblem& p) {
    if (p.colors < 1 || p.colors > kMaxColors)
        throw Error(ErrorCode::invalid_argument, "number of colors must be in 1.." + std::to_string(kMaxColors));
    if (p.threshold < 1) throw Error(ErrorCode::invalid_argument, "threshold must be positive");
    if (p.num_classes < 0) throw Error(ErrorCode::invalid_argument, "negative class count");
    for (const auto& e : p.edges)
        for (int c : e)
            if (c < 0 || c >= p.num_classes) throw Error(ErrorCode::invalid_argument, "edge mentions an unknown class");
    for (const auto& s : p.symmetries)
        if (static_cast<int>(s.size()) != p.num_classes)
            throw Error(ErrorCode::invalid_argument, "symmetry has the wrong length");
}

int distinct_colors(std::span<const int> edge, std::span<const int> coloring) {
    std::uint64_t seen = 0;
    for (int c : edge) seen |= std::uint64_t{1} << coloring[static_cast<std::size_t>(c)];
    return std::popcount(seen);
}

class Backtracker {
public:
    Backtracker(const ColoringProblem& p, bool use_symmetry, const std::atomic<std::size_t>& best, std::size_t task)
        : p_(p), k_(p.colors), use_symmetry_(use_symmetry && !p.symmetries.empty()), best_(best), task_(task),
          counts_(p.edges.size() * static_cast<std::size_t>(k_), 0), distinct_(p.edges.size(), 0),
          uncolored_(p.edges.size()), incidence_(static_cast<std::size_t>(p.num_classes)) {
        coloring.assign(static_cast<std::size_t>(p.num_classes), -1);
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            uncolored_[e] = static_cast<int>(p.edges[e].size());
            for (int c : p.edges[e]) incidence_[static_cast<std::size_t>(c)].push_back(static_cast<int>(e));
        }
    }

    /// Explores the subtree below `prefix`; true when a counterexample is found.
    bool run(std::span<const int> prefix) {
        int max_used = -1;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            ++stats.nodes;
            coloring[i] = prefix[i];
            bool ok = assign(static_cast<int>(i), prefix[i]);
            if (ok && use_symmetry_) ok = symmetry_ok(static_cast<int>(i) + 1);
            if (!ok) {
                ++stats.eliminated;
                return false;
            }
            max_used = std::max(max_used, prefix[i]);
        }
        return dfs(static_cast<int>(prefix.size()), max_used);
    }

    std::vector<int> coloring;
    SearchStats stats;
    bool aborted = false;

private:
    bool dead(std::size_t e) const {
        const int d = distinct_[e];
        return d + std::min(uncolored_[e], k_ - d) <= p_.threshold;
    }

    bool assign(int cls, int color) {
        bool ok = true;
        for (int e : incidence_[static_cast<std::size_t>(cls)]) {
            auto ue = static_cast<std::size_t>(e);
            if (counts_[ue * static_cast<std::size_t>(k_) + static_cast<std::size_t>(color)]++ == 0) ++distinct_[ue];
            --uncolored_[ue];
            if (dead(ue)) ok = false;
        }
        return ok;
    }

    void unassign(int cls, int color) {
        for (int e : incidence_[static_cast<std::size_t>(cls)]) {
            auto ue = static_cast<std::size_t>(e);
            if (--counts_[ue * static_cast<std::size_t>(k_) + static_cast<std::size_t>(color)] == 0) --distinct_[ue];
            ++uncolored_[ue];
        }
    }

    // Lex-leader test against every symmetry on the determined prefix
    // coloring[0..len-1]. False when some relabelled image is already
    // known to be lexicographically smaller.
    bool symmetry_ok(int len) const {
        std::array<int, kMaxColors> relabel{};
        for (const auto& perm : p_.symmetries) {
            relabel.fill(-1);
            int next = 0;
            for (int i = 0; i < len; ++i) {
                const int src = perm[static_cast<std::size_t>(i)];
                if (src >= len) break;
                int& label = relabel[static_cast<std::size_t>(coloring[static_cast<std::size_t>(src)])];
                if (label < 0) label = next++;
                const int mine = coloring[static_cast<std::size_t>(i)];
                if (mine < label) break;
                if (mine > label) return false;
            }
        }
        return true;
    }

    bool dfs(int depth, int max_used) {
        if (depth == p_.num_classes) return true;
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int color = 0; color <= limit; ++color) {
            if ((++stats.nodes & 0xfff) == 0 && best_.load(std::memory_order_relaxed) < task_) {
                aborted = true;
                return false;
            }
            coloring[static_cast<std::size_t>(depth)] = color;
            bool ok = assign(depth, color);
            if (ok && use_symmetry_) ok = symmetry_ok(depth + 1);
            if (ok && dfs(depth + 1, std::max(max_used, color))) return true;
            if (aborted) return false;
            if (!ok) ++stats.eliminated;
            unassign(depth, color);
        }
        coloring[static_cast<std::size_t>(depth)] = -1;
        return false;
    }

    const ColoringProblem& p_;
    const int k_;
    const bool use_symmetry_;
    const std::atomic<std::size_t>& best_;
    const std::size_t task_;
    std::vector<int> counts_;
    std::vector<int> distinct_;
    std::vector<int> uncolored_;
    std::vector<std::vector<int>> incidence_;
};

// Normalized color prefixes (first occurrences in increasing order), all of
// one length, in lexicographic order. The split depth depends only on the
// problem, never on the number of workers.
std::vector<std::vector<int>> split_prefixes(int n, int k) {
    std::vector<std::vector<int>> level{{}};
    for (int d = 0; d < n && level.size() < kTargetSubtrees; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& p : level) {
            int max_used = p.empty() ? -1 : *std::max_element(p.begin(), p.end());
            for (int c = 0; c <= std::min(k - 1, max_used + 1); ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(std::move(q));
            }
        }
        level = std::move(next);
    }
    return level;
}

struct TaskResult {
    bool found = false;
    std::vector<int> coloring;
    SearchStats stats;
};

}  // namespace

std::uint64_t naive_cap_from_env(std::uint64_t fallback) {
    const char* raw = std::getenv("RAMSEY_CAP_COLORINGS");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return fallback;
    return static_cast<std::uint64_t>(v);
}

bool is_counterexample(const ColoringProblem& problem, std::span<const int> coloring) {
    if (static_cast<int>(coloring.size()) != problem.num_classes)
        throw Error(ErrorCode::invalid_argument, "coloring does not cover every class");
    for (int c : coloring)
        if (c < 0 || c >= problem.colors) throw Error(ErrorCode::invalid_argument, "color out of range");
    for (const auto& e : problem.edges)
        if (distinct_colors(e, coloring) <= problem.threshold) return false;
    return true;
}

std::vector<int> normalize_colors(std::span<const int> coloring) {
    std::vector<int> out(coloring.size());
    std::vector<std::pair<int, int>> relabel;
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        auto it = std::find_if(relabel.begin(), relabel.end(), [&](auto& p) { return p.first == coloring[i]; });
        if (it == relabel.end()) {
            relabel.emplace_back(coloring[i], static_cast<int>(relabel.size()));
            out[i] = static_cast<int>(relabel.size()) - 1;
        } else {
            out[i] = it->second;
        }
    }
    return out;
}

SearchOutcome search_naive(const ColoringProblem& problem, std::uint64_t max_colorings) {
    validate(problem);
    std::uint64_t total = 1;
    bool overflow = false;
    for (int i = 0; i < problem.num_classes; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(problem.colors)) {
            overflow = true;
            break;
        }
        total *= static_cast<std::uint64_t>(problem.colors);
    }
    if (overflow || total > max_colorings)
        throw CapExceeded("naive search needs " + (overflow ? std::string("more than 2^64") : std::to_string(total)) +
                              " colorings, cap is " + std::to_string(max_colorings),
                          overflow ? std::numeric_limits<std::uint64_t>::max() : total, max_colorings);

    SearchOutcome out;
    std::vector<int> coloring(static_cast<std::size_t>(problem.num_classes), 0);
    for (;;) {
        ++out.stats.nodes;
        if (is_counterexample(problem, coloring)) {
            out.holds = false;
            out.counterexample = coloring;
            break;
        }
        ++out.stats.eliminated;
        int i = problem.num_classes - 1;
        while (i >= 0 && coloring[static_cast<std::size_t>(i)] == problem.colors - 1) coloring[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++coloring[static_cast<std::size_t>(i)];
    }
    return out;
}

SearchOutcome search_backtracking(const ColoringProblem& problem, const SearchLimits& limits) {
    validate(problem);
    if (problem.num_classes > limits.max_classes)
        throw CapExceeded("backtracking search over " + std::to_string(problem.num_classes) +
                              " classes exceeds the cap of " + std::to_string(limits.max_classes),
                          static_cast<std::uint64_t>(problem.num_classes),
                          static_cast<std::uint64_t>(limits.max_classes));

    SearchOutcome out;
    // An edge that can never see more than t colors decides the arrow at the root.
    for (const auto& e : problem.edges) {
        if (std::min(static_cast<int>(e.size()), problem.colors) <= problem.threshold) {
            out.stats.nodes = 1;
            out.stats.eliminated = 1;
            return out;
        }
    }

    const auto prefixes = split_prefixes(problem.num_classes, problem.colors);
    std::vector<TaskResult> results(prefixes.size());
    std::atomic<std::size_t> best{kNoTask};
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= prefixes.size()) return;
            if (best.load() < j) continue;
            Backtracker bt(problem, limits.use_symmetry, best, j);
            bool found = bt.run(prefixes[j]);
            if (bt.aborted) continue;
            results[j].found = found;
            results[j].stats = bt.stats;
            if (found) {
                results[j].coloring = bt.coloring;
                std::size_t cur = best.load();
                while (j < cur && !best.compare_exchange_weak(cur, j)) {
                }
            }
        }
    };

    const int workers = std::clamp(limits.workers, 1, static_cast<int>(prefixes.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const std::size_t winner = best.load();
    const std::size_t last = winner == kNoTask ? prefixes.size() - 1 : winner;
    for (std::size_t j = 0; j <= last && j < results.size(); ++j) {
        out.stats.nodes += results[j].stats.nodes;
        out.stats.eliminated += results[j].stats.eliminated;
    }
    if (winner != kNoTask) {
        out.holds = false;
        out.counterexample = results[winner].coloring;
    }
    return out;
}

}  // namespace ramsey
