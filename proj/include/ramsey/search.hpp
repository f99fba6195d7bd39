#pragma once

// The combinatorial core of arrow checking, stripped of any category:
//
//   Given N classes, a palette of k colors, a threshold t and a list of edges
//   (each edge is the set of classes seen by one w : B -> C), is there a
//   coloring of the classes in which every edge sees more than t colors?
//
// Such a coloring is a counterexample to the arrow. Both searches return the
// lexicographically least counterexample, so their answers are comparable.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramsey {

struct ColoringProblem {
    int num_classes = 0;
    int colors = 1;
    int threshold = 1;
    std::vector<std::vector<int>> edges;
    /// Permutations of 0..num_classes-1 that map edges to edges. Only used
    /// when symmetry reduction is enabled.
    std::vector<std::vector<int>> symmetries;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t eliminated = 0;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchOutcome {
    bool holds = true;
    std::optional<std::vector<int>> counterexample;
    SearchStats stats;
};

constexpr std::uint64_t kDefaultNaiveCap = std::uint64_t{1} << 22;
constexpr int kDefaultMaxClasses = 40;

struct SearchLimits {
    std::uint64_t max_naive_colorings = kDefaultNaiveCap;
    int max_classes = kDefaultMaxClasses;
    int workers = 1;
    bool use_symmetry = false;
};

/// RAMSEY_CAP_COLORINGS when set to a positive integer, `fallback` otherwise.
std::uint64_t naive_cap_from_env(std::uint64_t fallback = kDefaultNaiveCap);

/// True iff every edge sees more than `threshold` distinct colors.
bool is_counterexample(const ColoringProblem& problem, std::span<const int> coloring);

/// Plain enumeration of all k^N colorings in lexicographic order.
SearchOutcome search_naive(const ColoringProblem& problem, std::uint64_t max_colorings);

/// Backtracking over class-color assignments with per-edge dead-edge pruning
/// and color-relabelling symmetry breaking. The tree is cut into a fixed set
/// of subtrees; workers explore them independently and the lowest subtree
/// with a counterexample wins, so results and stats do not depend on the
/// number of workers.
SearchOutcome search_backtracking(const ColoringProblem& problem, const SearchLimits& limits);

/// Renumbers colors by first occurrence (0, then the next new color 1, ...).
std::vector<int> normalize_colors(std::span<const int> coloring);

}  // namespace ramsey
