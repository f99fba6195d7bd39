#pragma once

// Finite stages of homogeneous structures built from extension demands,
// natural one-point extensions and strong amalgamation.
//
// Every age here lives in one binary relation E:
//   graph       symmetric, loopless
//   digraph     loopless
//   tournament  exactly one of E(x,y), E(y,x) for x != y
//   poset       strict partial order: irreflexive and transitive
// Metric spaces with distances 1..D use relations D1..DD, one per distance.

#include "ramsey/relstruct.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ramsey {

enum class AgeKind { graph, digraph, tournament, poset, metric };

const char* to_string(AgeKind kind);
AgeKind parse_age_kind(const std::string& name);

class Age {
public:
    explicit Age(AgeKind kind, int max_distance = 0);

    AgeKind kind() const noexcept { return kind_; }
    int max_distance() const noexcept { return max_distance_; }
    const Signature& signature() const noexcept { return signature_; }

    /// Membership of a finite structure (order, if any, is ignored).
    bool contains(const Structure& s) const;

private:
    AgeKind kind_;
    int max_distance_;
    Signature signature_;
};

/// Metric space as a structure over D1..DD from a symmetric distance matrix.
Structure metric_space(int max_distance, const std::vector<std::vector<int>>& distance);

struct StageMeta {
    int rounds = 0;
    int seed_size = 0;
    /// Number of points present after each round; round_ends[0] is the seed.
    std::vector<int> round_ends;
};

/// A finite prefix of an enumerated structure: the order is 0 < 1 < ... < n-1.
struct EnumeratedStructure {
    AgeKind age = AgeKind::graph;
    std::shared_ptr<const Structure> structure;
    StageMeta meta;

    int size() const { return structure->size(); }
};

constexpr int kDefaultStageCap = 4096;

/// Seed (edgeless, transitive tournament or antichain) grown round by round.
/// In round r every demand over at most `rounds` points present before the
/// round gets a witness among points created in round r.
EnumeratedStructure saturate_stage(AgeKind age, int rounds, int seed_size, int max_points = kDefaultStageCap);

/// The relation pattern a new point is asked to have towards a set U.
/// Entry i describes the relation to U[i]:
///   graph       0 non-adjacent, 1 adjacent
///   digraph     bit 0: E(u,x), bit 1: E(x,u)
///   tournament  0: E(u,x), 1: E(x,u)
///   poset       0 incomparable, 1 u < x, 2 x < u
struct ExtensionDemand {
    std::vector<int> base;
    std::vector<int> type;
};

/// All consistent extension types over `base` in lexicographic order.
std::vector<std::vector<int>> extension_types(AgeKind age, const Structure& s, const std::vector<int>& base);

/// True iff point p (outside the base) realizes the demand.
bool realizes(AgeKind age, const Structure& s, const ExtensionDemand& demand, int p);

/// Every demand over a nonempty U within the first `base_points` points with
/// |U| <= level has a witness. Negative base_points means all points.
bool check_extension_axioms(const EnumeratedStructure& stage, int level, int base_points = -1);
bool check_extension_axioms(AgeKind age, const Structure& s, int level, int base_points = -1);

/// Unsatisfied demands, for diagnostics.
std::vector<ExtensionDemand> missing_extensions(AgeKind age, const Structure& s, int level, int base_points = -1);

enum class OnePointKind { isolated_vertex, top_element, max_distance_point };

const char* to_string(OnePointKind kind);

/// The natural one-point extension J of an age. The new point is always the
/// last element |A|. For tournaments it beats every old point.
class OnePointExtension {
public:
    explicit OnePointExtension(Age age);

    const Age& age() const noexcept { return age_; }
    OnePointKind kind() const noexcept { return kind_; }

    Structure apply(const Structure& a) const;
    /// J(f): f on the old points, new point to new point.
    Embedding apply(const Embedding& f) const;

    /// J(A) with the new point placed last in the order of A (A must be ordered).
    Structure apply_ordered(const Structure& a) const;

private:
    Age age_;
    OnePointKind kind_;
};

struct Amalgam {
    Structure d;
    std::vector<int> f_prime;  // B -> D
    std::vector<int> g_prime;  // C -> D
};

/// Strong amalgam of f : A -> B and g : A -> C. D lists B first and then the
/// points of C outside g(A) in increasing order.
Amalgam strong_amalgam(const Age& age, const Structure& a, const Structure& b, const Structure& c,
                       const std::vector<int>& f, const std::vector<int>& g);

/// Commuting square, intersection condition, embeddings and age membership.
bool verify_amalgam(const Age& age, const Structure& a, const Structure& b, const Structure& c,
                    const std::vector<int>& f, const std::vector<int>& g, const Amalgam& amalgam);

}  // namespace ramsey
