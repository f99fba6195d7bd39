#pragma once

// Finite Ramsey arrows C -(G)-> (B)^A_{k,t}: every k-coloring of the classes
// hom(A, C) / ~_G admits some w : B -> C such that the classes w . [f],
// f in hom(A, B), carry at most t colors.

#include "ramsey/quotients.hpp"
#include "ramsey/search.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

/// Everything an arrow question about (A, B, C, G) needs, indexed once.
template <class Cat>
struct ArrowInstance {
    using Object = typename Cat::Object;
    using Morphism = typename Cat::Morphism;

    ArrowInstance(Object a_, Object b_, Object c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    Object a, b, c;
    std::vector<Morphism> group_a;  // G_A, identity first
    std::vector<Morphism> hom_ab, hom_ac, hom_bc;
    std::vector<HomClass<Morphism>> classes_ab, classes_ac;
    std::vector<int> class_of;  // hom_ac index -> classes_ac index
    std::vector<int> alpha_of;  // hom_ac index -> group_a index with f = rep . alpha
    bool unique_factorization = true;
    std::vector<std::vector<int>> class_edges;  // per w: classes_ac indices of w . classes(A, B)
    std::vector<std::vector<int>> hom_edges;    // per w: hom_ac indices of w . hom(A, B)
    std::map<std::vector<int>, int> hom_index;

    int index_of(const std::vector<int>& map) const {
        auto it = hom_index.find(map);
        if (it == hom_index.end()) throw Error(ErrorCode::internal, "morphism missing from hom(A, C)");
        return it->second;
    }

    /// Aut(C) acting on classes_ac by post-composition, as permutations.
    std::vector<std::vector<int>> class_symmetries() const {
        std::vector<std::vector<int>> out;
        for (const auto& sigma : Cat::automorphisms(c)) {
            std::vector<int> perm;
            perm.reserve(classes_ac.size());
            for (const auto& cls : classes_ac)
                perm.push_back(class_of[static_cast<std::size_t>(
                    index_of(Cat::compose_maps(sigma.map(), cls.representative.map())))]);
            out.push_back(std::move(perm));
        }
        return out;
    }
};

template <class Cat>
ArrowInstance<Cat> build_arrow_instance(const typename Cat::Object& a, const typename Cat::Object& b,
                                        const typename Cat::Object& c, const GroupFamily& family) {
    ArrowInstance<Cat> inst(a, b, c);
    inst.group_a = family.group(a);
    inst.hom_ab = Cat::hom(a, b);
    inst.hom_ac = Cat::hom(a, c);
    inst.hom_bc = Cat::hom(b, c);
    inst.classes_ab = hom_classes<Cat>(a, b, family);
    inst.classes_ac = hom_classes<Cat>(a, c, family);

    for (std::size_t i = 0; i < inst.hom_ac.size(); ++i) inst.hom_index.emplace(inst.hom_ac[i].map(), static_cast<int>(i));
    inst.class_of.assign(inst.hom_ac.size(), -1);
    inst.alpha_of.assign(inst.hom_ac.size(), -1);
    for (std::size_t ci = 0; ci < inst.classes_ac.size(); ++ci) {
        const auto& rep = inst.classes_ac[ci].representative;
        for (std::size_t ai = 0; ai < inst.group_a.size(); ++ai) {
            const auto idx = static_cast<std::size_t>(inst.index_of(Cat::compose_maps(rep.map(), inst.group_a[ai].map())));
            inst.class_of[idx] = static_cast<int>(ci);
            if (inst.alpha_of[idx] >= 0) inst.unique_factorization = false;
            else inst.alpha_of[idx] = static_cast<int>(ai);
        }
    }

    for (const auto& w : inst.hom_bc) {
        std::vector<int> cls_edge;
        for (const auto& cls : inst.classes_ab) {
            const auto idx = static_cast<std::size_t>(inst.index_of(Cat::compose_maps(w.map(), cls.representative.map())));
            cls_edge.push_back(inst.class_of[idx]);
        }
        std::sort(cls_edge.begin(), cls_edge.end());
        cls_edge.erase(std::unique(cls_edge.begin(), cls_edge.end()), cls_edge.end());
        inst.class_edges.push_back(std::move(cls_edge));

        std::vector<int> hom_edge;
        for (const auto& f : inst.hom_ab) hom_edge.push_back(inst.index_of(Cat::compose_maps(w.map(), f.map())));
        std::sort(hom_edge.begin(), hom_edge.end());
        hom_edge.erase(std::unique(hom_edge.begin(), hom_edge.end()), hom_edge.end());
        inst.hom_edges.push_back(std::move(hom_edge));
    }
    return inst;
}

template <class Cat>
struct ArrowQuery {
    typename Cat::Object a, b, c;
    int k = 2;
    int t = 1;
    GroupFamily family = GroupFamily::identity_only();
};

struct ArrowOptions {
    SearchLimits limits;
    bool naive = false;  // use plain enumeration instead of backtracking
};

struct ArrowResult {
    bool holds = true;
    /// Color of every class of hom(A, C) / ~_G (same order as classes_ac)
    /// when the arrow fails.
    std::optional<std::vector<int>> counterexample;
    SearchStats stats;
    std::size_t num_classes = 0;
};

template <class Cat>
ColoringProblem coloring_problem(const ArrowInstance<Cat>& inst, int k, int t, bool with_symmetries) {
    ColoringProblem p;
    p.num_classes = static_cast<int>(inst.classes_ac.size());
    p.colors = k;
    p.threshold = t;
    p.edges = inst.class_edges;
    std::sort(p.edges.begin(), p.edges.end());
    p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
    if (with_symmetries) p.symmetries = inst.class_symmetries();
    return p;
}

template <class Cat>
void validate_arrow(const ArrowInstance<Cat>& inst, int k, int t) {
    if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be at least 1");
    if (t < 1) throw Error(ErrorCode::invalid_argument, "t must be at least 1");
    if (inst.hom_ab.empty()) throw Error(ErrorCode::invalid_argument, "hom(A, B) is empty");
    if (inst.hom_bc.empty()) throw Error(ErrorCode::invalid_argument, "hom(B, C) is empty");
}

template <class Cat>
ArrowResult check_arrow(const ArrowInstance<Cat>& inst, int k, int t, const ArrowOptions& options = {}) {
    validate_arrow(inst, k, t);
    const auto problem = coloring_problem(inst, k, t, options.limits.use_symmetry && !options.naive);
    SearchOutcome outcome = options.naive ? search_naive(problem, options.limits.max_naive_colorings)
                                          : search_backtracking(problem, options.limits);
    if (outcome.counterexample && !is_counterexample(problem, *outcome.counterexample))
        throw Error(ErrorCode::internal, "search returned an invalid counterexample");
    return ArrowResult{outcome.holds, std::move(outcome.counterexample), outcome.stats, inst.classes_ac.size()};
}

template <class Cat>
ArrowResult check_arrow(const ArrowQuery<Cat>& q, const ArrowOptions& options = {}) {
    return check_arrow(build_arrow_instance<Cat>(q.a, q.b, q.c, q.family), q.k, q.t, options);
}

/// Least t for which the arrow holds; at most |classes(A, B)|.
template <class Cat>
int min_threshold(const ArrowInstance<Cat>& inst, int k, const ArrowOptions& options = {}) {
    const int top = static_cast<int>(inst.classes_ab.size());
    for (int t = 1; t < top; ++t)
        if (check_arrow(inst, k, t, options).holds) return t;
    validate_arrow(inst, k, std::max(top, 1));
    return std::max(top, 1);
}

/// True iff every w : B -> C sees at least `bound` colors on w . classes(A, B).
template <class Cat>
bool verify_lower_bound(const ArrowInstance<Cat>& inst, const std::vector<int>& coloring, int bound) {
    if (coloring.size() != inst.classes_ac.size())
        throw Error(ErrorCode::invalid_argument, "coloring is not total on hom(A, C) / ~");
    for (int c : coloring)
        if (c < 0) throw Error(ErrorCode::invalid_argument, "coloring is not total on hom(A, C) / ~");
    for (const auto& edge : inst.class_edges) {
        std::vector<int> seen;
        for (int cls : edge) seen.push_back(coloring[static_cast<std::size_t>(cls)]);
        std::sort(seen.begin(), seen.end());
        if (std::unique(seen.begin(), seen.end()) - seen.begin() < bound) return false;
    }
    return true;
}

struct CandidateReport {
    std::size_t index = 0;
    std::string status;  // "holds", "fails", "cap_exceeded" or "no_morphism"
    std::uint64_t required = 0;
    SearchStats stats;
};

template <class Cat>
struct WitnessSearch {
    std::optional<typename Cat::Object> witness;
    std::optional<std::size_t> witness_index;
    std::vector<CandidateReport> reports;
};

/// First candidate C with C -> (B)^A_{k,t}. A candidate that exceeds a cap is
/// reported and skipped.
template <class Cat>
WitnessSearch<Cat> search_witness(const typename Cat::Object& a, const typename Cat::Object& b, int k, int t,
                                  const GroupFamily& family, const std::vector<typename Cat::Object>& candidates,
                                  const ArrowOptions& options = {}) {
    WitnessSearch<Cat> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        CandidateReport report{i, "", 0, {}};
        auto inst = build_arrow_instance<Cat>(a, b, candidates[i], family);
        if (inst.hom_bc.empty() || inst.hom_ab.empty()) {
            report.status = "no_morphism";
            out.reports.push_back(report);
            continue;
        }
        try {
            auto res = check_arrow(inst, k, t, options);
            report.status = res.holds ? "holds" : "fails";
            report.stats = res.stats;
            out.reports.push_back(report);
            if (res.holds) {
                out.witness = candidates[i];
                out.witness_index = i;
                return out;
            }
        } catch (const CapExceeded& e) {
            report.status = "cap_exceeded";
            report.required = e.required();
            out.reports.push_back(report);
        }
    }
    return out;
}

}  // namespace ramsey
