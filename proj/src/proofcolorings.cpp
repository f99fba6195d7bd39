#include "ramsey/proofcolorings.hpp"

#include <map>
#include <set>

namespace ramsey {

std::string to_string(const ColorToken& token) {
    std::string out = "{";
    bool first = true;
    for (int c = 0; c < 64; ++c) {
        if (!(token.color_set >> c & 1U)) continue;
        if (!first) out += ",";
        out += std::to_string(c);
        first = false;
    }
    out += "}";
    if (token.group_element >= 0) out = "(" + out + "," + std::to_string(token.group_element) + ")";
    return out;
}

std::vector<int> normalize_tokens(std::span<const ColorToken> tokens) {
    std::map<ColorToken, int> seen;
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto [it, fresh] = seen.emplace(t, static_cast<int>(seen.size()));
        out.push_back(it->second);
    }
    return out;
}

std::vector<int> orbit_two_coloring(const ArrowInstance<DirectCategory>& inst, const std::vector<int>& alpha) {
    const Structure& a = inst.a;
    if (!(inst.b == a)) throw Error(ErrorCode::invalid_argument, "orbit coloring needs B = A");
    if (static_cast<int>(alpha.size()) != a.size() || !is_embedding(a, a, alpha))
        throw Error(ErrorCode::invalid_argument, "alpha is not an automorphism of A");
    std::vector<std::vector<int>> generators;
    for (const auto& g : inst.group_a) {
        if (g.map() == alpha) throw Error(ErrorCode::invalid_argument, "alpha already lies in G_A");
        generators.push_back(g.map());
    }
    if (inst.hom_ac.empty()) throw Error(ErrorCode::invalid_argument, "hom(A, C) is empty");
    generators.push_back(alpha);
    const auto h = generated_subgroup(generators, a.size());

    std::vector<int> chi(inst.classes_ac.size(), 0);
    std::vector<bool> visited(inst.hom_ac.size(), false);
    // hom_ac is sorted, so the first unvisited morphism is the least of its orbit.
    for (std::size_t i = 0; i < inst.hom_ac.size(); ++i) {
        if (visited[i]) continue;
        const auto& f = inst.hom_ac[i].map();
        for (const auto& x : h) visited[static_cast<std::size_t>(inst.index_of(DirectCategory::compose_maps(f, x)))] = true;
        const auto moved = static_cast<std::size_t>(inst.index_of(DirectCategory::compose_maps(f, alpha)));
        chi[static_cast<std::size_t>(inst.class_of[moved])] = 1;
    }
    return chi;
}

std::vector<int> orbit_two_coloring(const Structure& a, const Structure& c, const GroupFamily& family,
                                    const std::vector<int>& alpha) {
    return orbit_two_coloring(build_arrow_instance<DirectCategory>(a, a, c, family), alpha);
}

bool verify_orbit_coloring(const ArrowInstance<DirectCategory>& inst, std::span<const int> chi) {
    detail::require_size(chi.size(), inst.classes_ac.size(), "class coloring");
    for (const auto& e : inst.class_edges)
        if (distinct_on<int>(e, chi) != 2) return false;
    return true;
}

}  // namespace ramsey
