#include "ramsey/quotients.hpp"

#include <numeric>

namespace ramsey {

const char* to_string(GroupFamily::Kind kind) {
    switch (kind) {
    case GroupFamily::Kind::identity_only: return "identity";
    case GroupFamily::Kind::full_automorphism: return "automorphism";
    case GroupFamily::Kind::explicit_groups: return "explicit";
    }
    return "unknown";
}

std::vector<std::vector<int>> generated_subgroup(const std::vector<std::vector<int>>& generators, int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                auto y = DirectCategory::compose_maps(x, g);
                if (group.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

GroupFamily GroupFamily::explicit_groups(std::vector<ExplicitGroup> groups) {
    for (auto& g : groups) {
        const int n = g.object.size();
        std::set<std::vector<int>> elements(g.elements.begin(), g.elements.end());
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 0);
        if (!elements.contains(id)) throw Error(ErrorCode::invalid_argument, "explicit group lacks the identity");
        for (const auto& x : elements) {
            if (static_cast<int>(x.size()) != n || !is_embedding(g.object, g.object, x))
                throw Error(ErrorCode::invalid_argument, "explicit group element is not an automorphism");
        }
        for (const auto& x : elements)
            for (const auto& y : elements)
                if (!elements.contains(DirectCategory::compose_maps(x, y)))
                    throw Error(ErrorCode::invalid_argument, "explicit group is not closed under composition");
        g.elements.assign(elements.begin(), elements.end());
        for (const auto& other : groups)
            if (&other != &g && other.object == g.object)
                throw Error(ErrorCode::invalid_argument, "explicit family lists an object twice");
    }
    return GroupFamily(Kind::explicit_groups, std::move(groups));
}

std::vector<Embedding> GroupFamily::group(const Structure& a) const {
    auto shared = std::make_shared<const Structure>(a);
    switch (kind_) {
    case Kind::identity_only: return {identity_embedding(shared)};
    case Kind::full_automorphism: return automorphisms(a);
    case Kind::explicit_groups:
        for (const auto& g : groups_) {
            if (!(g.object == a)) continue;
            std::vector<Embedding> out;
            for (const auto& x : g.elements) out.push_back(Embedding::unchecked(shared, shared, x));
            return out;
        }
        throw Error(ErrorCode::invalid_argument, "explicit group family has no entry for this object");
    }
    throw Error(ErrorCode::internal, "unknown group family kind");
}

std::vector<DualMorphism> GroupFamily::group(FiniteOrder a) const {
    if (kind_ == Kind::explicit_groups)
        throw Error(ErrorCode::unsupported, "explicit group families are only available in the direct category");
    return DualCategory::automorphisms(a);
}

}  // namespace ramsey
