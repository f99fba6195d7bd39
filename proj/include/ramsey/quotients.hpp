#pragma once

// Group families G = (G_A) with G_A <= Aut(A), and the quotients
// hom(A, B) / ~_G where f ~ g iff f = g . alpha for some alpha in G_A.

#include "ramsey/category.hpp"
#include "ramsey/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace ramsey {

/// Closes a set of permutations of 0..n-1 under composition. The result is
/// the generated subgroup, sorted.
std::vector<std::vector<int>> generated_subgroup(const std::vector<std::vector<int>>& generators, int n);

struct ExplicitGroup {
    Structure object;
    std::vector<std::vector<int>> elements;  // maps object -> object
};

class GroupFamily {
public:
    enum class Kind { identity_only, full_automorphism, explicit_groups };

    static GroupFamily identity_only() { return GroupFamily(Kind::identity_only, {}); }
    static GroupFamily full_automorphism() { return GroupFamily(Kind::full_automorphism, {}); }
    /// Each listed group must consist of automorphisms of its object, contain
    /// the identity and be closed under composition (hence under inverses).
    static GroupFamily explicit_groups(std::vector<ExplicitGroup> groups);

    Kind kind() const noexcept { return kind_; }
    const std::vector<ExplicitGroup>& groups() const noexcept { return groups_; }

    /// G_A as morphisms A -> A, sorted, identity first.
    std::vector<Embedding> group(const Structure& a) const;
    std::vector<DualMorphism> group(FiniteOrder a) const;

private:
    GroupFamily(Kind kind, std::vector<ExplicitGroup> groups) : kind_(kind), groups_(std::move(groups)) {}

    Kind kind_;
    std::vector<ExplicitGroup> groups_;
};

const char* to_string(GroupFamily::Kind kind);

template <class Morphism>
struct HomClass {
    Morphism representative;
    std::vector<Morphism> members;  // sorted, representative first

    std::size_t size() const noexcept { return members.size(); }

    friend bool operator==(const HomClass& a, const HomClass& b) {
        return a.representative == b.representative && a.members == b.members;
    }
};

/// f . alpha for every alpha in the group, sorted and deduplicated.
template <class Cat>
std::vector<typename Cat::Morphism> orbit_under(const typename Cat::Morphism& f,
                                                const std::vector<typename Cat::Morphism>& group) {
    std::vector<typename Cat::Morphism> out;
    out.reserve(group.size());
    for (const auto& alpha : group) out.push_back(Cat::compose(f, alpha));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The partition of hom(A, B) into ~_G classes, sorted by representative.
template <class Cat>
std::vector<HomClass<typename Cat::Morphism>> hom_classes(const typename Cat::Object& a,
                                                          const typename Cat::Object& b,
                                                          const GroupFamily& family) {
    using Morphism = typename Cat::Morphism;
    const auto group = family.group(a);
    const auto homs = Cat::hom(a, b);
    std::set<std::vector<int>> assigned;
    std::vector<HomClass<Morphism>> classes;
    for (const auto& f : homs) {
        if (assigned.contains(f.map())) continue;
        auto members = orbit_under<Cat>(f, group);
        for (const auto& m : members) assigned.insert(m.map());
        Morphism rep = members.front();
        classes.push_back(HomClass<Morphism>{std::move(rep), std::move(members)});
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x.representative < y.representative; });
    return classes;
}

/// w . [f] = [w . f]: the image of a class under post-composition.
template <class Cat>
HomClass<typename Cat::Morphism> act_left(const typename Cat::Morphism& w,
                                          const HomClass<typename Cat::Morphism>& cls) {
    std::vector<typename Cat::Morphism> members;
    members.reserve(cls.members.size());
    for (const auto& m : cls.members) members.push_back(Cat::compose(w, m));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto rep = members.front();
    return {std::move(rep), std::move(members)};
}

/// True iff every class of hom(A, B) has exactly |G_A| members.
template <class Cat>
bool class_size_law(const typename Cat::Object& a, const typename Cat::Object& b, const GroupFamily& family) {
    const auto group_size = family.group(a).size();
    for (const auto& c : hom_classes<Cat>(a, b, family))
        if (c.size() != group_size) return false;
    return true;
}

}  // namespace ramsey
