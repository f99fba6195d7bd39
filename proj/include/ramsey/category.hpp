#pragma once

// The two categories the workbench computes in.
//
//   DirectCategory: finite relational structures and embeddings.
//   DualCategory:   finite linear orders with hom(A, B) = RSurj(B, A), i.e. the
//                   opposite of the category of rigid surjections.
//
// Both expose the same static surface so that quotients and arrow checks can
// be written once as templates.

#include "ramsey/relstruct.hpp"
#include "ramsey/rigidsurj.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

enum class CategoryKind { direct, dual };

const char* to_string(CategoryKind kind);

struct FiniteOrder {
    int size = 0;

    friend auto operator<=>(const FiniteOrder&, const FiniteOrder&) = default;
};

/// A morphism A -> B of the dual category, carried by a rigid surjection B ->> A.
class DualMorphism {
public:
    explicit DualMorphism(RigidSurjection surjection) : surjection_(std::move(surjection)) {}

    FiniteOrder dom() const noexcept { return {surjection_.cod()}; }
    FiniteOrder cod() const noexcept { return {surjection_.dom()}; }
    const RigidSurjection& surjection() const noexcept { return surjection_; }
    const std::vector<int>& map() const noexcept { return surjection_.values(); }

    friend bool operator==(const DualMorphism&, const DualMorphism&) = default;
    friend std::strong_ordering operator<=>(const DualMorphism& a, const DualMorphism& b) {
        return a.surjection_ <=> b.surjection_;
    }

private:
    RigidSurjection surjection_;
};

struct DirectCategory {
    using Object = Structure;
    using Morphism = Embedding;
    static constexpr CategoryKind kind = CategoryKind::direct;

    static std::vector<Embedding> hom(const Structure& a, const Structure& b) { return enumerate_embeddings(a, b); }
    static Embedding compose(const Embedding& g, const Embedding& f) { return compose_embeddings(g, f); }
    static Embedding identity(const Structure& a) { return identity_embedding(a); }
    static std::vector<Embedding> automorphisms(const Structure& a) { return ramsey::automorphisms(a); }
    static int object_size(const Structure& a) { return a.size(); }

    /// Map of g . f from the maps of g and f.
    static std::vector<int> compose_maps(std::span<const int> g, std::span<const int> f) {
        std::vector<int> out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
        return out;
    }
};

struct DualCategory {
    using Object = FiniteOrder;
    using Morphism = DualMorphism;
    static constexpr CategoryKind kind = CategoryKind::dual;

    /// RSurj(b, a), empty when b < a.
    static std::vector<DualMorphism> hom(FiniteOrder a, FiniteOrder b);
    /// g . f for f : A -> B and g : B -> C is the surjection f o g : C ->> A.
    static DualMorphism compose(const DualMorphism& g, const DualMorphism& f);
    static DualMorphism identity(FiniteOrder a) { return DualMorphism(RigidSurjection::identity(a.size)); }
    /// Finite linear orders are rigid.
    static std::vector<DualMorphism> automorphisms(FiniteOrder a) { return {identity(a)}; }
    static int object_size(FiniteOrder a) { return a.size; }

    static std::vector<int> compose_maps(std::span<const int> g, std::span<const int> f) {
        std::vector<int> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
        return out;
    }
};

}  // namespace ramsey
