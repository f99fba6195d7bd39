#include "ramsey/category.hpp"

namespace ramsey {

const char* to_string(CategoryKind kind) {
    return kind == CategoryKind::direct ? "direct" : "dual";
}

std::vector<DualMorphism> DualCategory::hom(FiniteOrder a, FiniteOrder b) {
    std::vector<DualMorphism> out;
    if (a.size < 1 || b.size < a.size) return out;
    for (auto& s : enumerate_rigid_surjections(b.size, a.size)) out.emplace_back(std::move(s));
    return out;
}

DualMorphism DualCategory::compose(const DualMorphism& g, const DualMorphism& f) {
    return DualMorphism(compose_rsurj(f.surjection(), g.surjection()));
}

}  // namespace ramsey
