#pragma once

// Colorings that move between hom(A, C) and hom(A, C) / ~_G, together with
// recount-based verifiers for the bounds each transformation promises.
//
// Plain colorings are vectors of ints indexed like ArrowInstance::classes_ac
// or ArrowInstance::hom_ac. Structured colorings use ColorToken.

#include "ramsey/arrowcheck.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

/// A set of plain colors, optionally tagged with an index into G_A.
struct ColorToken {
    std::uint64_t color_set = 0;
    int group_element = -1;

    static ColorToken plain(int color) { return {std::uint64_t{1} << color, -1}; }

    friend auto operator<=>(const ColorToken&, const ColorToken&) = default;
};

std::string to_string(const ColorToken& token);

/// Number of distinct values of `coloring` on the indices in `edge`.
template <class T>
int distinct_on(std::span<const int> edge, std::span<const T> coloring) {
    std::vector<T> seen;
    seen.reserve(edge.size());
    for (int i : edge) seen.push_back(coloring[static_cast<std::size_t>(i)]);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

/// Renumbers arbitrary tokens to 0, 1, ... by first occurrence.
std::vector<int> normalize_tokens(std::span<const ColorToken> tokens);

namespace detail {
inline void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want) throw Error(ErrorCode::invalid_argument, std::string(what) + " has the wrong length");
}
inline void require_plain_colors(std::span<const int> chi) {
    for (int c : chi)
        if (c < 0 || c >= 64) throw Error(ErrorCode::invalid_argument, "colors must lie in 0..63");
}
}  // namespace detail

/// chi'(f) = chi([f]).
template <class Cat>
std::vector<int> quotient_coloring(const ArrowInstance<Cat>& inst, std::span<const int> chi_classes) {
    detail::require_size(chi_classes.size(), inst.classes_ac.size(), "class coloring");
    std::vector<int> out(inst.hom_ac.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = chi_classes[static_cast<std::size_t>(inst.class_of[i])];
    return out;
}

/// [f] gets the set of colors chi takes on f . G_A. Writes into `out`, which is
/// resized to the number of classes.
template <class Cat>
void powerset_coloring_into(const ArrowInstance<Cat>& inst, std::span<const int> chi_hom, std::vector<ColorToken>& out) {
    out.assign(inst.classes_ac.size(), ColorToken{});
    for (std::size_t i = 0; i < inst.hom_ac.size(); ++i)
        out[static_cast<std::size_t>(inst.class_of[i])].color_set |= std::uint64_t{1} << chi_hom[i];
}

template <class Cat>
std::vector<ColorToken> powerset_coloring(const ArrowInstance<Cat>& inst, std::span<const int> chi_hom) {
    detail::require_size(chi_hom.size(), inst.hom_ac.size(), "morphism coloring");
    detail::require_plain_colors(chi_hom);
    std::vector<ColorToken> out;
    powerset_coloring_into(inst, chi_hom, out);
    return out;
}

/// xi(f) = (chi([f]), alpha) for the unique alpha in G_A with f = rep . alpha.
template <class Cat>
void factor_coloring_into(const ArrowInstance<Cat>& inst, std::span<const int> chi_classes, std::vector<ColorToken>& out) {
    if (!inst.unique_factorization)
        throw Error(ErrorCode::internal, "factorization through class representatives is not unique");
    out.resize(inst.hom_ac.size());
    for (std::size_t i = 0; i < inst.hom_ac.size(); ++i)
        out[i] = ColorToken{std::uint64_t{1} << chi_classes[static_cast<std::size_t>(inst.class_of[i])], inst.alpha_of[i]};
}

template <class Cat>
std::vector<ColorToken> factor_coloring(const ArrowInstance<Cat>& inst, std::span<const int> chi_classes) {
    detail::require_size(chi_classes.size(), inst.classes_ac.size(), "class coloring");
    detail::require_plain_colors(chi_classes);
    std::vector<ColorToken> out;
    factor_coloring_into(inst, chi_classes, out);
    return out;
}

/// Fewest colors any w : B -> C sees on w . classes(A, B).
template <class Cat, class T>
int min_colors_on_classes(const ArrowInstance<Cat>& inst, std::span<const T> coloring) {
    int best = std::numeric_limits<int>::max();
    for (const auto& e : inst.class_edges) best = std::min(best, distinct_on<T>(e, coloring));
    return best;
}

/// Fewest colors any w : B -> C sees on w . hom(A, B).
template <class Cat, class T>
int min_colors_on_homs(const ArrowInstance<Cat>& inst, std::span<const T> coloring) {
    int best = std::numeric_limits<int>::max();
    for (const auto& e : inst.hom_edges) best = std::min(best, distinct_on<T>(e, coloring));
    return best;
}

/// For every w: |chi'(w . hom(A, B))| = |chi(w . classes(A, B))|.
template <class Cat>
bool verify_quotient(const ArrowInstance<Cat>& inst, std::span<const int> chi_classes, std::span<const int> chi_hom) {
    for (std::size_t w = 0; w < inst.hom_bc.size(); ++w)
        if (distinct_on<int>(inst.hom_edges[w], chi_hom) != distinct_on<int>(inst.class_edges[w], chi_classes)) return false;
    return true;
}

/// For every w and every t: at most t tokens on w . classes(A, B) forces at
/// most t |G_A| colors on w . hom(A, B).
template <class Cat>
bool verify_powerset(const ArrowInstance<Cat>& inst, std::span<const int> chi_hom, std::span<const ColorToken> tokens) {
    const int g = static_cast<int>(inst.group_a.size());
    for (std::size_t w = 0; w < inst.hom_bc.size(); ++w)
        if (distinct_on<int>(inst.hom_edges[w], chi_hom) > g * distinct_on<ColorToken>(inst.class_edges[w], tokens))
            return false;
    return true;
}

/// If every w sees at least n colors of chi, every w sees at least n |G_A|
/// values of xi.
template <class Cat>
bool verify_factor(const ArrowInstance<Cat>& inst, std::span<const int> chi_classes, std::span<const ColorToken> xi) {
    const int n = min_colors_on_classes<Cat, int>(inst, chi_classes);
    const int g = static_cast<int>(inst.group_a.size());
    return min_colors_on_homs<Cat, ColorToken>(inst, xi) >= n * g;
}

/// A 2-coloring of classes(A, C) on which every w : A -> C sees both colors
/// on w . classes(A, A). `inst` must have B = A; `alpha` is an automorphism
/// of A outside G_A.
std::vector<int> orbit_two_coloring(const ArrowInstance<DirectCategory>& inst, const std::vector<int>& alpha);

std::vector<int> orbit_two_coloring(const Structure& a, const Structure& c, const GroupFamily& family,
                                    const std::vector<int>& alpha);

/// Every w . classes(A, A) sees both colors.
bool verify_orbit_coloring(const ArrowInstance<DirectCategory>& inst, std::span<const int> chi);

}  // namespace ramsey
