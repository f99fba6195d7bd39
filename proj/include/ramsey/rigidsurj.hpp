#pragma once

// Rigid surjections between finite linear orders n = {0 < ... < n-1}.
//
// A surjection f : n -> m is rigid when the first occurrence of b precedes
// the first occurrence of b' whenever b < b'. Maps out of omega are only ever
// handled through finite truncations.

#include <compare>
#include <span>
#include <vector>

namespace ramsey {

class RigidSurjection {
public:
    /// Validating constructor: `values` must hit every element of 0..cod-1
    /// with first occurrences in increasing order.
    RigidSurjection(int cod, std::vector<int> values);

    static RigidSurjection identity(int n);

    int dom() const noexcept { return static_cast<int>(values_.size()); }
    int cod() const noexcept { return cod_; }
    const std::vector<int>& values() const noexcept { return values_; }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

    /// Position of the first occurrence of b.
    int first_occurrence(int b) const;

    friend bool operator==(const RigidSurjection&, const RigidSurjection&) = default;
    friend std::strong_ordering operator<=>(const RigidSurjection& a, const RigidSurjection& b) {
        if (auto c = a.values_ <=> b.values_; c != 0) return c;
        return a.cod_ <=> b.cod_;
    }

private:
    struct Unchecked {};
    RigidSurjection(Unchecked, int cod, std::vector<int> values) : cod_(cod), values_(std::move(values)) {}
    friend RigidSurjection make_unchecked(int cod, std::vector<int> values);

    int cod_ = 0;
    std::vector<int> values_;
};

bool is_rigid_surjection(int cod, std::span<const int> values);

/// RSurj(n, m) in lexicographic order of value vectors. Requires n >= m >= 1.
std::vector<RigidSurjection> enumerate_rigid_surjections(int n, int m);

/// f after g, i.e. i -> f(g(i)). Requires cod(g) == dom(f).
RigidSurjection compose_rsurj(const RigidSurjection& f, const RigidSurjection& g);

/// [0, 1, ..., m-1, m-1, ..., m-1] of length n. Requires n >= m >= 1.
RigidSurjection canonical_pi(int m, int n);

/// f : s -> t extended to s+1 -> t+1 by sending the new last point to t.
RigidSurjection extend_prime(const RigidSurjection& f);

/// For f : n -> r+1, the restriction of f to the positions before the first
/// occurrence of r, viewed as a rigid surjection onto r. Requires cod >= 2.
RigidSurjection phi_restrict(const RigidSurjection& f);

/// Finite form of h (*) f = f o phi_s(pi_{s+1} o h) for h : n -> n' and
/// f : s -> r. Requires n' >= s+1.
RigidSurjection star_finite(const RigidSurjection& h, const RigidSurjection& f);

}  // namespace ramsey
