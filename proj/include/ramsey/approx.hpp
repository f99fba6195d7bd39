#pragma once

// Approximation schemes (F, Phi, iota, lift) over a finite window of the
// infinite object S, the h * f composite, and exhaustive checkers for
//
//     Phi_A(u . f') = Phi_B(u) . f      (codomains included)
//
// A scheme type provides:
//   Object, Morphism, Probe             Probe = a morphism F(B) -> S in the window
//   objects()                           all objects within the caps
//   hom(a, b), compose(g, f), identity(a)
//   extend(a)                           F(a)
//   lift(f)                             f' : F(A) -> F(B)
//   probes(fb)                          every u : F(B) -> S in the window
//   act(u, f')                          u . f'
//   phi(a, u)                           Approximation {codomain, morphism a -> codomain}
//   describe(...)                       stable text for reports

#include "ramsey/category.hpp"
#include "ramsey/error.hpp"
#include "ramsey/fraisse.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ramsey {

template <class Object, class Morphism>
struct Approximation {
    Object codomain;
    Morphism map;

    friend bool operator==(const Approximation& a, const Approximation& b) {
        return a.codomain == b.codomain && a.map == b.map;
    }
};

/// A finite linear order embedded in omega: strictly increasing targets.
class OmegaEmbedding {
public:
    explicit OmegaEmbedding(std::vector<int> targets);

    int dom_size() const noexcept { return static_cast<int>(targets_.size()); }
    const std::vector<int>& targets() const noexcept { return targets_; }
    int operator()(int i) const { return targets_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const OmegaEmbedding&, const OmegaEmbedding&) = default;

private:
    std::vector<int> targets_;
};

std::string describe(const Structure& s);
std::string describe(const Embedding& e);
std::string describe(const FiniteOrder& a);
std::string describe(const DualMorphism& f);
std::string describe(const RigidSurjection& f);
std::string describe(const OmegaEmbedding& u);

template <class O, class M>
std::string describe(const Approximation<O, M>& x) {
    return "cod=" + describe(x.codomain) + " map=" + describe(x.map);
}

/// Linear orders inside omega. F adds a top point; Phi cuts at the image of
/// the top point.
class LinearOrderScheme {
public:
    using Object = Structure;
    using Morphism = Embedding;
    using Probe = OmegaEmbedding;

    /// Objects have 1..max_size points; probes take values below `window`.
    LinearOrderScheme(int max_size, int window);

    std::string name() const { return "linear"; }
    int window() const noexcept { return window_; }

    std::vector<Object> objects() const;
    std::vector<Morphism> hom(const Object& a, const Object& b) const { return enumerate_embeddings(a, b); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return compose_embeddings(g, f); }
    Morphism identity(const Object& a) const { return identity_embedding(a); }
    Object extend(const Object& a) const;
    Morphism lift(const Morphism& f) const;
    std::vector<Probe> probes(const Object& fb) const;
    Probe act(const Probe& u, const Morphism& f_prime) const;
    Approximation<Object, Morphism> phi(const Object& a, const Probe& u) const;
    Probe iota(const Object& b) const;

    /// h * f for h given by its first targets. Throws CapExceeded when h is
    /// too short to be applied to iota(F(B)).
    Approximation<Object, Morphism> star(const OmegaEmbedding& h, const Morphism& f) const;

private:
    int max_size_;
    int window_;
};

/// Finite orders in the dual category, S = omega seen through rigid
/// surjections n ->> F(B) with n up to the window.
class DualOrderScheme {
public:
    using Object = FiniteOrder;
    using Morphism = DualMorphism;
    using Probe = RigidSurjection;

    DualOrderScheme(int max_size, int window);

    std::string name() const { return "dual-linear"; }
    int window() const noexcept { return window_; }

    std::vector<Object> objects() const;
    std::vector<Morphism> hom(const Object& a, const Object& b) const { return DualCategory::hom(a, b); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return DualCategory::compose(g, f); }
    Morphism identity(const Object& a) const { return DualCategory::identity(a); }
    Object extend(const Object& a) const { return {a.size + 1}; }
    Morphism lift(const Morphism& f) const { return DualMorphism(extend_prime(f.surjection())); }
    std::vector<Probe> probes(const Object& fb) const;
    Probe act(const Probe& u, const Morphism& f_prime) const { return compose_rsurj(f_prime.surjection(), u); }
    Approximation<Object, Morphism> phi(const Object& a, const Probe& u) const;
    /// The surjection 0, 1, ..., b-1, b-1, ... truncated to `length` points.
    Probe iota(const Object& b, int length) const { return canonical_pi(b.size, length); }

    /// h * f for a truncation h : n ->> n'. Throws CapExceeded when n' is
    /// smaller than |F(B)|.
    Approximation<Object, Morphism> star(const RigidSurjection& h, const Morphism& f) const;

private:
    int max_size_;
    int window_;
};

/// Ordered members of an age inside a finite stage of its limit. F is the
/// natural one-point extension with the new point on top; Phi restricts to A
/// and cuts the stage just below the image of the new point.
class EnumeratedScheme {
public:
    using Object = Structure;
    using Morphism = Embedding;
    using Probe = Embedding;

    EnumeratedScheme(EnumeratedStructure stage, int max_size);

    std::string name() const { return std::string("enumerated:") + to_string(stage_.age); }
    const EnumeratedStructure& stage() const noexcept { return stage_; }
    const OnePointExtension& extension() const noexcept { return j_; }

    std::vector<Object> objects() const;
    std::vector<Morphism> hom(const Object& a, const Object& b) const { return enumerate_embeddings(a, b); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return compose_embeddings(g, f); }
    Morphism identity(const Object& a) const { return identity_embedding(a); }
    Object extend(const Object& a) const { return j_.apply_ordered(a); }
    Morphism lift(const Morphism& f) const { return j_.apply(f); }
    std::vector<Probe> probes(const Object& fb) const;
    Probe act(const Probe& u, const Morphism& f_prime) const { return compose_embeddings(u, f_prime); }
    Approximation<Object, Morphism> phi(const Object& a, const Probe& u) const;
    /// The lexicographically least ordered embedding of b into the stage.
    Probe iota(const Object& b) const;
    /// The first m points of the stage.
    const Structure& prefix(int m) const;

    /// h * f where h is a self-map of the stage given on its first points.
    Approximation<Object, Morphism> star(const std::vector<int>& h, const Morphism& f) const;

private:
    EnumeratedStructure stage_;
    OnePointExtension j_;
    int max_size_;
    std::vector<std::shared_ptr<const Structure>> prefixes_;
};

/// Ordered structures of the age on 1..max_size points with the identity order.
std::vector<Structure> ordered_age_members(const Age& age, int max_size);

/// Phi_B(u) . f
template <class Scheme>
Approximation<typename Scheme::Object, typename Scheme::Morphism> approx_then(
    const Scheme& s, const typename Scheme::Object& b, const typename Scheme::Probe& u,
    const typename Scheme::Morphism& f) {
    auto pb = s.phi(b, u);
    return {pb.codomain, s.compose(pb.map, f)};
}

/// Some f' : F(A) -> F(B) with Phi_A(u . f') = Phi_B(u) . f. The scheme's own
/// lift is tried first, then all of hom(F(A), F(B)) in order.
template <class Scheme>
std::optional<typename Scheme::Morphism> find_lift(const Scheme& s, const typename Scheme::Object& a,
                                                   const typename Scheme::Object& b,
                                                   const typename Scheme::Morphism& f,
                                                   const typename Scheme::Probe& u) {
    const auto want = approx_then(s, b, u, f);
    auto own = s.lift(f);
    if (s.phi(a, s.act(u, own)) == want) return own;
    for (auto& cand : s.hom(s.extend(a), s.extend(b)))
        if (s.phi(a, s.act(u, cand)) == want) return cand;
    return std::nullopt;
}

struct SchemeFailure {
    std::string instance;
    std::string expected;
    std::string got;
};

struct SchemeReport {
    std::string scheme;
    std::string check;
    std::uint64_t checked = 0;
    std::vector<SchemeFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

// Runs task(i, report) for i in [0, n) across workers and concatenates the
// partial reports in task order.
template <class Task>
SchemeReport run_tasks(std::size_t n, int workers, Task task) {
    std::vector<SchemeReport> parts(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) task(i, parts[i]);
    };
    const int w = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1))));
    if (w == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    SchemeReport out;
    for (auto& p : parts) {
        out.checked += p.checked;
        for (auto& f : p.failures) out.failures.push_back(std::move(f));
    }
    return out;
}

}  // namespace detail

/// Checks the approximation identity for every A, B within the caps, every
/// f : A -> B and every probe u : F(B) -> S in the window.
template <class Scheme>
SchemeReport verify_scheme(const Scheme& s, int workers = 1) {
    using Object = typename Scheme::Object;
    const std::vector<Object> objs = s.objects();
    std::vector<Object> extended;
    std::vector<std::vector<typename Scheme::Probe>> probes;
    for (const auto& b : objs) {
        extended.push_back(s.extend(b));
        probes.push_back(s.probes(extended.back()));
    }
    const std::size_t n = objs.size();
    auto report = detail::run_tasks(n * n, workers, [&](std::size_t task, SchemeReport& part) {
        const auto& a = objs[task / n];
        const std::size_t bi = task % n;
        const auto& b = objs[bi];
        for (const auto& f : s.hom(a, b)) {
            const auto f_prime = s.lift(f);
            for (const auto& u : probes[bi]) {
                ++part.checked;
                const auto want = approx_then(s, b, u, f);
                const auto got = s.phi(a, s.act(u, f_prime));
                if (got == want) continue;
                if (find_lift(s, a, b, f, u)) continue;
                part.failures.push_back({"A=" + describe(a) + " B=" + describe(b) + " f=" + describe(f) +
                                             " u=" + describe(u),
                                         describe(want), describe(got)});
            }
        }
    });
    report.scheme = s.name();
    report.check = "approximation";
    return report;
}

/// lift(id) = id and lift(g . f) = lift(g) . lift(f) within the caps.
template <class Scheme>
SchemeReport verify_lift_functoriality(const Scheme& s, int workers = 1) {
    using Object = typename Scheme::Object;
    const std::vector<Object> objs = s.objects();
    const std::size_t n = objs.size();
    auto report = detail::run_tasks(n * n, workers, [&](std::size_t task, SchemeReport& part) {
        const auto& a = objs[task / n];
        const auto& b = objs[task % n];
        if (task % n == 0) {
            ++part.checked;
            if (!(s.lift(s.identity(a)) == s.identity(s.extend(a))))
                part.failures.push_back({"identity A=" + describe(a), describe(s.identity(s.extend(a))),
                                         describe(s.lift(s.identity(a)))});
        }
        const auto homs_ab = s.hom(a, b);
        if (homs_ab.empty()) return;
        for (const auto& c : objs) {
            const auto homs_bc = s.hom(b, c);
            for (const auto& f : homs_ab)
                for (const auto& g : homs_bc) {
                    ++part.checked;
                    const auto lhs = s.lift(s.compose(g, f));
                    const auto rhs = s.compose(s.lift(g), s.lift(f));
                    if (!(lhs == rhs))
                        part.failures.push_back({"f=" + describe(f) + " g=" + describe(g), describe(rhs), describe(lhs)});
                }
        }
    });
    report.scheme = s.name();
    report.check = "lift-functoriality";
    return report;
}

}  // namespace ramsey
