#include "ramsey/rigidsurj.hpp"

#include "ramsey/error.hpp"

#include <string>

namespace ramsey {

bool is_rigid_surjection(int cod, std::span<const int> values) {
    if (cod < 1 || values.empty()) return false;
    int next = 0;  // least value not yet seen
    for (int v : values) {
        if (v < 0 || v > next || v >= cod) return false;
        if (v == next) ++next;
    }
    return next == cod;
}

RigidSurjection make_unchecked(int cod, std::vector<int> values) {
    return RigidSurjection(RigidSurjection::Unchecked{}, cod, std::move(values));
}

RigidSurjection::RigidSurjection(int cod, std::vector<int> values) : cod_(cod), values_(std::move(values)) {
    if (!is_rigid_surjection(cod_, values_))
        throw Error(ErrorCode::invalid_argument, "values do not form a rigid surjection onto " + std::to_string(cod_));
}

RigidSurjection RigidSurjection::identity(int n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "identity on an empty order");
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i;
    return make_unchecked(n, std::move(values));
}

int RigidSurjection::first_occurrence(int b) const {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == b) return static_cast<int>(i);
    throw Error(ErrorCode::invalid_argument, "value " + std::to_string(b) + " not in the codomain");
}

std::vector<RigidSurjection> enumerate_rigid_surjections(int n, int m) {
    if (m < 1) throw Error(ErrorCode::invalid_argument, "rigid surjections need a nonempty codomain");
    if (n < m) throw Error(ErrorCode::invalid_argument, "no rigid surjection from a smaller order");
    std::vector<RigidSurjection> out;
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    // Restricted growth strings: values[i] <= 1 + max(values[0..i-1]).
    auto rec = [&](auto& self, int i, int used) -> void {
        if (used + (n - i) < m) return;
        if (i == n) {
            if (used == m) out.push_back(make_unchecked(m, values));
            return;
        }
        for (int v = 0; v <= used && v < m; ++v) {
            values[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v == used ? used + 1 : used);
        }
    };
    values[0] = 0;
    rec(rec, 1, 1);
    return out;
}

RigidSurjection compose_rsurj(const RigidSurjection& f, const RigidSurjection& g) {
    if (g.cod() != f.dom())
        throw Error(ErrorCode::composition_mismatch, "cod(g) = " + std::to_string(g.cod()) +
                                                         " but dom(f) = " + std::to_string(f.dom()));
    std::vector<int> values(g.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(g.values()[i]);
    if (!is_rigid_surjection(f.cod(), values))
        throw Error(ErrorCode::internal, "composite of rigid surjections is not rigid");
    return make_unchecked(f.cod(), std::move(values));
}

RigidSurjection canonical_pi(int m, int n) {
    if (m < 1) throw Error(ErrorCode::invalid_argument, "canonical_pi needs m >= 1");
    if (n < m) throw Error(ErrorCode::invalid_argument, "canonical_pi needs n >= m");
    std::vector<int> values(static_cast<std::size_t>(n), m - 1);
    for (int j = 0; j < m; ++j) values[static_cast<std::size_t>(j)] = j;
    return make_unchecked(m, std::move(values));
}

RigidSurjection extend_prime(const RigidSurjection& f) {
    std::vector<int> values = f.values();
    values.push_back(f.cod());
    return make_unchecked(f.cod() + 1, std::move(values));
}

RigidSurjection phi_restrict(const RigidSurjection& f) {
    if (f.cod() < 2) throw Error(ErrorCode::invalid_argument, "phi_restrict needs a codomain of at least 2 points");
    const int r = f.cod() - 1;
    const int d = f.first_occurrence(r);
    std::vector<int> values(f.values().begin(), f.values().begin() + d);
    if (!is_rigid_surjection(r, values)) throw Error(ErrorCode::internal, "restriction lost rigidity");
    return make_unchecked(r, std::move(values));
}

RigidSurjection star_finite(const RigidSurjection& h, const RigidSurjection& f) {
    const int s = f.dom();
    if (h.cod() < s + 1)
        throw Error(ErrorCode::invalid_argument, "star_finite needs cod(h) >= " + std::to_string(s + 1));
    return compose_rsurj(f, phi_restrict(compose_rsurj(canonical_pi(s + 1, h.cod()), h)));
}

}  // namespace ramsey
