#include "ramsey/approx.hpp"

#include "ramsey/catalog.hpp"

#include <numeric>

namespace ramsey {

namespace {

std::string int_list(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

// Strictly increasing sequences of the given length with entries below bound.
std::vector<std::vector<int>> increasing_sequences(int length, int bound) {
    std::vector<std::vector<int>> out;
    if (length > bound || length < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(length));
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        out.push_back(cur);
        int i = length - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound - length + i) --i;
        if (i < 0) return out;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < length; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void require_linear_order(const Structure& a) {
    if (a.signature().size() != 0 || !a.has_order())
        throw Error(ErrorCode::invalid_argument, "linear-order scheme objects must be finite linear orders");
}

}  // namespace

OmegaEmbedding::OmegaEmbedding(std::vector<int> targets) : targets_(std::move(targets)) {
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        if (targets_[i] < 0) throw Error(ErrorCode::invalid_argument, "omega targets must be nonnegative");
        if (i > 0 && targets_[i] <= targets_[i - 1])
            throw Error(ErrorCode::invalid_argument, "omega targets must be strictly increasing");
    }
}

std::string describe(const Structure& s) {
    if (s.signature().size() == 0) return "lo:" + std::to_string(s.size());
    std::string out = "{n=" + std::to_string(s.size());
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        out += " " + s.signature().relations()[r].name + ":";
        for (const auto& t : s.tuples(r)) out += int_list(t);
    }
    return out + "}";
}

std::string describe(const Embedding& e) { return int_list(e.map()); }
std::string describe(const FiniteOrder& a) { return std::to_string(a.size); }
std::string describe(const RigidSurjection& f) { return int_list(f.values()) + "->" + std::to_string(f.cod()); }
std::string describe(const DualMorphism& f) { return describe(f.surjection()); }
std::string describe(const OmegaEmbedding& u) { return int_list(u.targets()); }

LinearOrderScheme::LinearOrderScheme(int max_size, int window) : max_size_(max_size), window_(window) {
    if (max_size < 1 || window < 1) throw Error(ErrorCode::invalid_argument, "scheme caps must be positive");
}

std::vector<Structure> LinearOrderScheme::objects() const {
    std::vector<Structure> out;
    for (int n = 1; n <= max_size_; ++n) out.push_back(linear_order(n));
    return out;
}

Structure LinearOrderScheme::extend(const Structure& a) const {
    require_linear_order(a);
    return linear_order(a.size() + 1);
}

Embedding LinearOrderScheme::lift(const Embedding& f) const {
    auto map = f.map();
    map.push_back(f.cod().size());
    return Embedding(extend(f.dom()), extend(f.cod()), std::move(map));
}

std::vector<OmegaEmbedding> LinearOrderScheme::probes(const Structure& fb) const {
    std::vector<OmegaEmbedding> out;
    for (auto& seq : increasing_sequences(fb.size(), window_)) out.emplace_back(std::move(seq));
    return out;
}

OmegaEmbedding LinearOrderScheme::act(const OmegaEmbedding& u, const Embedding& f_prime) const {
    if (f_prime.cod().size() != u.dom_size()) throw Error(ErrorCode::composition_mismatch, "probe and morphism do not compose");
    std::vector<int> t;
    for (int x : f_prime.map()) t.push_back(u(x));
    return OmegaEmbedding(std::move(t));
}

Approximation<Structure, Embedding> LinearOrderScheme::phi(const Structure& a, const OmegaEmbedding& u) const {
    require_linear_order(a);
    if (u.dom_size() != a.size() + 1) throw Error(ErrorCode::composition_mismatch, "probe is not defined on F(A)");
    const int m = u(a.size());
    std::vector<int> map(u.targets().begin(), u.targets().begin() + a.size());
    auto cod = linear_order(m);
    Embedding e(a, cod, std::move(map));
    return {std::move(cod), std::move(e)};
}

OmegaEmbedding LinearOrderScheme::iota(const Structure& b) const {
    std::vector<int> t(static_cast<std::size_t>(b.size()));
    std::iota(t.begin(), t.end(), 0);
    return OmegaEmbedding(std::move(t));
}

Approximation<Structure, Embedding> LinearOrderScheme::star(const OmegaEmbedding& h, const Embedding& f) const {
    const Structure& b = f.cod();
    const auto io = iota(extend(b));
    const int need = io.targets().back() + 1;
    if (h.dom_size() < need)
        throw CapExceeded("h must be given on at least " + std::to_string(need) + " points",
                          static_cast<std::uint64_t>(need), static_cast<std::uint64_t>(h.dom_size()));
    std::vector<int> t;
    for (int x : io.targets()) t.push_back(h(x));
    return approx_then(*this, b, OmegaEmbedding(std::move(t)), f);
}

DualOrderScheme::DualOrderScheme(int max_size, int window) : max_size_(max_size), window_(window) {
    if (max_size < 1 || window < 1) throw Error(ErrorCode::invalid_argument, "scheme caps must be positive");
}

std::vector<FiniteOrder> DualOrderScheme::objects() const {
    std::vector<FiniteOrder> out;
    for (int n = 1; n <= max_size_; ++n) out.push_back({n});
    return out;
}

std::vector<RigidSurjection> DualOrderScheme::probes(const FiniteOrder& fb) const {
    std::vector<RigidSurjection> out;
    for (int n = fb.size; n <= window_; ++n)
        for (auto& u : enumerate_rigid_surjections(n, fb.size)) out.push_back(std::move(u));
    return out;
}

Approximation<FiniteOrder, DualMorphism> DualOrderScheme::phi(const FiniteOrder& a, const RigidSurjection& u) const {
    if (u.cod() != a.size + 1) throw Error(ErrorCode::composition_mismatch, "probe is not onto F(A)");
    auto r = phi_restrict(u);
    return {FiniteOrder{r.dom()}, DualMorphism(std::move(r))};
}

Approximation<FiniteOrder, DualMorphism> DualOrderScheme::star(const RigidSurjection& h, const DualMorphism& f) const {
    const FiniteOrder b = f.cod();
    const int need = b.size + 1;
    if (h.cod() < need)
        throw CapExceeded("h must map onto at least " + std::to_string(need) + " points",
                          static_cast<std::uint64_t>(need), static_cast<std::uint64_t>(h.cod()));
    return approx_then(*this, b, compose_rsurj(iota(extend(b), h.cod()), h), f);
}

std::vector<Structure> ordered_age_members(const Age& age, int max_size) {
    if (age.kind() == AgeKind::metric) throw Error(ErrorCode::unsupported, "metric ages are not enumerated");
    if (max_size > 4) throw Error(ErrorCode::invalid_argument, "ordered age members are enumerated up to 4 points");
    std::vector<Structure> out;
    for (int n = 1; n <= max_size; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) pairs.emplace_back(i, j);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
            std::vector<Tuple> edges;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1U) edges.push_back({pairs[k].first, pairs[k].second});
            Structure s(binary_signature(), n, {std::move(edges)}, order);
            if (age.contains(s)) out.push_back(std::move(s));
        }
    }
    return out;
}

EnumeratedScheme::EnumeratedScheme(EnumeratedStructure stage, int max_size)
    : stage_(std::move(stage)), j_(Age(stage_.age)), max_size_(max_size) {
    if (!stage_.structure) throw Error(ErrorCode::invalid_argument, "stage has no structure");
    const Structure& s = *stage_.structure;
    const int n = s.size();
    prefixes_.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        std::vector<Tuple> edges;
        for (const auto& t : s.tuples(0))
            if (t[0] < m && t[1] < m) edges.push_back(t);
        std::vector<int> order(static_cast<std::size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        prefixes_[static_cast<std::size_t>(m)] =
            std::make_shared<const Structure>(s.signature(), m, std::vector<std::vector<Tuple>>{std::move(edges)}, order);
    }
}

std::vector<Structure> EnumeratedScheme::objects() const { return ordered_age_members(j_.age(), max_size_); }

const Structure& EnumeratedScheme::prefix(int m) const {
    if (m < 1 || m >= static_cast<int>(prefixes_.size()))
        throw Error(ErrorCode::invalid_argument, "prefix length outside the stage");
    return *prefixes_[static_cast<std::size_t>(m)];
}

std::vector<Embedding> EnumeratedScheme::probes(const Structure& fb) const {
    return enumerate_embeddings(std::make_shared<const Structure>(fb), stage_.structure);
}

Approximation<Structure, Embedding> EnumeratedScheme::phi(const Structure& a, const Embedding& u) const {
    if (u.cod_ptr() != stage_.structure && !(u.cod() == *stage_.structure))
        throw Error(ErrorCode::invalid_argument, "probe does not land in the stage");
    if (u.dom().size() != a.size() + 1) throw Error(ErrorCode::composition_mismatch, "probe is not defined on F(A)");
    const int top = u(a.size());
    std::vector<int> map(u.map().begin(), u.map().begin() + a.size());
    const auto& cod = prefixes_.at(static_cast<std::size_t>(top));
    Embedding e(std::make_shared<const Structure>(a), cod, std::move(map));
    return {*cod, std::move(e)};
}

Embedding EnumeratedScheme::iota(const Structure& b) const {
    auto all = enumerate_embeddings(std::make_shared<const Structure>(b), stage_.structure);
    if (all.empty()) throw Error(ErrorCode::invalid_argument, "object does not embed in the stage");
    return all.front();
}

Approximation<Structure, Embedding> EnumeratedScheme::star(const std::vector<int>& h, const Embedding& f) const {
    const Structure& b = f.cod();
    const auto fb = std::make_shared<const Structure>(extend(b));
    const auto io = iota(*fb);
    const int need = *std::max_element(io.map().begin(), io.map().end()) + 1;
    if (static_cast<int>(h.size()) < need)
        throw CapExceeded("h must be given on at least " + std::to_string(need) + " points",
                          static_cast<std::uint64_t>(need), static_cast<std::uint64_t>(h.size()));
    std::vector<int> map;
    for (int x : io.map()) map.push_back(h[static_cast<std::size_t>(x)]);
    for (int x : map)
        if (x < 0 || x >= stage_.size()) throw Error(ErrorCode::invalid_argument, "h leaves the stage");
    return approx_then(*this, b, Embedding(fb, stage_.structure, std::move(map)), f);
}

}  // namespace ramsey
