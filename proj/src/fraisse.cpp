#include "ramsey/fraisse.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

namespace {

// Dense adjacency for the single relation E, convenient while a stage grows.
class Adjacency {
public:
    explicit Adjacency(int n = 0) { resize(n); }

    explicit Adjacency(const Structure& s) {
        resize(s.size());
        for (const auto& t : s.tuples(0)) set(t[0], t[1]);
    }

    int size() const { return n_; }

    void resize(int n) {
        std::vector<std::vector<char>> next(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < std::min(n, n_); ++i)
            for (int j = 0; j < std::min(n, n_); ++j) next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
        rows_ = std::move(next);
        n_ = n;
    }

    bool at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0; }
    void set(int i, int j) { rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1; }

    Structure to_structure(bool ordered) const {
        std::vector<Tuple> edges;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j)) edges.push_back({i, j});
        std::optional<std::vector<int>> order;
        if (ordered) {
            order.emplace(static_cast<std::size_t>(n_));
            std::iota(order->begin(), order->end(), 0);
        }
        return Structure(binary_signature(), n_, {std::move(edges)}, std::move(order));
    }

private:
    int n_ = 0;
    std::vector<std::vector<char>> rows_;
};

int type_arity(AgeKind age) {
    switch (age) {
    case AgeKind::graph: return 2;
    case AgeKind::digraph: return 4;
    case AgeKind::tournament: return 2;
    case AgeKind::poset: return 3;
    case AgeKind::metric: break;
    }
    throw Error(ErrorCode::unsupported, "extension demands are not defined for metric spaces");
}

int relation_to(AgeKind age, const Adjacency& g, int u, int p) {
    switch (age) {
    case AgeKind::graph: return g.at(u, p) ? 1 : 0;
    case AgeKind::digraph: return (g.at(u, p) ? 1 : 0) | (g.at(p, u) ? 2 : 0);
    case AgeKind::tournament: return g.at(u, p) ? 0 : 1;
    case AgeKind::poset: return g.at(u, p) ? 1 : (g.at(p, u) ? 2 : 0);
    case AgeKind::metric: break;
    }
    throw Error(ErrorCode::unsupported, "extension demands are not defined for metric spaces");
}

bool poset_type_consistent(const Adjacency& g, const std::vector<int>& base, const std::vector<int>& type) {
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) {
            const int u = base[i], v = base[j];
            if (type[i] == 1 && type[j] == 2 && !g.at(u, v)) return false;  // u < x < v
            if (g.at(u, v) && type[j] == 1 && type[i] != 1) return false;   // u < v < x
            if (g.at(u, v) && type[i] == 2 && type[j] != 2) return false;   // x < u < v
        }
    return true;
}

std::vector<std::vector<int>> types_over(AgeKind age, const Adjacency& g, const std::vector<int>& base) {
    const int k = type_arity(age);
    std::vector<std::vector<int>> out;
    std::vector<int> type(base.size(), 0);
    for (;;) {
        if (age != AgeKind::poset || poset_type_consistent(g, base, type)) out.push_back(type);
        int i = static_cast<int>(type.size()) - 1;
        while (i >= 0 && type[static_cast<std::size_t>(i)] == k - 1) type[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++type[static_cast<std::size_t>(i)];
    }
    return out;
}

bool realized_by(AgeKind age, const Adjacency& g, const std::vector<int>& base, const std::vector<int>& type, int p) {
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] == p) return false;
        if (relation_to(age, g, base[i], p) != type[i]) return false;
    }
    return true;
}

// Calls visit(subset) for every subset of {0..n-1} of the given size, in
// lexicographic order.
template <class Visit>
void for_each_subset(int n, int size, Visit&& visit) {
    if (size > n || size < 1) return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void add_point(AgeKind age, Adjacency& g, const std::vector<int>& base, const std::vector<int>& type) {
    const int x = g.size();
    g.resize(x + 1);
    switch (age) {
    case AgeKind::graph:
        for (std::size_t i = 0; i < base.size(); ++i)
            if (type[i] == 1) {
                g.set(base[i], x);
                g.set(x, base[i]);
            }
        break;
    case AgeKind::digraph:
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (type[i] & 1) g.set(base[i], x);
            if (type[i] & 2) g.set(x, base[i]);
        }
        break;
    case AgeKind::tournament: {
        std::vector<char> beaten(static_cast<std::size_t>(x), 0);
        for (std::size_t i = 0; i < base.size(); ++i) beaten[static_cast<std::size_t>(base[i])] = type[i] == 1;
        for (int u = 0; u < x; ++u) {
            if (beaten[static_cast<std::size_t>(u)]) g.set(x, u);
            else g.set(u, x);
        }
        break;
    }
    case AgeKind::poset: {
        // x sits above the down-closure of its lower covers and below the
        // up-closure of its upper covers.
        for (int y = 0; y < x; ++y)
            for (std::size_t i = 0; i < base.size(); ++i) {
                const int u = base[i];
                if (type[i] == 1 && (y == u || g.at(y, u))) g.set(y, x);
                if (type[i] == 2 && (y == u || g.at(u, y))) g.set(x, y);
            }
        break;
    }
    case AgeKind::metric:
        throw Error(ErrorCode::unsupported, "stages are not built for metric spaces");
    }
}

}  // namespace

const char* to_string(AgeKind kind) {
    switch (kind) {
    case AgeKind::graph: return "graph";
    case AgeKind::digraph: return "digraph";
    case AgeKind::tournament: return "tournament";
    case AgeKind::poset: return "poset";
    case AgeKind::metric: return "metric";
    }
    return "unknown";
}

AgeKind parse_age_kind(const std::string& name) {
    for (auto k : {AgeKind::graph, AgeKind::digraph, AgeKind::tournament, AgeKind::poset, AgeKind::metric})
        if (name == to_string(k)) return k;
    throw Error(ErrorCode::invalid_argument, "unknown age '" + name + "'");
}

namespace {
Signature age_signature(AgeKind kind, int max_distance) {
    if (kind != AgeKind::metric) return binary_signature();
    if (max_distance < 1) throw Error(ErrorCode::invalid_argument, "metric age needs a maximum distance >= 1");
    std::vector<Relation> rels;
    for (int d = 1; d <= max_distance; ++d) rels.push_back({"D" + std::to_string(d), 2});
    return Signature(std::move(rels));
}
}  // namespace

Age::Age(AgeKind kind, int max_distance)
    : kind_(kind), max_distance_(kind == AgeKind::metric ? max_distance : 0),
      signature_(age_signature(kind, max_distance)) {}

bool Age::contains(const Structure& s) const {
    if (!(s.signature() == signature_)) return false;
    const int n = s.size();
    if (kind_ == AgeKind::metric) {
        std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < max_distance_; ++r)
            for (const auto& t : s.tuples(static_cast<std::size_t>(r))) {
                auto& cell = d[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[1])];
                if (t[0] == t[1] || cell != 0) return false;
                cell = r + 1;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int dij = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (i != j && (dij == 0 || dij != d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])) return false;
                for (int k = 0; k < n; ++k)
                    if (dij > d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        return false;
            }
        return true;
    }

    const Adjacency g(s);
    for (int i = 0; i < n; ++i) {
        if (g.at(i, i)) return false;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            switch (kind_) {
            case AgeKind::graph:
                if (g.at(i, j) != g.at(j, i)) return false;
                break;
            case AgeKind::tournament:
                if (g.at(i, j) == g.at(j, i)) return false;
                break;
            case AgeKind::poset:
                if (g.at(i, j) && g.at(j, i)) return false;
                for (int k = 0; k < n; ++k)
                    if (g.at(i, j) && g.at(j, k) && !g.at(i, k)) return false;
                break;
            default: break;
            }
        }
    }
    return true;
}

Structure metric_space(int max_distance, const std::vector<std::vector<int>>& distance) {
    const int n = static_cast<int>(distance.size());
    std::vector<std::vector<Tuple>> rels(static_cast<std::size_t>(max_distance));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(distance[static_cast<std::size_t>(i)].size()) != n)
            throw Error(ErrorCode::invalid_argument, "distance matrix is not square");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int d = distance[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (d < 1 || d > max_distance) throw Error(ErrorCode::invalid_argument, "distance out of range");
            rels[static_cast<std::size_t>(d - 1)].push_back({i, j});
        }
    }
    return Structure(Age(AgeKind::metric, max_distance).signature(), n, std::move(rels));
}

EnumeratedStructure saturate_stage(AgeKind age, int rounds, int seed_size, int max_points) {
    if (rounds < 0) throw Error(ErrorCode::invalid_argument, "rounds must be nonnegative");
    if (seed_size < 1) throw Error(ErrorCode::invalid_argument, "seed size must be at least 1");
    if (age == AgeKind::metric) throw Error(ErrorCode::unsupported, "stages are not built for metric spaces");
    if (seed_size > max_points)
        throw CapExceeded("seed exceeds the stage cap", static_cast<std::uint64_t>(seed_size),
                          static_cast<std::uint64_t>(max_points));

    Adjacency g(seed_size);
    if (age == AgeKind::tournament)
        for (int i = 0; i < seed_size; ++i)
            for (int j = i + 1; j < seed_size; ++j) g.set(i, j);

    const Age checker(age);
    EnumeratedStructure stage;
    stage.age = age;
    stage.meta.rounds = rounds;
    stage.meta.seed_size = seed_size;
    stage.meta.round_ends.push_back(seed_size);

    for (int r = 1; r <= rounds; ++r) {
        const int base = g.size();
        for (int size = 1; size <= std::min(rounds, base); ++size) {
            for_each_subset(base, size, [&](const std::vector<int>& u) {
                for (const auto& type : types_over(age, g, u)) {
                    bool found = false;
                    for (int p = base; p < g.size() && !found; ++p) found = realized_by(age, g, u, type, p);
                    if (found) continue;
                    if (g.size() >= max_points)
                        throw CapExceeded("stage construction exceeds " + std::to_string(max_points) + " points",
                                          static_cast<std::uint64_t>(g.size()) + 1,
                                          static_cast<std::uint64_t>(max_points));
                    add_point(age, g, u, type);
                }
            });
        }
        stage.meta.round_ends.push_back(g.size());
        if (!checker.contains(g.to_structure(false)))
            throw Error(ErrorCode::internal, "stage left its age in round " + std::to_string(r));
    }
    stage.structure = std::make_shared<const Structure>(g.to_structure(true));
    return stage;
}

std::vector<std::vector<int>> extension_types(AgeKind age, const Structure& s, const std::vector<int>& base) {
    return types_over(age, Adjacency(s), base);
}

bool realizes(AgeKind age, const Structure& s, const ExtensionDemand& demand, int p) {
    if (demand.base.size() != demand.type.size())
        throw Error(ErrorCode::invalid_argument, "demand base and type differ in length");
    return realized_by(age, Adjacency(s), demand.base, demand.type, p);
}

std::vector<ExtensionDemand> missing_extensions(AgeKind age, const Structure& s, int level, int base_points) {
    std::vector<ExtensionDemand> out;
    if (level <= 0) return out;
    const Adjacency g(s);
    const int base = base_points < 0 ? g.size() : std::min(base_points, g.size());
    for (int size = 1; size <= std::min(level, base); ++size)
        for_each_subset(base, size, [&](const std::vector<int>& u) {
            for (const auto& type : types_over(age, g, u)) {
                bool found = false;
                for (int p = 0; p < g.size() && !found; ++p) found = realized_by(age, g, u, type, p);
                if (!found) out.push_back({u, type});
            }
        });
    return out;
}

bool check_extension_axioms(AgeKind age, const Structure& s, int level, int base_points) {
    return missing_extensions(age, s, level, base_points).empty();
}

bool check_extension_axioms(const EnumeratedStructure& stage, int level, int base_points) {
    return check_extension_axioms(stage.age, *stage.structure, level, base_points);
}

const char* to_string(OnePointKind kind) {
    switch (kind) {
    case OnePointKind::isolated_vertex: return "isolated_vertex";
    case OnePointKind::top_element: return "top_element";
    case OnePointKind::max_distance_point: return "max_distance_point";
    }
    return "unknown";
}

OnePointExtension::OnePointExtension(Age age) : age_(std::move(age)) {
    switch (age_.kind()) {
    case AgeKind::graph:
    case AgeKind::digraph: kind_ = OnePointKind::isolated_vertex; break;
    case AgeKind::tournament:
    case AgeKind::poset: kind_ = OnePointKind::top_element; break;
    case AgeKind::metric: kind_ = OnePointKind::max_distance_point; break;
    }
}

Structure OnePointExtension::apply(const Structure& a) const {
    if (!age_.contains(a)) throw Error(ErrorCode::invalid_argument, "structure is not in the age");
    const int n = a.size();
    std::vector<std::vector<Tuple>> rels;
    for (std::size_t r = 0; r < a.signature().size(); ++r) rels.push_back(a.tuples(r));
    switch (age_.kind()) {
    case AgeKind::graph:
    case AgeKind::digraph: break;
    case AgeKind::tournament:
        for (int u = 0; u < n; ++u) rels[0].push_back({n, u});
        break;
    case AgeKind::poset:
        for (int u = 0; u < n; ++u) rels[0].push_back({u, n});
        break;
    case AgeKind::metric: {
        auto& far = rels[static_cast<std::size_t>(age_.max_distance() - 1)];
        for (int u = 0; u < n; ++u) {
            far.push_back({u, n});
            far.push_back({n, u});
        }
        break;
    }
    }
    return Structure(a.signature(), n + 1, std::move(rels));
}

Structure OnePointExtension::apply_ordered(const Structure& a) const {
    if (!a.has_order()) throw Error(ErrorCode::invalid_argument, "structure carries no order");
    auto order = a.order();
    order.push_back(a.size());
    return apply(a.without_order()).with_order(std::move(order));
}

Embedding OnePointExtension::apply(const Embedding& f) const {
    const bool ordered = f.dom().has_order() && f.cod().has_order();
    auto dom = std::make_shared<const Structure>(ordered ? apply_ordered(f.dom()) : apply(f.dom().without_order()));
    auto cod = std::make_shared<const Structure>(ordered ? apply_ordered(f.cod()) : apply(f.cod().without_order()));
    auto map = f.map();
    map.push_back(f.cod().size());
    return Embedding(std::move(dom), std::move(cod), std::move(map));
}

Amalgam strong_amalgam(const Age& age, const Structure& a, const Structure& b, const Structure& c,
                       const std::vector<int>& f, const std::vector<int>& g) {
    if (age.kind() == AgeKind::metric) throw Error(ErrorCode::unsupported, "metric amalgamation is not implemented");
    for (const Structure* s : {&a, &b, &c})
        if (!age.contains(*s)) throw Error(ErrorCode::invalid_argument, "amalgam input is not in the age");
    if (static_cast<int>(f.size()) != a.size() || !is_embedding(a.without_order(), b.without_order(), f))
        throw Error(ErrorCode::invalid_argument, "f is not an embedding A -> B");
    if (static_cast<int>(g.size()) != a.size() || !is_embedding(a.without_order(), c.without_order(), g))
        throw Error(ErrorCode::invalid_argument, "g is not an embedding A -> C");

    const int nb = b.size();
    std::vector<int> f_prime(static_cast<std::size_t>(nb));
    std::iota(f_prime.begin(), f_prime.end(), 0);
    std::vector<int> g_prime(static_cast<std::size_t>(c.size()), -1);
    for (int i = 0; i < a.size(); ++i) g_prime[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = f[static_cast<std::size_t>(i)];
    int next = nb;
    for (auto& x : g_prime)
        if (x < 0) x = next++;
    const int nd = next;

    Adjacency d(nd);
    for (const auto& t : b.tuples(0)) d.set(t[0], t[1]);
    for (const auto& t : c.tuples(0))
        d.set(g_prime[static_cast<std::size_t>(t[0])], g_prime[static_cast<std::size_t>(t[1])]);
    if (age.kind() == AgeKind::tournament) {
        std::vector<char> in_a(static_cast<std::size_t>(nb), 0);
        for (int x : f) in_a[static_cast<std::size_t>(x)] = 1;
        for (int x = 0; x < nb; ++x)
            if (!in_a[static_cast<std::size_t>(x)])
                for (int y = nb; y < nd; ++y) d.set(x, y);
    }
    if (age.kind() == AgeKind::poset) {
        for (int k = 0; k < nd; ++k)
            for (int i = 0; i < nd; ++i)
                for (int j = 0; j < nd; ++j)
                    if (d.at(i, k) && d.at(k, j)) d.set(i, j);
    }
    Amalgam out{d.to_structure(false), std::move(f_prime), std::move(g_prime)};
    if (!verify_amalgam(age, a, b, c, f, g, out))
        throw Error(ErrorCode::internal, "strong amalgam failed its own validation");
    return out;
}

bool verify_amalgam(const Age& age, const Structure& a, const Structure& b, const Structure& c,
                    const std::vector<int>& f, const std::vector<int>& g, const Amalgam& amalgam) {
    if (!age.contains(amalgam.d)) return false;
    const Structure bd = b.without_order(), cd = c.without_order(), dd = amalgam.d.without_order();
    if (!is_embedding(bd, dd, amalgam.f_prime) || !is_embedding(cd, dd, amalgam.g_prime)) return false;
    std::vector<int> via_b, via_c;
    for (int i = 0; i < a.size(); ++i) {
        via_b.push_back(amalgam.f_prime[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])]);
        via_c.push_back(amalgam.g_prime[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])]);
    }
    if (via_b != via_c) return false;
    std::vector<int> img_b = amalgam.f_prime, img_c = amalgam.g_prime, common;
    std::sort(img_b.begin(), img_b.end());
    std::sort(img_c.begin(), img_c.end());
    std::set_intersection(img_b.begin(), img_b.end(), img_c.begin(), img_c.end(), std::back_inserter(common));
    std::sort(via_b.begin(), via_b.end());
    return common == via_b;
}

}  // namespace ramsey
