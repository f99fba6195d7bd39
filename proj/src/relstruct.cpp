#include "ramsey/relstruct.hpp"

#include "ramsey/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ramsey {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::signature_mismatch: return "signature_mismatch";
    case ErrorCode::composition_mismatch: return "composition_mismatch";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::empty_word: return "empty_word";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

Signature::Signature(std::vector<Relation> relations) : relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& r : relations_) {
        if (r.arity < 1)
            throw Error(ErrorCode::invalid_argument, "relation '" + r.name + "' has arity < 1");
        if (r.name.empty())
            throw Error(ErrorCode::invalid_argument, "relation with empty name");
        if (!seen.insert(r.name).second)
            throw Error(ErrorCode::invalid_argument, "duplicate relation name '" + r.name + "'");
    }
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].name == name) return i;
    return std::nullopt;
}

Signature binary_signature(std::string name) {
    return Signature({Relation{std::move(name), 2}});
}

namespace {

constexpr std::size_t kMaxDenseCells = std::size_t{1} << 24;

std::optional<std::size_t> dense_cells(int n, int arity) {
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) {
        cells *= static_cast<std::size_t>(std::max(n, 1));
        if (cells > kMaxDenseCells) return std::nullopt;
    }
    return cells;
}

std::size_t encode(std::span<const int> t, int n) {
    std::size_t code = 0;
    for (int x : t) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
    return code;
}

void check_permutation(const std::vector<int>& perm, int n, const char* what) {
    if (static_cast<int>(perm.size()) != n)
        throw Error(ErrorCode::invalid_argument, std::string(what) + " has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
            throw Error(ErrorCode::invalid_argument, std::string(what) + " is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

}  // namespace

Structure::Structure(Signature signature, int size, std::vector<std::vector<Tuple>> tuples,
                     std::optional<std::vector<int>> order)
    : signature_(std::move(signature)), size_(size), tuples_(std::move(tuples)), order_(std::move(order)) {
    if (size_ < 0) throw Error(ErrorCode::invalid_argument, "negative structure size");
    if (tuples_.size() != signature_.size())
        throw Error(ErrorCode::invalid_argument, "tuple lists do not match the signature");
    for (std::size_t r = 0; r < tuples_.size(); ++r) {
        auto& ts = tuples_[r];
        for (const auto& t : ts) {
            if (static_cast<int>(t.size()) != signature_[r].arity)
                throw Error(ErrorCode::invalid_argument,
                            "tuple of wrong arity in relation '" + signature_[r].name + "'");
            for (int x : t)
                if (x < 0 || x >= size_)
                    throw Error(ErrorCode::invalid_argument,
                                "tuple entry outside the universe in relation '" + signature_[r].name + "'");
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
    if (order_) {
        check_permutation(*order_, size_, "order");
        rank_.assign(static_cast<std::size_t>(size_), 0);
        for (int i = 0; i < size_; ++i) rank_[static_cast<std::size_t>((*order_)[static_cast<std::size_t>(i)])] = i;
    }
    index_relations();
}

void Structure::index_relations() {
    membership_.clear();
    membership_.resize(tuples_.size());
    for (std::size_t r = 0; r < tuples_.size(); ++r) {
        auto cells = dense_cells(size_, signature_[r].arity);
        if (!cells) continue;
        auto& bits = membership_[r];
        bits.assign(*cells, false);
        for (const auto& t : tuples_[r]) bits[encode(t, size_)] = true;
    }
}

bool Structure::holds(std::size_t relation, std::span<const int> tuple) const {
    const auto& bits = membership_[relation];
    if (!bits.empty()) return bits[encode(tuple, size_)];
    const auto& ts = tuples_[relation];
    return std::binary_search(ts.begin(), ts.end(), tuple,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
}

Structure Structure::with_order(std::vector<int> order) const {
    return Structure(signature_, size_, tuples_, std::move(order));
}

Structure Structure::with_identity_order() const {
    std::vector<int> order(static_cast<std::size_t>(size_));
    std::iota(order.begin(), order.end(), 0);
    return with_order(std::move(order));
}

Structure Structure::without_order() const {
    return Structure(signature_, size_, tuples_, std::nullopt);
}

bool operator==(const Structure& a, const Structure& b) {
    return a.size_ == b.size_ && a.signature_ == b.signature_ && a.tuples_ == b.tuples_ && a.order_ == b.order_;
}

namespace {

bool same_structure(const std::shared_ptr<const Structure>& a, const std::shared_ptr<const Structure>& b) {
    return a == b || *a == *b;
}

// Backtracking embedding search. Domain points are assigned in increasing
// order and candidates tried in increasing order, so solutions come out in
// lexicographic order of their map vectors.
class EmbeddingSearch {
public:
    EmbeddingSearch(const Structure& a, const Structure& b, bool degree_filter)
        : a_(a), b_(b), map_(static_cast<std::size_t>(a.size()), -1),
          used_(static_cast<std::size_t>(b.size()), false) {
        if (degree_filter) {
            auto da = degree_profile(a);
            auto db = degree_profile(b);
            allowed_.assign(static_cast<std::size_t>(a.size()), std::vector<bool>(static_cast<std::size_t>(b.size())));
            for (int x = 0; x < a.size(); ++x)
                for (int y = 0; y < b.size(); ++y)
                    allowed_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                        da[static_cast<std::size_t>(x)] == db[static_cast<std::size_t>(y)];
        }
    }

    template <class Visit>
    void run(Visit&& visit) {
        if (a_.size() > b_.size()) return;
        stop_ = false;
        extend(0, visit);
    }

    void stop() { stop_ = true; }

private:
    static std::vector<std::vector<int>> degree_profile(const Structure& s) {
        std::vector<std::vector<int>> profile(static_cast<std::size_t>(s.size()));
        for (std::size_t r = 0; r < s.signature().size(); ++r) {
            int arity = s.signature()[r].arity;
            std::vector<std::vector<int>> counts(static_cast<std::size_t>(s.size()),
                                                 std::vector<int>(static_cast<std::size_t>(arity), 0));
            for (const auto& t : s.tuples(r))
                for (int p = 0; p < arity; ++p) ++counts[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])][static_cast<std::size_t>(p)];
            for (int x = 0; x < s.size(); ++x)
                for (int c : counts[static_cast<std::size_t>(x)]) profile[static_cast<std::size_t>(x)].push_back(c);
        }
        return profile;
    }

    bool consistent(int i) {
        const int y = map_[static_cast<std::size_t>(i)];
        if (a_.has_order() && b_.has_order()) {
            for (int j = 0; j < i; ++j) {
                bool less_a = a_.rank(j) < a_.rank(i);
                bool less_b = b_.rank(map_[static_cast<std::size_t>(j)]) < b_.rank(y);
                if (less_a != less_b) return false;
            }
        }
        for (std::size_t r = 0; r < a_.signature().size(); ++r) {
            const int arity = a_.signature()[r].arity;
            // Every tuple over {0..i} that mentions i.
            Tuple t(static_cast<std::size_t>(arity), 0);
            Tuple image(static_cast<std::size_t>(arity), 0);
            for (;;) {
                if (std::find(t.begin(), t.end(), i) != t.end()) {
                    for (std::size_t p = 0; p < t.size(); ++p) image[p] = map_[static_cast<std::size_t>(t[p])];
                    if (a_.holds(r, t) != b_.holds(r, image)) return false;
                }
                int p = arity - 1;
                while (p >= 0 && t[static_cast<std::size_t>(p)] == i) t[static_cast<std::size_t>(p--)] = 0;
                if (p < 0) break;
                ++t[static_cast<std::size_t>(p)];
            }
        }
        return true;
    }

    template <class Visit>
    void extend(int i, Visit& visit) {
        if (stop_) return;
        if (i == a_.size()) {
            visit(map_);
            return;
        }
        for (int y = 0; y < b_.size() && !stop_; ++y) {
            if (used_[static_cast<std::size_t>(y)]) continue;
            if (!allowed_.empty() && !allowed_[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)]) continue;
            map_[static_cast<std::size_t>(i)] = y;
            if (!consistent(i)) continue;
            used_[static_cast<std::size_t>(y)] = true;
            extend(i + 1, visit);
            used_[static_cast<std::size_t>(y)] = false;
        }
        map_[static_cast<std::size_t>(i)] = -1;
    }

    const Structure& a_;
    const Structure& b_;
    std::vector<int> map_;
    std::vector<bool> used_;
    std::vector<std::vector<bool>> allowed_;
    bool stop_ = false;
};

void require_same_signature(const Structure& a, const Structure& b) {
    if (!(a.signature() == b.signature()))
        throw Error(ErrorCode::signature_mismatch, "structures have different signatures");
}

}  // namespace

bool is_embedding(const Structure& dom, const Structure& cod, std::span<const int> map) {
    if (!(dom.signature() == cod.signature())) return false;
    if (static_cast<int>(map.size()) != dom.size()) return false;
    std::vector<bool> used(static_cast<std::size_t>(cod.size()), false);
    for (int y : map) {
        if (y < 0 || y >= cod.size() || used[static_cast<std::size_t>(y)]) return false;
        used[static_cast<std::size_t>(y)] = true;
    }
    if (dom.has_order() && cod.has_order()) {
        for (int r = 0; r + 1 < dom.size(); ++r) {
            int lo = dom.order()[static_cast<std::size_t>(r)];
            int hi = dom.order()[static_cast<std::size_t>(r + 1)];
            if (cod.rank(map[static_cast<std::size_t>(lo)]) >= cod.rank(map[static_cast<std::size_t>(hi)])) return false;
        }
    }
    for (std::size_t r = 0; r < dom.signature().size(); ++r) {
        const int arity = dom.signature()[r].arity;
        if (dom.size() == 0) break;
        Tuple t(static_cast<std::size_t>(arity), 0);
        Tuple image(static_cast<std::size_t>(arity), 0);
        for (;;) {
            for (std::size_t p = 0; p < t.size(); ++p) image[p] = map[static_cast<std::size_t>(t[p])];
            if (dom.holds(r, t) != cod.holds(r, image)) return false;
            int p = arity - 1;
            while (p >= 0 && t[static_cast<std::size_t>(p)] == dom.size() - 1) t[static_cast<std::size_t>(p--)] = 0;
            if (p < 0) break;
            ++t[static_cast<std::size_t>(p)];
        }
    }
    return true;
}

Embedding::Embedding(std::shared_ptr<const Structure> dom, std::shared_ptr<const Structure> cod,
                     std::vector<int> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    if (!dom_ || !cod_) throw Error(ErrorCode::invalid_argument, "embedding with null structure");
    if (!is_embedding(*dom_, *cod_, map_))
        throw Error(ErrorCode::invalid_argument, "map is not an embedding");
}

Embedding::Embedding(const Structure& dom, const Structure& cod, std::vector<int> map)
    : Embedding(std::make_shared<const Structure>(dom), std::make_shared<const Structure>(cod), std::move(map)) {}

Embedding Embedding::unchecked(std::shared_ptr<const Structure> dom, std::shared_ptr<const Structure> cod,
                               std::vector<int> map) {
    Embedding e;
    e.dom_ = std::move(dom);
    e.cod_ = std::move(cod);
    e.map_ = std::move(map);
    return e;
}

bool operator==(const Embedding& a, const Embedding& b) {
    return a.map_ == b.map_ && same_structure(a.dom_, b.dom_) && same_structure(a.cod_, b.cod_);
}

std::vector<Embedding> enumerate_embeddings(const std::shared_ptr<const Structure>& a,
                                            const std::shared_ptr<const Structure>& b) {
    require_same_signature(*a, *b);
    std::vector<Embedding> out;
    EmbeddingSearch search(*a, *b, false);
    search.run([&](const std::vector<int>& map) { out.push_back(Embedding::unchecked(a, b, map)); });
    return out;
}

std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& b) {
    return enumerate_embeddings(std::make_shared<const Structure>(a), std::make_shared<const Structure>(b));
}

Structure induced_substructure(const Structure& b, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw Error(ErrorCode::invalid_argument, "induced substructure on an empty subset");
    if (subset.front() < 0 || subset.back() >= b.size())
        throw Error(ErrorCode::invalid_argument, "subset outside the universe");
    std::vector<int> relabel(static_cast<std::size_t>(b.size()), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) relabel[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);

    std::vector<std::vector<Tuple>> tuples(b.signature().size());
    for (std::size_t r = 0; r < b.signature().size(); ++r) {
        for (const auto& t : b.tuples(r)) {
            Tuple image;
            image.reserve(t.size());
            for (int x : t) {
                if (relabel[static_cast<std::size_t>(x)] < 0) break;
                image.push_back(relabel[static_cast<std::size_t>(x)]);
            }
            if (image.size() == t.size()) tuples[r].push_back(std::move(image));
        }
    }
    std::optional<std::vector<int>> order;
    if (b.has_order()) {
        order.emplace();
        for (int x : b.order())
            if (relabel[static_cast<std::size_t>(x)] >= 0) order->push_back(relabel[static_cast<std::size_t>(x)]);
    }
    return Structure(b.signature(), static_cast<int>(subset.size()), std::move(tuples), std::move(order));
}

std::vector<std::vector<int>> substructure_copies(const Structure& a, const Structure& b) {
    require_same_signature(a, b);
    std::set<std::vector<int>> images;
    EmbeddingSearch search(a, b, false);
    search.run([&](const std::vector<int>& map) {
        std::vector<int> image = map;
        std::sort(image.begin(), image.end());
        images.insert(std::move(image));
    });
    return {images.begin(), images.end()};
}

std::vector<Embedding> automorphisms(const Structure& a) {
    auto shared = std::make_shared<const Structure>(a);
    std::vector<Embedding> out;
    EmbeddingSearch search(a, a, true);
    search.run([&](const std::vector<int>& map) { out.push_back(Embedding::unchecked(shared, shared, map)); });
    return out;
}

Embedding identity_embedding(const std::shared_ptr<const Structure>& a) {
    std::vector<int> map(static_cast<std::size_t>(a->size()));
    std::iota(map.begin(), map.end(), 0);
    return Embedding::unchecked(a, a, std::move(map));
}

Embedding identity_embedding(const Structure& a) {
    return identity_embedding(std::make_shared<const Structure>(a));
}

Embedding compose_embeddings(const Embedding& g, const Embedding& f) {
    if (!same_structure(f.cod_ptr(), g.dom_ptr()))
        throw Error(ErrorCode::composition_mismatch, "codomain of f differs from domain of g");
    std::vector<int> map(f.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f.map()[i]);
    return Embedding::unchecked(f.dom_ptr(), g.cod_ptr(), std::move(map));
}

bool is_isomorphic(const Structure& a, const Structure& b) {
    require_same_signature(a, b);
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.signature().size(); ++r)
        if (a.tuples(r).size() != b.tuples(r).size()) return false;
    bool found = false;
    EmbeddingSearch search(a, b, true);
    search.run([&](const std::vector<int>&) {
        found = true;
        search.stop();
    });
    return found;
}

}  // namespace ramsey
