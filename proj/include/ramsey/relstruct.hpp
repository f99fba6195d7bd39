#pragma once

// Finite relational structures over an explicit signature, optionally carrying
// a linear order, together with embeddings between them.
//
// Universes are always 0..n-1. Relations are stored as sorted tuple sets. The
// order, when present, is a distinguished component and not one of the
// relations: embeddings between two ordered structures must be monotone.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

using Tuple = std::vector<int>;

struct Relation {
    std::string name;
    int arity = 0;

    friend bool operator==(const Relation&, const Relation&) = default;
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Relation> relations);

    const std::vector<Relation>& relations() const noexcept { return relations_; }
    std::size_t size() const noexcept { return relations_.size(); }
    const Relation& operator[](std::size_t i) const { return relations_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<Relation> relations_;
};

/// The signature with a single binary relation `E`, used by every graph-like age.
Signature binary_signature(std::string name = "E");

class Structure {
public:
    /// Validates every tuple against the universe and arity; duplicate tuples
    /// are collapsed. `order`, when given, lists the universe from least to
    /// greatest and must be a permutation of 0..size-1.
    Structure(Signature signature, int size, std::vector<std::vector<Tuple>> tuples,
              std::optional<std::vector<int>> order = std::nullopt);

    const Signature& signature() const noexcept { return signature_; }
    int size() const noexcept { return size_; }
    const std::vector<Tuple>& tuples(std::size_t relation) const { return tuples_[relation]; }
    bool holds(std::size_t relation, std::span<const int> tuple) const;

    bool has_order() const noexcept { return order_.has_value(); }
    /// Elements from least to greatest. Only valid when has_order().
    const std::vector<int>& order() const { return *order_; }
    /// Position of `x` in the order. Only valid when has_order().
    int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }

    Structure with_order(std::vector<int> order) const;
    Structure with_identity_order() const;
    Structure without_order() const;

    friend bool operator==(const Structure& a, const Structure& b);

private:
    void index_relations();

    Signature signature_;
    int size_ = 0;
    std::vector<std::vector<Tuple>> tuples_;
    std::optional<std::vector<int>> order_;
    std::vector<int> rank_;
    // Dense membership bitmaps, one per relation, indexed by the base-n
    // encoding of a tuple. Empty when n^arity is too large to tabulate.
    std::vector<std::vector<bool>> membership_;
};

/// True iff `map` is injective, respects every relation in both directions and,
/// when both sides are ordered, is strictly increasing with respect to the orders.
bool is_embedding(const Structure& dom, const Structure& cod, std::span<const int> map);

class Embedding {
public:
    /// Validating constructor; throws unless `map` is an embedding dom -> cod.
    Embedding(std::shared_ptr<const Structure> dom, std::shared_ptr<const Structure> cod,
              std::vector<int> map);
    Embedding(const Structure& dom, const Structure& cod, std::vector<int> map);

    /// Skips validation. Callers must guarantee the embedding invariants.
    static Embedding unchecked(std::shared_ptr<const Structure> dom,
                               std::shared_ptr<const Structure> cod, std::vector<int> map);

    const Structure& dom() const noexcept { return *dom_; }
    const Structure& cod() const noexcept { return *cod_; }
    const std::shared_ptr<const Structure>& dom_ptr() const noexcept { return dom_; }
    const std::shared_ptr<const Structure>& cod_ptr() const noexcept { return cod_; }
    const std::vector<int>& map() const noexcept { return map_; }
    int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }

    friend bool operator==(const Embedding& a, const Embedding& b);
    /// Lexicographic on the map vector; only meaningful within one hom-set.
    friend std::strong_ordering operator<=>(const Embedding& a, const Embedding& b) {
        return a.map_ <=> b.map_;
    }

private:
    Embedding() = default;

    std::shared_ptr<const Structure> dom_;
    std::shared_ptr<const Structure> cod_;
    std::vector<int> map_;
};

/// All embeddings a -> b in lexicographic order of their map vectors.
std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& b);
std::vector<Embedding> enumerate_embeddings(const std::shared_ptr<const Structure>& a,
                                            const std::shared_ptr<const Structure>& b);

/// Substructure on `subset`, relabelled 0..|subset|-1 in increasing label order.
/// The order, if any, is restricted.
Structure induced_substructure(const Structure& b, std::vector<int> subset);

/// Every subset of b's universe inducing a copy of a, each sorted, in
/// lexicographic order.
std::vector<std::vector<int>> substructure_copies(const Structure& a, const Structure& b);

std::vector<Embedding> automorphisms(const Structure& a);

Embedding identity_embedding(const Structure& a);
Embedding identity_embedding(const std::shared_ptr<const Structure>& a);

/// g after f. Requires cod(f) == dom(g).
Embedding compose_embeddings(const Embedding& g, const Embedding& f);

bool is_isomorphic(const Structure& a, const Structure& b);

}  // namespace ramsey
