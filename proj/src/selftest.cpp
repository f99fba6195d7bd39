#include "ramsey/selftest.hpp"

#include "ramsey/approx.hpp"
#include "ramsey/arrowcheck.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/fraisse.hpp"
#include "ramsey/paramwords.hpp"
#include "ramsey/proofcolorings.hpp"
#include "ramsey/quotients.hpp"
#include "ramsey/rigidsurj.hpp"

#include <functional>
#include <map>
#include <set>

namespace ramsey {

namespace {

class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& detail) {
        ++cases;
        if (!ok && failure.empty()) failure = detail();
    }
    std::uint64_t cases = 0;
    std::string failure;
};

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(const std::string& name, const std::function<void(Tally&)>& body) {
        Tally t;
        try {
            body(t);
        } catch (const std::exception& e) {
            if (t.failure.empty()) t.failure = std::string("exception: ") + e.what();
        }
        result_.checks.push_back({name, t.failure.empty(), t.cases, t.failure});
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string ints(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "]";
}

std::uint64_t stirling2(int n, int k) {
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<std::uint64_t>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return k <= n ? s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : 0;
}

std::vector<Structure> small_graphs(int max_n) {
    std::vector<Structure> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : graphs_up_to_isomorphism(n)) out.push_back(std::move(g));
    return out;
}

// ---------------------------------------------------------------- relstruct

SuiteResult suite_relstruct() {
    Suite s("relstruct");
    const auto graphs = small_graphs(4);
    s.check("embedding_count_law", [&](Tally& t) {
        for (const auto& a : graphs)
            for (const auto& b : graphs) {
                const auto emb = enumerate_embeddings(a, b);
                if (emb.empty()) continue;
                const auto copies = substructure_copies(a, b).size();
                const auto aut = automorphisms(a).size();
                t.expect(emb.size() == copies * aut, [&] { return describe(a) + " -> " + describe(b); });
            }
    });
    s.check("embeddings_distinct_and_valid", [&](Tally& t) {
        for (const auto& a : graphs)
            for (const auto& b : graphs) {
                const auto emb = enumerate_embeddings(a, b);
                std::set<std::vector<int>> seen;
                for (const auto& e : emb) {
                    t.expect(seen.insert(e.map()).second && is_embedding(a, b, e.map()),
                             [&] { return describe(a) + " -> " + describe(b) + " map " + ints(e.map()); });
                }
            }
    });
    s.check("composition_associative_with_identities", [&](Tally& t) {
        const auto g3 = small_graphs(3);
        for (const auto& a : g3)
            for (const auto& b : g3)
                for (const auto& c : g3)
                    for (const auto& d : g3) {
                        const auto fs = enumerate_embeddings(a, b);
                        const auto gs = enumerate_embeddings(b, c);
                        const auto hs = enumerate_embeddings(c, d);
                        for (const auto& f : fs) {
                            t.expect(compose_embeddings(f, identity_embedding(a)) == f &&
                                         compose_embeddings(identity_embedding(b), f) == f,
                                     [&] { return "identity law at " + ints(f.map()); });
                            for (const auto& g : gs)
                                for (const auto& h : hs)
                                    t.expect(compose_embeddings(h, compose_embeddings(g, f)) ==
                                                 compose_embeddings(compose_embeddings(h, g), f),
                                             [&] { return "associativity at " + ints(f.map()); });
                        }
                    }
    });
    s.check("ordered_embeddings_increasing", [&](Tally& t) {
        for (int n = 1; n <= 3; ++n)
            for (const auto& a : ordered_graphs(n))
                for (const auto& b : ordered_graphs(4))
                    for (const auto& e : enumerate_embeddings(a, b)) {
                        bool inc = true;
                        for (int i = 1; i < a.size(); ++i) inc = inc && e(i - 1) < e(i);
                        t.expect(inc, [&] { return "map " + ints(e.map()); });
                    }
    });
    return s.take();
}

// ---------------------------------------------------------------- rigidsurj

SuiteResult suite_rigidsurj() {
    Suite s("rigidsurj");
    s.check("count_is_stirling", [&](Tally& t) {
        for (int n = 1; n <= 8; ++n)
            for (int m = 1; m <= n; ++m)
                t.expect(enumerate_rigid_surjections(n, m).size() == stirling2(n, m),
                         [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    });
    s.check("cut_commutes_with_extension", [&](Tally& t) {
        for (int r = 1; r <= 2; ++r)
            for (int sz = r; sz <= 3; ++sz)
                for (const auto& f : enumerate_rigid_surjections(sz, r))
                    for (int n = sz + 1; n <= 7; ++n)
                        for (const auto& u : enumerate_rigid_surjections(n, sz + 1)) {
                            const auto lhs = compose_rsurj(f, phi_restrict(u));
                            const auto rhs = phi_restrict(compose_rsurj(extend_prime(f), u));
                            t.expect(lhs == rhs, [&] { return "f=" + ints(f.values()) + " u=" + ints(u.values()); });
                        }
    });
    s.check("composition_associative", [&](Tally& t) {
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= n; ++m)
                for (int p = 1; p <= m; ++p)
                    for (int q = 1; q <= p; ++q)
                        for (const auto& h : enumerate_rigid_surjections(n, m))
                            for (const auto& g : enumerate_rigid_surjections(m, p))
                                for (const auto& f : enumerate_rigid_surjections(p, q))
                                    t.expect(compose_rsurj(f, compose_rsurj(g, h)) == compose_rsurj(compose_rsurj(f, g), h),
                                             [&] { return "h=" + ints(h.values()); });
    });
    s.check("canonical_pi_composes", [&](Tally& t) {
        for (int p = 1; p <= 7; ++p)
            for (int n = 1; n <= p; ++n)
                for (int m = 1; m <= n; ++m)
                    t.expect(compose_rsurj(canonical_pi(m, n), canonical_pi(n, p)) == canonical_pi(m, p),
                             [&] { return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p); });
    });
    s.check("cut_after_extension_is_identity", [&](Tally& t) {
        for (int n = 1; n <= 6; ++n)
            for (int m = 1; m <= n; ++m)
                for (const auto& f : enumerate_rigid_surjections(n, m))
                    t.expect(phi_restrict(extend_prime(f)) == f, [&] { return ints(f.values()); });
    });
    return s.take();
}

// ---------------------------------------------------------------- paramwords

SuiteResult suite_paramwords() {
    Suite s("paramwords");
    s.check("substitution_is_composition", [&](Tally& t) {
        for (int k = 0; k <= 2; ++k)
            for (int n = 1; n <= 5; ++n)
                for (int m = 1; m <= std::min(n, 3); ++m)
                    for (int p = (k == 0 ? 1 : 0); p <= m; ++p)
                        for (const auto& u : enumerate_parameter_words(k, n, m))
                            for (const auto& v : enumerate_parameter_words(k, m, p)) {
                                const auto lhs = to_rigid_surjection(substitute(u, v));
                                const auto rhs = compose_rsurj(to_rigid_surjection(v), to_rigid_surjection(u));
                                t.expect(lhs == rhs, [&] { return to_string(u) + " . " + to_string(v); });
                            }
    });
    s.check("plain_variable_words_are_rigid_surjections", [&](Tally& t) {
        for (int n = 1; n <= 7; ++n)
            for (int m = 1; m <= n; ++m) {
                const auto words = enumerate_parameter_words(0, n, m);
                std::set<std::vector<int>> images;
                for (const auto& w : words) images.insert(to_rigid_surjection(w).values());
                std::set<std::vector<int>> all;
                for (const auto& f : enumerate_rigid_surjections(n, m)) all.insert(f.values());
                t.expect(words.size() == stirling2(n, m) && images == all,
                         [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
            }
    });
    s.check("substitution_associative", [&](Tally& t) {
        for (int k = 0; k <= 2; ++k)
            for (int n = 1; n <= 5; ++n)
                for (int m = 1; m <= std::min(n, 3); ++m)
                    for (int p = 1; p <= m; ++p)
                        for (int q = (k == 0 ? 1 : 0); q <= p; ++q) {
                            const auto us = enumerate_parameter_words(k, n, m);
                            const auto vs = enumerate_parameter_words(k, m, p);
                            const auto ws = enumerate_parameter_words(k, p, q);
                            for (const auto& u : us)
                                for (const auto& v : vs)
                                    for (const auto& w : ws)
                                        t.expect(substitute(substitute(u, v), w) == substitute(u, substitute(v, w)),
                                                 [&] { return to_string(u) + " " + to_string(v) + " " + to_string(w); });
                        }
    });
    s.check("full_partial_substitution_matches", [&](Tally& t) {
        for (int k = 0; k <= 2; ++k)
            for (int n = 1; n <= 5; ++n)
                for (int m = 1; m <= std::min(n, 3); ++m)
                    for (int p = (k == 0 ? 1 : 0); p <= m; ++p)
                        for (const auto& u : enumerate_parameter_words(k, n, m))
                            for (const auto& v : enumerate_parameter_words(k, m, p))
                                t.expect(partial_substitute(u, v) == substitute(u, v),
                                         [&] { return to_string(u) + " * " + to_string(v); });
    });
    return s.take();
}

// ---------------------------------------------------------------- quotients

SuiteResult suite_quotients() {
    Suite s("quotients");
    const auto graphs = small_graphs(4);
    const auto aut = GroupFamily::full_automorphism();
    s.check("classes_partition_hom_set", [&](Tally& t) {
        const auto g3 = small_graphs(3);
        for (const auto& a : g3)
            for (const auto& b : g3) {
                const auto homs = enumerate_embeddings(a, b);
                const auto classes = hom_classes<DirectCategory>(a, b, aut);
                const auto group = aut.group(a);
                std::map<std::vector<int>, std::size_t> owner;
                for (std::size_t i = 0; i < classes.size(); ++i)
                    for (const auto& m : classes[i].members) owner[m.map()] = i;
                t.expect(owner.size() == homs.size(), [&] { return "cover " + describe(a) + " " + describe(b); });
                for (const auto& f : homs)
                    for (const auto& g : homs) {
                        bool related = false;
                        for (const auto& alpha : group) related = related || compose_embeddings(g, alpha) == f;
                        t.expect(related == (owner[f.map()] == owner[g.map()]),
                                 [&] { return "relation " + ints(f.map()) + " ~ " + ints(g.map()); });
                    }
            }
    });
    s.check("class_size_law_direct", [&](Tally& t) {
        for (const auto& a : graphs)
            for (const auto& b : graphs)
                t.expect(class_size_law<DirectCategory>(a, b, aut), [&] { return describe(a) + " " + describe(b); });
    });
    s.check("class_size_law_dual", [&](Tally& t) {
        for (int a = 1; a <= 4; ++a)
            for (int b = a; b <= 6; ++b)
                t.expect(class_size_law<DualCategory>({a}, {b}, GroupFamily::identity_only()),
                         [&] { return std::to_string(a) + " " + std::to_string(b); });
    });
    s.check("left_action_composes", [&](Tally& t) {
        const auto g3 = small_graphs(3);
        for (const auto& a : g3)
            for (const auto& b : g3)
                for (const auto& c : g3)
                    for (const auto& d : g3) {
                        const auto classes = hom_classes<DirectCategory>(a, b, aut);
                        if (classes.empty()) continue;
                        for (const auto& w : enumerate_embeddings(b, c))
                            for (const auto& v : enumerate_embeddings(c, d))
                                for (const auto& cls : classes)
                                    t.expect(act_left<DirectCategory>(compose_embeddings(v, w), cls) ==
                                                 act_left<DirectCategory>(v, act_left<DirectCategory>(w, cls)),
                                             [&] { return "w=" + ints(w.map()) + " v=" + ints(v.map()); });
                    }
    });
    return s.take();
}

// ---------------------------------------------------------------- arrowcheck

SuiteResult suite_arrowcheck(int workers) {
    Suite s("arrowcheck");
    ArrowOptions opts;
    opts.limits.workers = workers;
    s.check("six_point_order_arrows_triangles", [&](Tally& t) {
        auto r = check_arrow(ArrowQuery<DirectCategory>{linear_order(2), linear_order(3), linear_order(6), 2, 1}, opts);
        t.expect(r.holds, [] { return "expected the arrow to hold"; });
    });
    s.check("five_point_order_counterexample", [&](Tally& t) {
        auto inst = build_arrow_instance<DirectCategory>(linear_order(2), linear_order(3), linear_order(5),
                                                         GroupFamily::identity_only());
        auto bt = check_arrow(inst, 2, 1, opts);
        ArrowOptions naive = opts;
        naive.naive = true;
        auto nv = check_arrow(inst, 2, 1, naive);
        t.expect(!bt.holds && bt.counterexample && verify_lower_bound(inst, *bt.counterexample, 2),
                 [] { return "no verified counterexample"; });
        t.expect(bt.counterexample == nv.counterexample, [] { return "naive and backtracking disagree"; });
    });
    s.check("min_threshold_values", [&](Tally& t) {
        auto i6 = build_arrow_instance<DirectCategory>(linear_order(2), linear_order(3), linear_order(6), GroupFamily::identity_only());
        auto i5 = build_arrow_instance<DirectCategory>(linear_order(2), linear_order(3), linear_order(5), GroupFamily::identity_only());
        t.expect(min_threshold(i6, 2, opts) == 1, [] { return "C=6"; });
        t.expect(min_threshold(i5, 2, opts) == 2, [] { return "C=5"; });
    });
    s.check("dual_witness", [&](Tally& t) {
        std::vector<FiniteOrder> cands;
        for (int n = 3; n <= 6; ++n) cands.push_back({n});
        auto w = search_witness<DualCategory>({2}, {3}, 2, 1, GroupFamily::identity_only(), cands, opts);
        t.expect(w.witness && w.witness->size == 6, [] { return "expected witness 6"; });
    });
    s.check("monotonicity", [&](Tally& t) {
        for (int a = 1; a <= 2; ++a)
            for (int b = a + 1; b <= 3; ++b)
                for (int k = 1; k <= 3; ++k)
                    for (int tt = 1; tt <= 2; ++tt)
                        for (int c = b; c <= 5; ++c) {
                            auto q = [&](int cc, int kk, int t2) {
                                return check_arrow(ArrowQuery<DirectCategory>{linear_order(a), linear_order(b),
                                                                              linear_order(cc), kk, t2},
                                                   opts)
                                    .holds;
                            };
                            const bool h = q(c, k, tt);
                            const auto tag = [&] {
                                return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + " k=" +
                                       std::to_string(k) + " t=" + std::to_string(tt);
                            };
                            if (!h) continue;
                            t.expect(q(c + 1, k, tt), tag);
                            t.expect(q(c, k, tt + 1), tag);
                            if (k > 1) t.expect(q(c, k - 1, tt), tag);
                        }
    });
    s.check("relabelling_invariance_and_symmetry_agreement", [&](Tally& t) {
        const auto g = small_graphs(3);
        const auto c4 = small_graphs(4);
        for (const auto& a : g)
            for (const auto& b : g)
                for (const auto& c : c4) {
                    auto inst = build_arrow_instance<DirectCategory>(a, b, c, GroupFamily::identity_only());
                    if (inst.hom_ab.empty() || inst.hom_bc.empty() || inst.classes_ac.size() > 24) continue;
                    auto plain = check_arrow(inst, 2, 1, opts);
                    ArrowOptions sym = opts;
                    sym.limits.use_symmetry = true;
                    auto reduced = check_arrow(inst, 2, 1, sym);
                    t.expect(plain.holds == reduced.holds && plain.counterexample == reduced.counterexample,
                             [&] { return "symmetry changed the answer for " + describe(c); });
                    if (!plain.counterexample) continue;
                    for (const auto& perm : inst.class_symmetries()) {
                        std::vector<int> moved(perm.size());
                        for (std::size_t i = 0; i < perm.size(); ++i)
                            moved[i] = (*plain.counterexample)[static_cast<std::size_t>(perm[i])];
                        t.expect(verify_lower_bound(inst, moved, 2), [&] { return "relabelled " + ints(moved); });
                    }
                }
    });
    s.check("vacuous_threshold", [&](Tally& t) {
        for (const auto& c : small_graphs(4)) {
            auto inst = build_arrow_instance<DirectCategory>(complete_graph(2), path_graph(3), c, GroupFamily::identity_only());
            if (inst.hom_bc.empty()) continue;
            t.expect(check_arrow(inst, 3, static_cast<int>(inst.classes_ab.size()), opts).holds,
                     [&] { return describe(c); });
        }
    });
    return s.take();
}

// ---------------------------------------------------------------- proofcolorings

struct GraphTriple {
    Structure a, b, c;
};

std::vector<GraphTriple> graph_triples(int max_c) {
    std::vector<GraphTriple> out;
    const auto gs = small_graphs(max_c);
    for (const auto& a : gs)
        for (const auto& b : gs)
            for (const auto& c : gs)
                if (a.size() <= b.size() && b.size() <= c.size() && !enumerate_embeddings(a, b).empty() &&
                    !enumerate_embeddings(b, c).empty())
                    out.push_back({a, b, c});
    return out;
}

// Calls visit(chi) for every coloring of n items with k colors.
void for_each_coloring(std::size_t n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> chi(n, 0);
    for (;;) {
        visit(chi);
        std::size_t i = n;
        while (i > 0 && chi[i - 1] == k - 1) chi[--i] = 0;
        if (i == 0) return;
        ++chi[i - 1];
    }
}

SuiteResult suite_proofcolorings() {
    Suite s("proofcolorings");
    const auto aut = GroupFamily::full_automorphism();
    s.check("quotient_example", [&](Tally& t) {
        auto inst = build_arrow_instance<DirectCategory>(complete_graph(2), complete_graph(2), complete_graph(3), aut);
        std::vector<int> chi{0, 1, 2};
        auto lifted = quotient_coloring(inst, chi);
        t.expect(lifted.size() == 6, [] { return "expected 6 embeddings"; });
        for (std::size_t i = 0; i < lifted.size(); ++i)
            t.expect(lifted[i] == chi[static_cast<std::size_t>(inst.class_of[i])], [&] { return "embedding " + std::to_string(i); });
    });
    const auto triples = graph_triples(3);
    s.check("quotient_preserves_counts", [&](Tally& t) {
        for (const auto& tr : triples) {
            auto inst = build_arrow_instance<DirectCategory>(tr.a, tr.b, tr.c, aut);
            for_each_coloring(inst.classes_ac.size(), 2, [&](const std::vector<int>& chi) {
                t.expect(verify_quotient(inst, chi, quotient_coloring(inst, chi)), [&] { return ints(chi); });
            });
        }
    });
    s.check("powerset_bound", [&](Tally& t) {
        for (const auto& tr : triples) {
            auto inst = build_arrow_instance<DirectCategory>(tr.a, tr.b, tr.c, aut);
            for_each_coloring(inst.hom_ac.size(), 2, [&](const std::vector<int>& chi) {
                t.expect(verify_powerset(inst, chi, powerset_coloring(inst, chi)), [&] { return ints(chi); });
            });
        }
    });
    s.check("factor_example", [&](Tally& t) {
        auto inst = build_arrow_instance<DirectCategory>(complete_graph(2), complete_graph(2), complete_graph(3), aut);
        auto xi = factor_coloring(inst, std::vector<int>{0, 1, 2});
        std::set<ColorToken> values(xi.begin(), xi.end());
        t.expect(values.size() == 6, [] { return "expected 6 distinct values"; });
    });
    s.check("factor_bound", [&](Tally& t) {
        for (const auto& tr : triples) {
            auto inst = build_arrow_instance<DirectCategory>(tr.a, tr.b, tr.c, aut);
            for_each_coloring(inst.classes_ac.size(), 2, [&](const std::vector<int>& chi) {
                t.expect(verify_factor(inst, chi, factor_coloring(inst, chi)), [&] { return ints(chi); });
            });
        }
    });
    s.check("orbit_coloring", [&](Tally& t) {
        const auto gs = small_graphs(4);
        for (const auto& a : small_graphs(3))
            for (const auto& c : gs) {
                auto inst = build_arrow_instance<DirectCategory>(a, a, c, GroupFamily::identity_only());
                if (inst.hom_ac.empty()) continue;
                for (const auto& alpha : automorphisms(a)) {
                    if (alpha.map() == identity_embedding(a).map()) continue;
                    auto chi = orbit_two_coloring(inst, alpha.map());
                    t.expect(verify_orbit_coloring(inst, chi), [&] { return describe(a) + " in " + describe(c); });
                }
            }
    });
    s.check("orbit_coloring_rejects_group_elements", [&](Tally& t) {
        try {
            orbit_two_coloring(linear_order(2), linear_order(3), GroupFamily::identity_only(), {0, 1});
            t.expect(false, [] { return "identity accepted as alpha"; });
        } catch (const Error& e) {
            t.expect(e.code() == ErrorCode::invalid_argument, [] { return "wrong error code"; });
        }
    });
    return s.take();
}

// ---------------------------------------------------------------- approx

void absorb(Tally& t, const SchemeReport& r) {
    t.cases += r.checked;
    if (!r.failures.empty() && t.failure.empty())
        t.failure = r.failures.front().instance + " expected " + r.failures.front().expected + " got " + r.failures.front().got;
}

SuiteResult suite_approx(int workers) {
    Suite s("approx");
    const LinearOrderScheme lin(4, 8);
    const DualOrderScheme dual(3, 7);
    s.check("linear_scheme", [&](Tally& t) { absorb(t, verify_scheme(lin, workers)); });
    s.check("linear_lift_functorial", [&](Tally& t) { absorb(t, verify_lift_functoriality(lin, workers)); });
    s.check("linear_phi_example", [&](Tally& t) {
        auto x = lin.phi(linear_order(2), OmegaEmbedding({1, 4, 7}));
        t.expect(x.codomain.size() == 7 && x.map.map() == std::vector<int>{1, 4}, [&] { return describe(x); });
    });
    s.check("linear_phi_of_iota_is_inclusion", [&](Tally& t) {
        for (int n = 1; n <= 6; ++n) {
            auto a = linear_order(n);
            auto x = lin.phi(a, lin.iota(lin.extend(a)));
            t.expect(x.codomain == a && x.map == identity_embedding(a), [&] { return describe(x); });
        }
    });
    s.check("linear_star_shift", [&](Tally& t) {
        auto f = Embedding(linear_order(1), linear_order(2), {0});
        auto x = lin.star(OmegaEmbedding({1, 2, 3, 4}), f);
        t.expect(x.codomain.size() == 3 && x.map.map() == std::vector<int>{1}, [&] { return describe(x); });
    });
    s.check("dual_scheme", [&](Tally& t) { absorb(t, verify_scheme(dual, workers)); });
    s.check("dual_lift_functorial", [&](Tally& t) { absorb(t, verify_lift_functoriality(dual, workers)); });
    s.check("dual_phi_example", [&](Tally& t) {
        auto x = dual.phi({2}, RigidSurjection(3, {0, 1, 0, 2, 1}));
        t.expect(x.codomain.size == 3 && x.map.map() == std::vector<int>{0, 1, 0}, [&] { return describe(x); });
    });
    s.check("dual_star_matches_finite_star", [&](Tally& t) {
        for (int r = 1; r <= 2; ++r)
            for (int sz = r; sz <= 3; ++sz)
                for (const auto& f : enumerate_rigid_surjections(sz, r))
                    for (int n = sz + 1; n <= 6; ++n)
                        for (int n2 = sz + 1; n2 <= n; ++n2)
                            for (const auto& h : enumerate_rigid_surjections(n, n2)) {
                                auto x = dual.star(h, DualMorphism(f));
                                t.expect(x.map.surjection() == star_finite(h, f),
                                         [&] { return "h=" + ints(h.values()) + " f=" + ints(f.values()); });
                            }
    });
    const auto stage = saturate_stage(AgeKind::graph, 2, 2);
    const EnumeratedScheme en(stage, 3);
    s.check("enumerated_graph_scheme", [&](Tally& t) { absorb(t, verify_scheme(en, workers)); });
    s.check("enumerated_lift_functorial", [&](Tally& t) { absorb(t, verify_lift_functoriality(en, workers)); });
    s.check("enumerated_tournament_scheme", [&](Tally& t) {
        absorb(t, verify_scheme(EnumeratedScheme(saturate_stage(AgeKind::tournament, 2, 1), 3), workers));
    });
    s.check("enumerated_phi_of_iota", [&](Tally& t) {
        for (const auto& a : en.objects()) {
            auto fa = en.extend(a);
            auto u = en.iota(fa);
            auto x = en.phi(a, u);
            std::vector<int> expect(u.map().begin(), u.map().end() - 1);
            t.expect(x.codomain.size() == u(a.size()) && x.map.map() == expect, [&] { return describe(x); });
        }
    });
    return s.take();
}

// ---------------------------------------------------------------- fraisse

SuiteResult suite_fraisse() {
    Suite s("fraisse");
    const std::vector<AgeKind> ages{AgeKind::graph, AgeKind::digraph, AgeKind::tournament, AgeKind::poset};
    s.check("stages_in_age_and_saturated", [&](Tally& t) {
        for (auto kind : ages)
            for (int r = 0; r <= 2; ++r)
                for (int seed = 1; seed <= 2; ++seed) {
                    auto st = saturate_stage(kind, r, seed);
                    const auto tag = [&] { return std::string(to_string(kind)) + " rounds=" + std::to_string(r); };
                    t.expect(Age(kind).contains(*st.structure), tag);
                    if (r > 0) t.expect(check_extension_axioms(st, r, st.meta.round_ends[static_cast<std::size_t>(r - 1)]), tag);
                }
    });
    s.check("seed_only_stage_is_not_saturated", [&](Tally& t) {
        auto st = saturate_stage(AgeKind::graph, 0, 2);
        t.expect(!check_extension_axioms(st, 1), [] { return "two-point seed passed level 1"; });
        t.expect(check_extension_axioms(st, 0), [] { return "level 0 failed"; });
    });
    s.check("extension_stays_in_age", [&](Tally& t) {
        for (auto kind : ages) {
            const Age age(kind);
            const OnePointExtension j(age);
            for (const auto& a : ordered_age_members(age, kind == AgeKind::digraph ? 3 : 4)) {
                auto ja = j.apply(a.without_order());
                t.expect(ja.size() == a.size() + 1 && age.contains(ja), [&] { return describe(a); });
                auto ordered = j.apply_ordered(a);
                t.expect(age.contains(ordered) && ordered.order().back() == a.size(), [&] { return describe(a); });
            }
        }
        const Age metric(AgeKind::metric, 3);
        const OnePointExtension jm(metric);
        auto sp = metric_space(3, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
        t.expect(metric.contains(jm.apply(sp)), [] { return "metric extension"; });
    });
    s.check("extension_functorial", [&](Tally& t) {
        for (auto kind : ages) {
            const Age age(kind);
            const OnePointExtension j(age);
            const auto objs = ordered_age_members(age, 3);
            for (const auto& a : objs)
                for (const auto& b : objs)
                    for (const auto& f : enumerate_embeddings(a, b)) {
                        t.expect(j.apply(identity_embedding(a)) == identity_embedding(j.apply_ordered(a)),
                                 [&] { return "identity " + describe(a); });
                        for (const auto& c : objs)
                            for (const auto& g : enumerate_embeddings(b, c))
                                t.expect(j.apply(compose_embeddings(g, f)) == compose_embeddings(j.apply(g), j.apply(f)),
                                         [&] { return "f=" + ints(f.map()) + " g=" + ints(g.map()); });
                    }
        }
    });
    s.check("strong_amalgams_validate", [&](Tally& t) {
        for (auto kind : ages) {
            const Age age(kind);
            std::vector<Structure> objs;
            for (const auto& x : ordered_age_members(age, 3)) objs.push_back(x.without_order());
            for (const auto& a : objs)
                for (const auto& b : objs)
                    for (const auto& c : objs) {
                        if (a.size() > b.size() || a.size() > c.size()) continue;
                        const auto fs = enumerate_embeddings(a, b);
                        const auto gs = enumerate_embeddings(a, c);
                        for (const auto& f : fs)
                            for (const auto& g : gs) {
                                auto am = strong_amalgam(age, a, b, c, f.map(), g.map());
                                t.expect(verify_amalgam(age, a, b, c, f.map(), g.map(), am) &&
                                             am.d.size() == b.size() + c.size() - a.size(),
                                         [&] { return describe(b) + " + " + describe(c); });
                            }
                    }
        }
    });
    s.check("amalgam_examples", [&](Tally& t) {
        const Age g(AgeKind::graph);
        auto am = strong_amalgam(g, edgeless_graph(1), complete_graph(2), complete_graph(2), {0}, {0});
        t.expect(is_isomorphic(am.d, path_graph(3)), [&] { return describe(am.d); });
        const Age p(AgeKind::poset);
        Structure chain(binary_signature(), 2, {{{0, 1}}});
        Structure point(binary_signature(), 1, {{}});
        auto pm = strong_amalgam(p, point, chain, chain, {0}, {0});
        t.expect(p.contains(pm.d) && pm.d.size() == 3, [&] { return describe(pm.d); });
    });
    return s.take();
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
    static const std::vector<std::string> names{"relstruct", "rigidsurj",      "paramwords", "quotients",
                                                "arrowcheck", "proofcolorings", "approx",     "fraisse"};
    return names;
}

SuiteResult run_selftest_suite(const std::string& name, int workers) {
    if (name == "relstruct") return suite_relstruct();
    if (name == "rigidsurj") return suite_rigidsurj();
    if (name == "paramwords") return suite_paramwords();
    if (name == "quotients") return suite_quotients();
    if (name == "arrowcheck") return suite_arrowcheck(workers);
    if (name == "proofcolorings") return suite_proofcolorings();
    if (name == "approx") return suite_approx(workers);
    if (name == "fraisse") return suite_fraisse();
    throw Error(ErrorCode::invalid_argument, "unknown selftest suite '" + name + "'");
}

}  // namespace ramsey
