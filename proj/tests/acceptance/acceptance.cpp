// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "ramsey/approx.hpp"
#include "ramsey/arrowcheck.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/fraisse.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/paramwords.hpp"
#include "ramsey/proofcolorings.hpp"
#include "ramsey/quotients.hpp"
#include "ramsey/rigidsurj.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#ifndef RAMSEY_CLI_PATH
#error "RAMSEY_CLI_PATH must point at the ramsey executable"
#endif

using namespace ramsey;

namespace {

using Direct = DirectCategory;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// The dual witness for (2, 3, k=2, t=1) as first produced by the search.
constexpr int kDualWitnessFixture = 6;

std::vector<Structure> graphs_up_to(int n) {
    std::vector<Structure> out;
    for (int i = 1; i <= n; ++i)
        for (auto& g : graphs_up_to_isomorphism(i)) out.push_back(g);
    return out;
}

long long stirling2(int n, int m) {
    std::vector<std::vector<long long>> s(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][m];
}

struct Shell {
    int status;
    std::string out;
};

Shell shell(const std::string& args) {
    const std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>/dev/null";
    Shell r{-1, ""};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Outcome criterion1() {
    std::uint64_t cases = 0, failures = 0;
    for (int k = 0; k <= 2; ++k)
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= std::min(n, 3); ++m)
                for (int l = 0; l <= std::min(m, 2); ++l) {
                    if (k + l == 0) continue;  // RSurj(m, 0) is empty
                    const auto us = enumerate_parameter_words(k, n, m);
                    const auto vs = enumerate_parameter_words(k, m, l);
                    for (const auto& u : us)
                        for (const auto& v : vs) {
                            ++cases;
                            if (to_rigid_surjection(substitute(u, v)) !=
                                compose_rsurj(to_rigid_surjection(v), to_rigid_surjection(u)))
                                ++failures;
                        }
                }
    return {failures == 0 && cases > 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome criterion2() {
    std::uint64_t cases = 0, failures = 0;
    for (int r = 1; r <= 2; ++r)
        for (int s = r; s <= 3; ++s)
            for (const auto& f : enumerate_rigid_surjections(s, r)) {
                const auto fp = extend_prime(f);
                for (int n = s + 1; n <= 7; ++n)
                    for (const auto& u : enumerate_rigid_surjections(n, s + 1)) {
                        ++cases;
                        if (compose_rsurj(f, phi_restrict(u)) != phi_restrict(compose_rsurj(fp, u))) ++failures;
                    }
            }
    return {failures == 0 && cases > 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome criterion3() {
    const auto fam = GroupFamily::identity_only();
    auto i6 = build_arrow_instance<Direct>(linear_order(2), linear_order(3), linear_order(6), fam);
    auto i5 = build_arrow_instance<Direct>(linear_order(2), linear_order(3), linear_order(5), fam);
    ArrowOptions naive;
    naive.naive = true;
    auto b6 = check_arrow(i6, 2, 1), n6 = check_arrow(i6, 2, 1, naive);
    auto b5 = check_arrow(i5, 2, 1), n5 = check_arrow(i5, 2, 1, naive);
    const bool verified = b5.counterexample && verify_lower_bound(i5, *b5.counterexample, 2);
    const bool agree = b6.holds == n6.holds && b5.holds == n5.holds && b5.counterexample == n5.counterexample;
    std::ostringstream d;
    d << "C=6 holds=" << b6.holds << ", C=5 holds=" << b5.holds << ", counterexample verified=" << verified
      << ", naive agrees=" << agree;
    return {b6.holds && !b5.holds && verified && agree, d.str()};
}

Outcome criterion4() {
    std::vector<FiniteOrder> cands;
    for (int n = 3; n <= 6; ++n) cands.push_back({n});
    auto w = search_witness<DualCategory>({2}, {3}, 2, 1, GroupFamily::identity_only(), cands);
    bool capped = false;
    for (const auto& r : w.reports) capped = capped || r.status == "cap_exceeded";
    const int found = w.witness ? w.witness->size : -1;

    const std::string args = "witness --category dual --A 2 --B 3 --k 2 --t 1 --from 3 --to 6";
    auto first = shell(args), second = shell(args), parallel = shell("--workers 4 " + args);
    const bool identical = first.status == 0 && first.out == second.out && first.out == parallel.out;
    std::string cli_witness;
    try {
        cli_witness = Json::parse(first.out).at("witness").get<std::string>();
    } catch (const std::exception&) {
        cli_witness = "?";
    }
    std::ostringstream d;
    d << "witness n=" << found << " (fixture " << kDualWitnessFixture << "), cli=" << cli_witness
      << ", cap hit=" << capped << ", reruns byte-identical=" << identical;
    return {found == kDualWitnessFixture && !capped && identical && cli_witness == "lo:6", d.str()};
}

Outcome criterion5() {
    const auto graphs = graphs_up_to(4);
    const auto fam = GroupFamily::full_automorphism();
    std::uint64_t classes = 0, failures = 0;
    for (const auto& a : graphs) {
        const auto aut = automorphisms(a).size();
        for (const auto& b : graphs)
            for (const auto& cls : hom_classes<Direct>(a, b, fam)) {
                ++classes;
                if (cls.size() != aut) ++failures;
            }
    }
    return {failures == 0 && classes > 0, std::to_string(classes) + " classes, " + std::to_string(failures) + " failures"};
}

// Exhaustive over every 2-coloring of hom(A, C), and every 2-coloring of
// classes(A, C), for all graph triples with |C| <= 4. k = 1 is covered by the
// constant colorings inside the k = 2 sweep.
Outcome criterion6() {
    const auto graphs = graphs_up_to(4);
    const auto fam = GroupFamily::full_automorphism();
    std::uint64_t cases = 0, failures = 0, instances = 0;
    for (const auto& c : graphs)
        for (const auto& a : graphs) {
            if (a.size() > c.size() || enumerate_embeddings(a, c).empty()) continue;
            // Collect w-edges of every admissible B; they share hom(A, C).
            std::optional<ArrowInstance<Direct>> base;
            std::set<std::pair<std::vector<int>, std::vector<int>>> edges;  // (hom edge, class edge)
            for (const auto& b : graphs) {
                if (b.size() < a.size() || b.size() > c.size()) continue;
                if (enumerate_embeddings(a, b).empty() || enumerate_embeddings(b, c).empty()) continue;
                auto inst = build_arrow_instance<Direct>(a, b, c, fam);
                ++instances;
                for (std::size_t w = 0; w < inst.hom_bc.size(); ++w) {
                    // direct recount uses the embeddings themselves, not the cached edges
                    std::vector<int> homs, cls;
                    for (const auto& f : inst.hom_ab) homs.push_back(inst.index_of(compose_embeddings(inst.hom_bc[w], f).map()));
                    for (int h : homs) cls.push_back(inst.class_of[static_cast<std::size_t>(h)]);
                    std::sort(homs.begin(), homs.end());
                    homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
                    std::sort(cls.begin(), cls.end());
                    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
                    edges.insert({homs, cls});
                }
                if (!base) base.emplace(std::move(inst));
            }
            if (!base) continue;
            const auto& inst = *base;
            const int g = static_cast<int>(inst.group_a.size());
            const std::size_t nh = inst.hom_ac.size(), nc = inst.classes_ac.size();

            std::vector<int> chi(nh);
            std::vector<ColorToken> tokens;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nh); ++mask) {
                for (std::size_t i = 0; i < nh; ++i) chi[i] = static_cast<int>((mask >> i) & 1);
                powerset_coloring_into(inst, std::span<const int>(chi), tokens);
                for (const auto& [homs, cls] : edges) {
                    ++cases;
                    std::set<int> seen;
                    for (int h : homs) seen.insert(chi[static_cast<std::size_t>(h)]);
                    std::set<ColorToken> seen_tokens;
                    for (int c2 : cls) seen_tokens.insert(tokens[static_cast<std::size_t>(c2)]);
                    // a class certificate with t tokens yields at most t |G_A| colors
                    if (static_cast<int>(seen.size()) > g * static_cast<int>(seen_tokens.size())) ++failures;
                }
            }

            std::vector<int> chi_cls(nc);
            std::vector<ColorToken> xi;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask) {
                for (std::size_t i = 0; i < nc; ++i) chi_cls[i] = static_cast<int>((mask >> i) & 1);
                factor_coloring_into(inst, std::span<const int>(chi_cls), xi);
                int n = std::numeric_limits<int>::max(), got = std::numeric_limits<int>::max();
                for (const auto& [homs, cls] : edges) {
                    std::set<int> seen;
                    for (int c2 : cls) seen.insert(chi_cls[static_cast<std::size_t>(c2)]);
                    std::set<ColorToken> seen_xi;
                    for (int h : homs) seen_xi.insert(xi[static_cast<std::size_t>(h)]);
                    n = std::min(n, static_cast<int>(seen.size()));
                    got = std::min(got, static_cast<int>(seen_xi.size()));
                }
                ++cases;
                if (got < n * g) ++failures;
            }
        }
    std::ostringstream d;
    d << instances << " instances, " << cases << " cases, " << failures << " failures";
    return {failures == 0 && cases > 0, d.str()};
}

Outcome criterion7() {
    const auto graphs = graphs_up_to(5);
    std::uint64_t cases = 0, failures = 0;
    for (const auto& a : graphs) {
        const auto auts = automorphisms(a);
        if (auts.size() < 2) continue;
        // G_A ranges over the trivial group and every cyclic subgroup of Aut(A).
        std::vector<GroupFamily> families{GroupFamily::identity_only()};
        std::set<std::vector<std::vector<int>>> seen_groups;
        for (const auto& gen : auts) {
            auto group = generated_subgroup({gen.map()}, a.size());
            if (group.size() == 1 || group.size() == auts.size() || !seen_groups.insert(group).second) continue;
            families.push_back(GroupFamily::explicit_groups({ExplicitGroup{a, group}}));
        }
        for (const auto& fam : families) {
            std::set<std::vector<int>> in_group;
            for (const auto& e : fam.group(a)) in_group.insert(e.map());
            for (const auto& alpha : auts) {
                if (in_group.contains(alpha.map())) continue;
                for (const auto& c : graphs) {
                    if (c.size() < a.size() || enumerate_embeddings(a, c).empty()) continue;
                    ++cases;
                    auto inst = build_arrow_instance<Direct>(a, a, c, fam);
                    auto chi = orbit_two_coloring(inst, alpha.map());
                    if (!verify_orbit_coloring(inst, chi)) ++failures;
                }
            }
        }
    }
    return {failures == 0 && cases > 0, std::to_string(cases) + " (A, alpha, G_A, C) cases, " + std::to_string(failures) + " failures"};
}

Outcome criterion8() {
    auto lin = LinearOrderScheme(4, 8);
    auto dual = DualOrderScheme(3, 7);
    auto stage = saturate_stage(AgeKind::graph, 2, 2);
    auto enumerated = EnumeratedScheme(stage, 3);
    std::vector<SchemeReport> reports = {verify_scheme(lin), verify_lift_functoriality(lin), verify_scheme(dual),
                                         verify_lift_functoriality(dual), verify_scheme(enumerated),
                                         verify_lift_functoriality(enumerated)};
    bool ok = true;
    std::ostringstream d;
    for (const auto& r : reports) {
        ok = ok && r.ok() && r.checked > 0;
        d << r.scheme << "/" << r.check << " " << r.checked << ":" << r.failures.size() << " ";
    }
    d << "(graph stage " << stage.size() << " points)";
    return {ok, d.str()};
}

Outcome criterion9() {
    int mismatches = 0, cells = 0;
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m) {
            ++cells;
            const long long s = stirling2(n, m);
            if (static_cast<long long>(enumerate_rigid_surjections(n, m).size()) != s) ++mismatches;
            if (static_cast<long long>(enumerate_parameter_words(0, n, m).size()) != s) ++mismatches;
        }
    return {mismatches == 0, std::to_string(cells) + " (n, m) cells, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion10() {
    auto stage = saturate_stage(AgeKind::graph, 2, 1);
    const bool axioms = Age(AgeKind::graph).contains(*stage.structure) &&
                        check_extension_axioms(stage, 2, stage.meta.round_ends[1]);

    std::uint64_t j_cases = 0, j_fail = 0, am_cases = 0, am_fail = 0;
    for (auto kind : {AgeKind::graph, AgeKind::digraph, AgeKind::tournament, AgeKind::poset}) {
        const Age age(kind);
        const OnePointExtension j(age);
        std::vector<Structure> members;
        for (const auto& s : ordered_age_members(age, 3)) members.push_back(s.without_order());
        for (const auto& a : members) {
            const auto ja = j.apply(a);
            if (ja.size() != a.size() + 1 || !age.contains(ja) ||
                !is_embedding(a, ja, identity_embedding(a).map()))
                ++j_fail;
            for (const auto& b : members)
                for (const auto& f : enumerate_embeddings(a, b)) {
                    for (const auto& c : members)
                        for (const auto& g : enumerate_embeddings(b, c)) {
                            ++j_cases;
                            if (j.apply(compose_embeddings(g, f)).map() != compose_embeddings(j.apply(g), j.apply(f)).map())
                                ++j_fail;
                        }
                    for (const auto& c : members)
                        for (const auto& g : enumerate_embeddings(a, c)) {
                            ++am_cases;
                            try {
                                auto am = strong_amalgam(age, a, b, c, f.map(), g.map());
                                if (!verify_amalgam(age, a, b, c, f.map(), g.map(), am)) ++am_fail;
                            } catch (const Error&) {
                                ++am_fail;
                            }
                        }
                }
        }
    }
    std::ostringstream d;
    d << "stage " << stage.size() << " points, level-2 axioms=" << axioms << ", J " << j_cases << ":" << j_fail
      << ", amalgams " << am_cases << ":" << am_fail;
    return {axioms && j_fail == 0 && am_fail == 0 && j_cases > 0 && am_cases > 0, d.str()};
}

Outcome criterion11() {
    const std::vector<std::string> commands = {
        "selftest --suite all",
        "arrow --category direct --A lo:2 --B lo:3 --C lo:5 --k 2 --t 1",
        "arrow --category dual --A 2 --B 3 --C 5 --k 2 --t 1",
        "min-t --A lo:2 --B lo:3 --C lo:5 --k 2",
        "witness --A lo:2 --B lo:3 --from 3 --to 7",
        "enumerate rsurj --n 5 --m 3",
        "enumerate words --k 1 --n 4 --m 2",
        "enumerate classes --A complete:2 --B complete:4 --family automorphism",
        "verify-scheme linear --max-size 3 --window 6",
        "verify-scheme dual-linear --s-max 3 --n-max 6",
        "verify-scheme enumerated:graph --rounds 2 --seed-size 1 --max-size 3",
        "star dual-linear --h '{\"cod\":4,\"values\":[0,1,2,1,3]}' --f '{\"cod\":1,\"values\":[0,0]}'",
        "fraisse-stage --age tournament --rounds 2",
    };
    int mismatches = 0;
    bool selftest_passed = false;
    for (const auto& cmd : commands) {
        auto a = shell(cmd), b = shell(cmd), one = shell("--workers 1 " + cmd), four = shell("--workers 4 " + cmd);
        const bool same = a.status == 0 && a.out == b.out && a.out == one.out && a.out == four.out &&
                          a.status == b.status && a.status == four.status;
        if (!same) {
            ++mismatches;
            std::cerr << "  nondeterministic or failing: " << cmd << " (exit " << a.status << ")\n";
        }
        if (cmd.rfind("selftest", 0) == 0) selftest_passed = a.status == 0;
    }
    std::ostringstream d;
    d << commands.size() << " commands x 4 runs, " << mismatches << " mismatches, selftest passed=" << selftest_passed;
    return {mismatches == 0 && selftest_passed, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"substitution matches composition", criterion1},
        {"star identity on rigid surjections", criterion2},
        {"R(3,3) via linear orders", criterion3},
        {"dual witness fixture", criterion4},
        {"class-size law", criterion5},
        {"powerset and factor round trip", criterion6},
        {"orbit two-coloring", criterion7},
        {"scheme verification", criterion8},
        {"Stirling counts", criterion9},
        {"stage soundness, J and amalgams", criterion10},
        {"CLI determinism", criterion11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << " [" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << "s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
