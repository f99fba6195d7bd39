#include "ramsey/cli.hpp"

#include "ramsey/approx.hpp"
#include "ramsey/arrowcheck.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/fraisse.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/paramwords.hpp"
#include "ramsey/quotients.hpp"
#include "ramsey/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ramsey::cli {

namespace {

struct Options {
    // shared
    int workers = 1;
    std::uint64_t cap_colorings = 0;
    int max_classes = kDefaultMaxClasses;
    bool symmetry = false;
    bool naive = false;

    std::string category = "direct";
    std::string family = "identity";
    std::string a, b, c;
    int k = 2;
    int t = 1;
    int n = 0;
    int m = 0;

    std::string kind;    // enumerate
    int from = 0, to = 0;  // witness
    std::vector<std::string> candidates;

    std::string scheme;  // verify-scheme, star
    int max_size = 4;
    int window = 8;
    int s_max = 3;
    int n_max = 7;
    std::string stage_file;
    std::string h, f;

    std::string age = "graph";  // fraisse-stage
    int rounds = 2;
    int seed_size = 1;
    int max_points = kDefaultStageCap;
    std::string out_file;

    std::string suite = "all";
};

class Malformed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Malformed("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON, or @path for a file.
Json json_arg(const std::string& text, const char* what) {
    if (text.empty()) throw Malformed(std::string("missing ") + what);
    return parse_json(text[0] == '@' ? read_file(text.substr(1)) : text);
}

int parse_size(const std::string& text, const std::string& spec) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw Malformed("bad object spec '" + spec + "'");
    return std::stoi(text);
}

Structure parse_structure(const std::string& spec) {
    if (spec.empty()) throw Malformed("missing object spec");
    if (spec[0] == '{') return structure_from_json(parse_json(spec));
    if (spec[0] == '@') return structure_from_json(parse_json(read_file(spec.substr(1))));
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Malformed("bad object spec '" + spec + "'");
    const std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
    if (head == "graph" || head == "struct") {
        if (tail.empty() || tail[0] != '@') throw Malformed("expected " + head + ":@file.json");
        return structure_from_json(parse_json(read_file(tail.substr(1))));
    }
    const int size = parse_size(tail, spec);
    if (head == "lo") return linear_order(size);
    if (head == "complete") return complete_graph(size);
    if (head == "edgeless") return edgeless_graph(size);
    if (head == "path") return path_graph(size);
    if (head == "star") return star_graph(size);
    throw Malformed("unknown object kind '" + head + "'");
}

FiniteOrder parse_order(const std::string& spec) {
    if (spec.rfind("lo:", 0) == 0) return {parse_size(spec.substr(3), spec)};
    return {parse_size(spec, spec)};
}

GroupFamily parse_family(const std::string& name) {
    if (name == "identity") return GroupFamily::identity_only();
    if (name == "automorphism") return GroupFamily::full_automorphism();
    throw Malformed("unknown group family '" + name + "' (expected identity or automorphism)");
}

ArrowOptions arrow_options(const Options& o) {
    ArrowOptions a;
    a.naive = o.naive;
    a.limits.workers = o.workers;
    a.limits.use_symmetry = o.symmetry;
    a.limits.max_classes = o.max_classes;
    a.limits.max_naive_colorings = o.cap_colorings ? o.cap_colorings : naive_cap_from_env();
    return a;
}

Json stats_json(const SearchStats& s) { return {{"nodes", s.nodes}, {"eliminated", s.eliminated}}; }

Json arrow_query_json(const Options& o, bool with_t) {
    Json q = {{"category", o.category}, {"A", o.a}, {"B", o.b}, {"C", o.c}, {"k", o.k}, {"family", o.family},
              {"search", o.naive ? "naive" : "backtracking"}, {"symmetry", o.symmetry}};
    if (with_t) q["t"] = o.t;
    return q;
}

template <class Cat>
Json arrow_json(const Options& o, const ArrowInstance<Cat>& inst) {
    auto res = check_arrow(inst, o.k, o.t, arrow_options(o));
    Json out = {{"query", arrow_query_json(o, true)},
                {"holds", res.holds},
                {"classes", res.num_classes},
                {"stats", stats_json(res.stats)},
                {"counterexample", nullptr}};
    if (res.counterexample) {
        Json ce = Json::array();
        for (std::size_t i = 0; i < inst.classes_ac.size(); ++i)
            ce.push_back(Json::array({inst.classes_ac[i].representative.map(), (*res.counterexample)[i]}));
        out["counterexample"] = std::move(ce);
    }
    return out;
}

Json cmd_arrow(const Options& o) {
    const auto fam = parse_family(o.family);
    if (o.category == "direct")
        return arrow_json(o, build_arrow_instance<DirectCategory>(parse_structure(o.a), parse_structure(o.b),
                                                                  parse_structure(o.c), fam));
    if (o.category == "dual")
        return arrow_json(o, build_arrow_instance<DualCategory>(parse_order(o.a), parse_order(o.b), parse_order(o.c), fam));
    throw Malformed("unknown category '" + o.category + "'");
}

Json cmd_min_t(const Options& o) {
    const auto fam = parse_family(o.family);
    int t = 0;
    if (o.category == "direct")
        t = min_threshold(build_arrow_instance<DirectCategory>(parse_structure(o.a), parse_structure(o.b),
                                                               parse_structure(o.c), fam),
                          o.k, arrow_options(o));
    else if (o.category == "dual")
        t = min_threshold(build_arrow_instance<DualCategory>(parse_order(o.a), parse_order(o.b), parse_order(o.c), fam),
                          o.k, arrow_options(o));
    else
        throw Malformed("unknown category '" + o.category + "'");
    return {{"query", arrow_query_json(o, false)}, {"t", t}};
}

template <class Cat, class Parse>
Json witness_json(const Options& o, const std::vector<std::string>& specs, Parse parse) {
    std::vector<typename Cat::Object> cands;
    for (const auto& s : specs) cands.push_back(parse(s));
    auto res = search_witness<Cat>(parse(o.a), parse(o.b), o.k, o.t, parse_family(o.family), cands, arrow_options(o));
    Json reports = Json::array();
    for (const auto& r : res.reports) {
        Json rj = {{"candidate", specs[r.index]}, {"status", r.status}, {"stats", stats_json(r.stats)}};
        if (r.status == "cap_exceeded") rj["required"] = r.required;
        reports.push_back(std::move(rj));
    }
    Json q = arrow_query_json(o, true);
    q.erase("C");
    q["candidates"] = specs;
    return {{"query", q},
            {"witness", res.witness_index ? Json(specs[*res.witness_index]) : Json(nullptr)},
            {"reports", reports}};
}

Json cmd_witness(const Options& o) {
    std::vector<std::string> specs = o.candidates;
    if (specs.empty()) {
        if (o.from < 1 || o.to < o.from) throw Malformed("give --candidates or a range --from N --to M");
        for (int n = o.from; n <= o.to; ++n) specs.push_back("lo:" + std::to_string(n));
    }
    if (o.category == "direct") return witness_json<DirectCategory>(o, specs, parse_structure);
    if (o.category == "dual") return witness_json<DualCategory>(o, specs, parse_order);
    throw Malformed("unknown category '" + o.category + "'");
}

Json cmd_enumerate(const Options& o) {
    Json items = Json::array();
    Json q = {{"kind", o.kind}};
    if (o.kind == "rsurj") {
        q["n"] = o.n;
        q["m"] = o.m;
        for (const auto& f : enumerate_rigid_surjections(o.n, o.m)) items.push_back(to_json(f));
    } else if (o.kind == "words") {
        q["k"] = o.k;
        q["n"] = o.n;
        q["m"] = o.m;
        for (const auto& w : enumerate_parameter_words(o.k, o.n, o.m)) items.push_back(to_json(w));
    } else if (o.kind == "emb" || o.kind == "copies" || o.kind == "classes") {
        q["A"] = o.a;
        q["B"] = o.b;
        const auto a = parse_structure(o.a), b = parse_structure(o.b);
        if (o.kind == "emb") {
            for (const auto& e : enumerate_embeddings(a, b)) items.push_back(e.map());
        } else if (o.kind == "copies") {
            for (const auto& s : substructure_copies(a, b)) items.push_back(s);
        } else {
            q["family"] = o.family;
            for (const auto& cls : hom_classes<DirectCategory>(a, b, parse_family(o.family))) {
                Json members = Json::array();
                for (const auto& m : cls.members) members.push_back(m.map());
                items.push_back({{"representative", cls.representative.map()}, {"members", members}});
            }
        }
    } else if (o.kind == "aut") {
        q["A"] = o.a;
        for (const auto& e : automorphisms(parse_structure(o.a))) items.push_back(e.map());
    } else {
        throw Malformed("unknown enumeration kind '" + o.kind + "' (rsurj, words, emb, copies, aut, classes)");
    }
    return {{"query", q}, {"count", items.size()}, {"items", items}};
}

Json failures_json(const SchemeReport& r) {
    Json fs = Json::array();
    for (const auto& f : r.failures) fs.push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
    return fs;
}

EnumeratedStructure stage_for(const Options& o, AgeKind age) {
    if (!o.stage_file.empty()) {
        auto st = stage_from_json(parse_json(read_file(o.stage_file)));
        if (st.age != age) throw Error(ErrorCode::invalid_argument, "stage file belongs to a different age");
        return st;
    }
    return saturate_stage(age, o.rounds, o.seed_size, o.max_points);
}

AgeKind enumerated_age(const std::string& scheme) {
    const std::string prefix = "enumerated:";
    if (scheme.rfind(prefix, 0) != 0) throw Malformed("unknown scheme '" + scheme + "'");
    try {
        return parse_age_kind(scheme.substr(prefix.size()));
    } catch (const Error&) {
        throw Malformed("unknown age in scheme '" + scheme + "'");
    }
}

template <class Scheme>
Json scheme_report(const Scheme& s, Json query, int workers) {
    auto main = verify_scheme(s, workers);
    auto lift = verify_lift_functoriality(s, workers);
    return {{"query", std::move(query)},
            {"scheme", s.name()},
            {"checked", main.checked},
            {"failures", failures_json(main)},
            {"lift", {{"checked", lift.checked}, {"failures", failures_json(lift)}}}};
}

Json cmd_verify_scheme(const Options& o) {
    if (o.scheme == "linear")
        return scheme_report(LinearOrderScheme(o.max_size, o.window),
                             {{"scheme", o.scheme}, {"max_size", o.max_size}, {"window", o.window}}, o.workers);
    if (o.scheme == "dual-linear")
        return scheme_report(DualOrderScheme(o.s_max, o.n_max),
                             {{"scheme", o.scheme}, {"s_max", o.s_max}, {"n_max", o.n_max}}, o.workers);
    const AgeKind age = enumerated_age(o.scheme);
    Json q = {{"scheme", o.scheme}, {"max_size", o.max_size}};
    if (o.stage_file.empty()) {
        q["rounds"] = o.rounds;
        q["seed_size"] = o.seed_size;
    } else {
        q["stage"] = o.stage_file;
    }
    auto st = stage_for(o, age);
    q["stage_size"] = st.size();
    return scheme_report(EnumeratedScheme(std::move(st), o.max_size), std::move(q), o.workers);
}

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Json cmd_star(const Options& o) {
    const Json hj = json_arg(o.h, "--h"), fj = json_arg(o.f, "--f");
    Json q = {{"scheme", o.scheme}, {"h", hj}, {"f", fj}};
    if (o.scheme == "linear") {
        LinearOrderScheme s(1, 1);
        if (!fj.is_object() || !fj.contains("dom") || !fj.contains("cod") || !fj.contains("map"))
            throw ParseError("f must be {\"dom\":a,\"cod\":b,\"map\":[...]}");
        Embedding f(linear_order(fj.at("dom").get<int>()), linear_order(fj.at("cod").get<int>()), int_vector(fj.at("map"), "map"));
        auto x = s.star(OmegaEmbedding(int_vector(hj, "h")), f);
        return {{"query", q}, {"codomain", x.codomain.size()}, {"map", x.map.map()}};
    }
    if (o.scheme == "dual-linear") {
        DualOrderScheme s(1, 1);
        auto x = s.star(rsurj_from_json(hj), DualMorphism(rsurj_from_json(fj)));
        return {{"query", q}, {"codomain", x.codomain.size}, {"surjection", to_json(x.map.surjection())}};
    }
    const AgeKind age = enumerated_age(o.scheme);
    if (!fj.is_object() || !fj.contains("A") || !fj.contains("B") || !fj.contains("map"))
        throw ParseError("f must be {\"A\":structure,\"B\":structure,\"map\":[...]}");
    auto ordered = [](Structure s) { return s.has_order() ? s : s.with_identity_order(); };
    Embedding f(ordered(structure_from_json(fj.at("A"))), ordered(structure_from_json(fj.at("B"))), int_vector(fj.at("map"), "map"));
    EnumeratedScheme s(stage_for(o, age), std::max(1, std::max(f.dom().size(), f.cod().size())));
    auto x = s.star(int_vector(hj, "h"), f);
    return {{"query", q}, {"codomain", to_json(x.codomain)}, {"map", x.map.map()}};
}

Json cmd_fraisse_stage(const Options& o) {
    AgeKind age;
    try {
        age = parse_age_kind(o.age);
    } catch (const Error&) {
        throw Malformed("unknown age '" + o.age + "'");
    }
    auto st = saturate_stage(age, o.rounds, o.seed_size, o.max_points);
    Json out = to_json(st);
    out["stage_meta"]["saturation_level"] = o.rounds;
    return out;
}

Json suite_json(const SuiteResult& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    return {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}};
}

Json cmd_selftest(const Options& o, bool& all_passed) {
    std::vector<std::string> names;
    if (o.suite == "all") names = selftest_suites();
    else names.push_back(o.suite);
    Json suites = Json::array();
    all_passed = true;
    for (const auto& n : names) {
        auto r = run_selftest_suite(n, o.workers);
        all_passed = all_passed && r.passed();
        suites.push_back(suite_json(r));
    }
    return {{"query", {{"suite", o.suite}}}, {"suites", suites}, {"passed", all_passed}};
}

Json error_json(const Error& e) {
    Json err = {{"code", to_string(e.code())}, {"message", e.what()}};
    if (const auto* cap = dynamic_cast<const CapExceeded*>(&e)) {
        err["required"] = cap->required();
        err["cap"] = cap->cap();
    }
    return {{"error", err}};
}

void add_arrow_flags(CLI::App* sub, Options& o, bool with_c, bool with_t) {
    sub->add_option("--category", o.category, "direct or dual")->capture_default_str();
    sub->add_option("--A", o.a, "object A")->required();
    sub->add_option("--B", o.b, "object B")->required();
    if (with_c) sub->add_option("--C", o.c, "object C")->required();
    sub->add_option("--k", o.k, "number of colors")->capture_default_str();
    if (with_t) sub->add_option("--t", o.t, "threshold")->capture_default_str();
    sub->add_option("--family", o.family, "identity or automorphism")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Finite Ramsey-theory workbench"};
    app.name("ramsey");
    // star takes a --h option, so help is long-form only
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--workers", o.workers, "search workers; results do not depend on this")->check(CLI::Range(1, 256));
    app.add_option("--cap-colorings", o.cap_colorings, "naive enumeration cap (default 2^22 or RAMSEY_CAP_COLORINGS)");
    app.add_option("--max-classes", o.max_classes, "backtracking cap on |hom(A,C)/~|")->capture_default_str();
    app.add_flag("--symmetry", o.symmetry, "prune colorings by automorphisms of C");
    app.add_flag("--naive", o.naive, "use plain enumeration instead of backtracking");

    auto* enumerate = app.add_subcommand("enumerate", "list rigid surjections, words, embeddings, copies, automorphisms or classes");
    enumerate->add_option("kind", o.kind, "rsurj | words | emb | copies | aut | classes")->required();
    enumerate->add_option("--n", o.n);
    enumerate->add_option("--m", o.m);
    enumerate->add_option("--k", o.k, "alphabet size for words");
    enumerate->add_option("--A", o.a);
    enumerate->add_option("--B", o.b);
    enumerate->add_option("--family", o.family);

    auto* arrow = app.add_subcommand("arrow", "decide C -> (B)^A_{k,t}");
    add_arrow_flags(arrow, o, true, true);
    auto* min_t = app.add_subcommand("min-t", "least t for which the arrow holds");
    add_arrow_flags(min_t, o, true, false);
    auto* witness = app.add_subcommand("witness", "first candidate C for which the arrow holds");
    add_arrow_flags(witness, o, false, true);
    witness->add_option("--from", o.from, "first linear order size");
    witness->add_option("--to", o.to, "last linear order size");
    witness->add_option("--candidates", o.candidates, "object specs")->delimiter(',');

    auto* verify = app.add_subcommand("verify-scheme", "check an approximation scheme exhaustively");
    verify->add_option("scheme", o.scheme, "linear | dual-linear | enumerated:<age>")->required();
    verify->add_option("--max-size", o.max_size)->capture_default_str();
    verify->add_option("--window", o.window)->capture_default_str();
    verify->add_option("--s-max", o.s_max)->capture_default_str();
    verify->add_option("--n-max", o.n_max)->capture_default_str();
    verify->add_option("--rounds", o.rounds)->capture_default_str();
    verify->add_option("--seed-size", o.seed_size)->capture_default_str();
    verify->add_option("--stage", o.stage_file, "stage JSON file");

    auto* star = app.add_subcommand("star", "compute h * f in a scheme");
    star->add_option("scheme", o.scheme, "linear | dual-linear | enumerated:<age>")->required();
    star->add_option("--h", o.h, "JSON or @file")->required();
    star->add_option("--f", o.f, "JSON or @file")->required();
    star->add_option("--rounds", o.rounds)->capture_default_str();
    star->add_option("--seed-size", o.seed_size)->capture_default_str();
    star->add_option("--stage", o.stage_file, "stage JSON file");

    auto* stage = app.add_subcommand("fraisse-stage", "build a saturated finite stage");
    stage->add_option("--age", o.age, "graph | digraph | tournament | poset")->capture_default_str();
    stage->add_option("--rounds", o.rounds)->capture_default_str();
    stage->add_option("--seed-size", o.seed_size)->capture_default_str();
    stage->add_option("--max-points", o.max_points)->capture_default_str();
    stage->add_option("--out", o.out_file, "write the stage here instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "run the built-in property suites");
    selftest->add_option("--suite", o.suite, "suite name or all")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : malformed_input;
    }

    try {
        Json result;
        int code = ok;
        if (enumerate->parsed()) result = cmd_enumerate(o);
        else if (arrow->parsed()) result = cmd_arrow(o);
        else if (min_t->parsed()) result = cmd_min_t(o);
        else if (witness->parsed()) result = cmd_witness(o);
        else if (verify->parsed()) {
            result = cmd_verify_scheme(o);
            if (!result["failures"].empty() || !result["lift"]["failures"].empty()) code = check_failed;
        } else if (star->parsed()) result = cmd_star(o);
        else if (stage->parsed()) {
            result = cmd_fraisse_stage(o);
            if (!o.out_file.empty()) {
                std::ofstream file(o.out_file);
                if (!file) throw Malformed("cannot write '" + o.out_file + "'");
                file << result.dump(2) << "\n";
                result = {{"out", o.out_file}, {"size", result["size"]}, {"stage_meta", result["stage_meta"]}};
            }
        } else if (selftest->parsed()) {
            bool passed = true;
            result = cmd_selftest(o, passed);
            if (!passed) code = check_failed;
        }
        out << result.dump(2) << "\n";
        return code;
    } catch (const Malformed& e) {
        err << "error: " << e.what() << "\n";
        return malformed_input;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return malformed_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return malformed_input;
    } catch (const Error& e) {
        out << error_json(e).dump(2) << "\n";
        return structured_error;
    }
}

}  // namespace ramsey::cli
