#include "ramsey/json_io.hpp"

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> as_int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Structure& s) {
    Json sig = Json::array();
    Json tuples = Json::object();
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& rel = s.signature().relations()[r];
        sig.push_back(Json::array({rel.name, rel.arity}));
        Json ts = Json::array();
        for (const auto& t : s.tuples(r)) ts.push_back(t);
        tuples[rel.name] = std::move(ts);
    }
    Json out = {{"signature", sig}, {"size", s.size()}, {"tuples", tuples}};
    if (s.has_order()) out["order"] = s.order();
    return out;
}

Structure structure_from_json(const Json& j) {
    const Json& sig = field(j, "signature");
    if (!sig.is_array()) throw ParseError("signature must be an array of [name, arity] pairs");
    std::vector<Relation> rels;
    for (const auto& r : sig) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string())
            throw ParseError("signature entries must be [name, arity] pairs");
        rels.push_back({r[0].get<std::string>(), as_int(r[1], "arity")});
    }
    Signature signature(rels);
    const int size = as_int(field(j, "size"), "size");
    std::vector<std::vector<Tuple>> tuples(rels.size());
    if (j.contains("tuples")) {
        const Json& tj = j.at("tuples");
        if (!tj.is_object()) throw ParseError("tuples must be an object keyed by relation name");
        for (auto it = tj.begin(); it != tj.end(); ++it) {
            auto idx = signature.index_of(it.key());
            if (!idx) throw Error(ErrorCode::signature_mismatch, "tuples for unknown relation '" + it.key() + "'");
            if (!it.value().is_array()) throw ParseError("tuple list must be an array");
            for (const auto& t : it.value()) tuples[*idx].push_back(as_int_list(t, "tuple entry"));
        }
    }
    std::optional<std::vector<int>> order;
    if (j.contains("order") && !j.at("order").is_null()) order = as_int_list(j.at("order"), "order");
    return Structure(std::move(signature), size, std::move(tuples), std::move(order));
}

Json to_json(const RigidSurjection& f) { return {{"dom", f.dom()}, {"cod", f.cod()}, {"values", f.values()}}; }

RigidSurjection rsurj_from_json(const Json& j) {
    auto values = as_int_list(field(j, "values"), "values");
    const int cod = as_int(field(j, "cod"), "cod");
    if (j.contains("dom") && as_int(j.at("dom"), "dom") != static_cast<int>(values.size()))
        throw Error(ErrorCode::invalid_argument, "dom does not match the number of values");
    return RigidSurjection(cod, std::move(values));
}

Json to_json(const ParameterWord& w) {
    Json syms = Json::array();
    for (const auto& s : w.symbols()) syms.push_back(to_string(s));
    return {{"alphabet", w.alphabet_size()}, {"symbols", syms}};
}

Symbol symbol_from_string(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'L' && s[0] != 'V')) throw ParseError("symbol '" + s + "' is not of the form L<i> or V<i>");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw ParseError("symbol '" + s + "' is not of the form L<i> or V<i>");
    const int idx = std::stoi(s.substr(1));
    return s[0] == 'L' ? Symbol::letter(idx) : Symbol::var(idx);
}

ParameterWord word_from_json(const Json& j) {
    const int k = as_int(field(j, "alphabet"), "alphabet");
    const Json& syms = field(j, "symbols");
    if (!syms.is_array()) throw ParseError("symbols must be an array of strings");
    std::vector<Symbol> out;
    for (const auto& s : syms) {
        if (!s.is_string()) throw ParseError("symbols must be strings");
        out.push_back(symbol_from_string(s.get<std::string>()));
    }
    return ParameterWord(k, std::move(out));
}

Json to_json(const EnumeratedStructure& stage) {
    Json out = to_json(*stage.structure);
    out["stage_meta"] = {{"age", to_string(stage.age)},
                         {"rounds", stage.meta.rounds},
                         {"seed_size", stage.meta.seed_size},
                         {"round_ends", stage.meta.round_ends}};
    return out;
}

EnumeratedStructure stage_from_json(const Json& j) {
    const Json& meta = field(j, "stage_meta");
    if (!field(meta, "age").is_string()) throw ParseError("stage_meta.age must be a string");
    EnumeratedStructure stage;
    stage.age = parse_age_kind(meta.at("age").get<std::string>());
    stage.meta.rounds = as_int(field(meta, "rounds"), "rounds");
    stage.meta.seed_size = as_int(field(meta, "seed_size"), "seed_size");
    stage.meta.round_ends = as_int_list(field(meta, "round_ends"), "round_ends");
    auto s = structure_from_json(j);
    if (!s.has_order()) s = s.with_identity_order();
    for (int i = 0; i < s.size(); ++i)
        if (s.order()[static_cast<std::size_t>(i)] != i)
            throw Error(ErrorCode::invalid_argument, "a stage must carry the identity order");
    if (!Age(stage.age).contains(s)) throw Error(ErrorCode::invalid_argument, "stage is not a member of its age");
    stage.structure = std::make_shared<const Structure>(std::move(s));
    return stage;
}

}  // namespace ramsey
