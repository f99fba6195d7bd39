#include "ramsey/paramwords.hpp"

#include "ramsey/error.hpp"

namespace ramsey {

std::string to_string(Symbol s) {
    return (s.is_letter() ? "L" : "V") + std::to_string(s.index);
}

std::string to_string(const ParameterWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.symbols().size(); ++i) {
        if (i) out += ' ';
        out += to_string(w.symbols()[i]);
    }
    return out;
}

ParameterWord::ParameterWord(int alphabet_size, std::vector<Symbol> symbols)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
    if (alphabet_size_ < 0) throw Error(ErrorCode::invalid_argument, "negative alphabet size");
    if (symbols_.empty()) throw Error(ErrorCode::invalid_argument, "parameter word of length 0");
    int next = 0;
    for (const auto& s : symbols_) {
        if (s.is_letter()) {
            if (s.index < 0 || s.index >= alphabet_size_)
                throw Error(ErrorCode::invalid_argument, "letter " + to_string(s) + " outside the alphabet");
        } else {
            if (s.index < 0 || s.index > next)
                throw Error(ErrorCode::invalid_argument,
                            "variable " + to_string(s) + " occurs before the lower variables");
            if (s.index == next) ++next;
        }
    }
    params_ = next;
}

ParameterWord ParameterWord::identity(int alphabet_size, int m) {
    std::vector<Symbol> symbols;
    for (int j = 0; j < m; ++j) symbols.push_back(Symbol::var(j));
    return ParameterWord(alphabet_size, std::move(symbols));
}

std::vector<ParameterWord> enumerate_parameter_words(int k, int n, int m) {
    if (k < 0 || m < 0 || n < 1) throw Error(ErrorCode::invalid_argument, "bad parameter word dimensions");
    if (n < m) throw Error(ErrorCode::invalid_argument, "a word of length n has at most n parameters");
    std::vector<ParameterWord> out;
    std::vector<Symbol> symbols(static_cast<std::size_t>(n));
    auto rec = [&](auto& self, int i, int used) -> void {
        if (used + (n - i) < m) return;
        if (i == n) {
            if (used == m) out.emplace_back(k, symbols);
            return;
        }
        for (int a = 0; a < k; ++a) {
            symbols[static_cast<std::size_t>(i)] = Symbol::letter(a);
            self(self, i + 1, used);
        }
        for (int v = 0; v <= used && v < m; ++v) {
            symbols[static_cast<std::size_t>(i)] = Symbol::var(v);
            self(self, i + 1, v == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

ParameterWord substitute(const ParameterWord& u, const ParameterWord& v) {
    if (u.alphabet_size() != v.alphabet_size())
        throw Error(ErrorCode::invalid_argument, "words over different alphabets");
    if (u.params() != v.length())
        throw Error(ErrorCode::composition_mismatch, "substitution needs |v| equal to the parameters of u");
    std::vector<Symbol> out;
    out.reserve(u.symbols().size());
    for (const auto& s : u.symbols()) out.push_back(s.is_letter() ? s : v[s.index]);
    return ParameterWord(u.alphabet_size(), std::move(out));
}

ParameterWord partial_substitute(const ParameterWord& u, const ParameterWord& v) {
    if (u.alphabet_size() != v.alphabet_size())
        throw Error(ErrorCode::invalid_argument, "words over different alphabets");
    const int ell = v.length();
    if (ell > u.params())
        throw Error(ErrorCode::composition_mismatch, "partial substitution needs |v| <= parameters of u");
    std::vector<Symbol> out;
    for (const auto& s : u.symbols()) {
        if (s.is_letter()) {
            out.push_back(s);
        } else if (s.index < ell) {
            out.push_back(v[s.index]);
        } else {
            break;  // first occurrence of Var(ell)
        }
    }
    if (out.empty()) throw Error(ErrorCode::empty_word, "partial substitution cut the word at position 0");
    return ParameterWord(u.alphabet_size(), std::move(out));
}

RigidSurjection to_rigid_surjection(const ParameterWord& u) {
    const int k = u.alphabet_size();
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(k + u.length()));
    for (int a = 0; a < k; ++a) values.push_back(a);
    for (const auto& s : u.symbols()) values.push_back(s.is_letter() ? s.index : k + s.index);
    if (!is_rigid_surjection(k + u.params(), values))
        throw Error(ErrorCode::internal, "parameter word produced a non-rigid map");
    return RigidSurjection(k + u.params(), std::move(values));
}

}  // namespace ramsey
