#pragma once

// Parameter words over a finite linearly ordered alphabet {0 < ... < k-1}.
//
// An m-parameter word of length n uses letters and the variables
// Var(0) .. Var(m-1); every variable occurs, and first occurrences appear in
// increasing variable order. m = 0 (plain words) is allowed.

#include "ramsey/rigidsurj.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ramsey {

struct Symbol {
    enum class Kind : unsigned char { letter, variable };

    Kind kind = Kind::letter;
    int index = 0;

    static Symbol letter(int i) { return {Kind::letter, i}; }
    static Symbol var(int j) { return {Kind::variable, j}; }
    bool is_letter() const noexcept { return kind == Kind::letter; }
    bool is_variable() const noexcept { return kind == Kind::variable; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// "L3" / "V0" spelling used in JSON and diagnostics.
std::string to_string(Symbol s);

class ParameterWord {
public:
    /// Validating constructor. The number of parameters is the number of
    /// distinct variables; they must be 0..m-1 with ordered first occurrences.
    ParameterWord(int alphabet_size, std::vector<Symbol> symbols);

    /// The identity word Var(0) Var(1) ... Var(m-1).
    static ParameterWord identity(int alphabet_size, int m);

    int alphabet_size() const noexcept { return alphabet_size_; }
    int length() const noexcept { return static_cast<int>(symbols_.size()); }
    int params() const noexcept { return params_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    const Symbol& operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const ParameterWord&, const ParameterWord&) = default;
    friend std::strong_ordering operator<=>(const ParameterWord& a, const ParameterWord& b) {
        if (auto c = a.alphabet_size_ <=> b.alphabet_size_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

private:
    int alphabet_size_ = 0;
    int params_ = 0;
    std::vector<Symbol> symbols_;
};

std::string to_string(const ParameterWord& w);

/// W^n_m over a k-letter alphabet, lexicographic by symbol vector with every
/// letter ordered before every variable. Requires n >= m >= 0 and n >= 1.
std::vector<ParameterWord> enumerate_parameter_words(int k, int n, int m);

/// u . v: every Var(i) of u replaced by v[i]. Requires u.params() == v.length().
ParameterWord substitute(const ParameterWord& u, const ParameterWord& v);

/// u * v: Var(i) replaced by v[i] for i < |v|, and u cut just before the first
/// occurrence of Var(|v|). Throws an empty_word error when the cut leaves nothing.
ParameterWord partial_substitute(const ParameterWord& u, const ParameterWord& v);

/// The rigid surjection (letters, positions) -> (letters, variables) that
/// fixes the letters and sends position j to u[j].
RigidSurjection to_rigid_surjection(const ParameterWord& u);

}  // namespace ramsey
