#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "valence/errors.hpp"

namespace valence {

/// A word over a plain (unsigned) alphabet: a sequence of symbol tokens.
using Word = std::vector<std::string>;

/// An ordered finite set of distinct symbol tokens.
///
/// Alphabets are value objects compared by their symbol sequence. Symbols are
/// non-empty strings without whitespace; the suffix "^-1" is reserved for the
/// signed-word token syntax and may not end a symbol.
class Alphabet {
public:
    Alphabet() = default;  // the empty alphabet (trivial monoid only)
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    bool contains(std::string_view symbol) const;

    /// X ∪ {symbol}; throws if `symbol` is already present.
    Alphabet with(std::string symbol) const;

    bool operator==(const Alphabet&) const = default;
    auto operator<=>(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

/// One generator occurrence: a symbol together with a sign (+1 or -1).
struct SignedLetter {
    std::string symbol;
    int sign = +1;

    bool operator==(const SignedLetter&) const = default;
    auto operator<=>(const SignedLetter&) const = default;

    SignedLetter inverse() const { return {symbol, -sign}; }
    /// Token form: "x" or "x^-1".
    std::string token() const;
};

/// A word over the doubled alphabet X̄ = {x, x^-1 : x ∈ X}.
///
/// The universal syntax for register multipliers. The empty sequence is ε.
/// Every value carries its alphabet so that cross-alphabet combinations are
/// detectable errors.
class SignedWord {
public:
    SignedWord() = default;
    explicit SignedWord(Alphabet alphabet);
    SignedWord(Alphabet alphabet, std::vector<SignedLetter> letters);

    /// Parses a whitespace-separated token string such as "x y^-1 #".
    static SignedWord parse(const Alphabet& alphabet, std::string_view tokens);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<SignedLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    SignedWord inverse() const;
    SignedWord concat(const SignedWord& rhs) const;

    /// Canonical token string ("x y^-1"); ε serializes as "".
    std::string tokens() const;

    bool operator==(const SignedWord&) const = default;
    auto operator<=>(const SignedWord&) const = default;

private:
    Alphabet alphabet_;
    std::vector<SignedLetter> letters_;
};

/// Splits on ASCII whitespace.
std::vector<std::string> split_tokens(std::string_view text);

/// Parses a word over a plain alphabet. Tokens are whitespace-separated; a
/// single token that is not itself a symbol but whose characters all are
/// single-character symbols is split per character, so "ab" over {a,b} is the
/// two-letter word.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Joins a word's letters for display; ε renders as "ε".
std::string format_word(const Word& word);

/// X̄ = {x, x^-1 : x ∈ X} as a plain alphabet of token symbols.
Alphabet doubled_alphabet(const Alphabet& base);

/// A signed word as a plain word over the doubled alphabet.
Word to_token_word(const SignedWord& w);

/// Parses a plain word of signed tokens back over `base`.
SignedWord from_token_word(const Alphabet& base, const Word& tokens);

}  // namespace valence
