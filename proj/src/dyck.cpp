#include "valence/dyck.hpp"

#include <algorithm>
#include <map>

namespace valence {

bool is_two_sided_dyck(const SignedWord& w) {
    return free_reduce(w).is_identity();
}

bool is_one_sided_dyck(const SignedWord& w) {
    return poly_eval(w).is_identity();
}

std::set<FreeGroupElement> minima(const SignedWord& w) {
    // Walk all prefixes; an element is disqualified as soon as one of its
    // representing prefixes is followed by a negative generator.
    std::map<SignedWord, bool> followed_by_negative;  // reduced word -> disqualified
    FreeGroupElement current(w.alphabet());
    auto record = [&](const FreeGroupElement& value, bool negative_next) {
        auto [it, inserted] = followed_by_negative.emplace(value.word(), negative_next);
        if (!inserted) it->second = it->second || negative_next;
    };
    const auto& letters = w.letters();
    for (std::size_t i = 0; i <= letters.size(); ++i) {
        if (i > 0)
            current = fg_multiply(
                current, FreeGroupElement(SignedWord(w.alphabet(), {letters[i - 1]})));
        bool negative_next = i < letters.size() && letters[i].sign < 0;
        record(current, negative_next);
    }
    std::set<FreeGroupElement> result;
    for (const auto& [word, disqualified] : followed_by_negative)
        if (!disqualified) result.insert(FreeGroupElement(word));
    return result;
}

bool all_prefixes_positive_or_identity(const SignedWord& w) {
    FreeGroupElement current(w.alphabet());
    auto positive_or_identity = [](const FreeGroupElement& g) {
        return std::all_of(g.word().letters().begin(), g.word().letters().end(),
                           [](const SignedLetter& l) { return l.sign > 0; });
    };
    if (!positive_or_identity(current)) return false;
    for (const auto& l : w.letters()) {
        current = fg_multiply(current, FreeGroupElement(SignedWord(w.alphabet(), {l})));
        if (!positive_or_identity(current)) return false;
    }
    return true;
}

PaddedWord::PaddedWord(SignedWord padded, SignedWord origin_word)
    : word(std::move(padded)), origin(std::move(origin_word)) {
    if (!is_permissible_padding(word, origin))
        throw PreconditionError("not a permissible padding of the origin word");
}

bool is_permissible_padding(const SignedWord& padded, const SignedWord& origin) {
    if (origin.alphabet().contains(kPaddingSymbol)) return false;
    const auto& p = padded.letters();
    std::size_t i = 0;
    auto is_marker = [](const SignedLetter& l) { return l.symbol == kPaddingSymbol; };
    for (const auto& w : origin.letters()) {
        if (w.sign < 0) {
            // zero or more #^-1 before a negative generator
            while (i < p.size() && is_marker(p[i]) && p[i].sign < 0) ++i;
        }
        if (i >= p.size() || p[i] != w) return false;
        ++i;
        // exactly one # after every generator
        if (i >= p.size() || !is_marker(p[i]) || p[i].sign < 0) return false;
        ++i;
    }
    // trailing block of #^-1
    while (i < p.size() && is_marker(p[i]) && p[i].sign < 0) ++i;
    return i == p.size();
}

SignedWord strip_padding(const SignedWord& padded) {
    std::vector<std::string> symbols;
    for (const auto& s : padded.alphabet().symbols())
        if (s != kPaddingSymbol) symbols.push_back(s);
    Alphabet base(std::move(symbols));
    std::vector<SignedLetter> letters;
    for (const auto& l : padded.letters())
        if (l.symbol != kPaddingSymbol) letters.push_back(l);
    return SignedWord(std::move(base), std::move(letters));
}

PaddedWord insert_padding(const SignedWord& w) {
    if (w.alphabet().contains(kPaddingSymbol))
        throw PreconditionError("the word's alphabet already contains the padding symbol");
    if (!is_one_sided_dyck(w))
        throw PreconditionError("insert_padding requires a 1-sided Dyck word");

    Alphabet padded_alphabet = w.alphabet().with(kPaddingSymbol);
    const SignedLetter marker{kPaddingSymbol, +1};
    std::vector<SignedLetter> out;
    Word stack;  // over X ∪ {#}, top at the back
    for (const auto& l : w.letters()) {
        if (l.sign > 0) {
            out.push_back(l);
            stack.push_back(l.symbol);
        } else {
            // Pop markers until the matching symbol surfaces.
            while (!stack.empty() && stack.back() == kPaddingSymbol) {
                out.push_back(marker.inverse());
                stack.pop_back();
            }
            out.push_back(l);
            stack.pop_back();  // guaranteed to be l.symbol: w is 1-sided Dyck
        }
        out.push_back(marker);
        stack.push_back(kPaddingSymbol);
    }
    while (!stack.empty()) {  // only markers remain
        out.push_back(marker.inverse());
        stack.pop_back();
    }
    return PaddedWord(SignedWord(std::move(padded_alphabet), std::move(out)), w);
}

}  // namespace valence
