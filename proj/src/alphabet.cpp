#include "valence/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace valence {

namespace {

bool valid_symbol(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& s : symbols_) {
        if (!valid_symbol(s)) throw ParseError("invalid alphabet symbol: '" + s + "'");
        if (!seen.insert(s).second) throw ParseError("duplicate alphabet symbol: '" + s + "'");
    }
}

bool Alphabet::contains(std::string_view symbol) const {
    return std::find(symbols_.begin(), symbols_.end(), symbol) != symbols_.end();
}

Alphabet Alphabet::with(std::string symbol) const {
    if (contains(symbol)) throw ParseError("symbol already in alphabet: '" + symbol + "'");
    auto extended = symbols_;
    extended.push_back(std::move(symbol));
    return Alphabet(std::move(extended));
}

std::string SignedLetter::token() const {
    return sign > 0 ? symbol : symbol + "^-1";
}

SignedWord::SignedWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

SignedWord::SignedWord(Alphabet alphabet, std::vector<SignedLetter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (const auto& l : letters_) {
        if (l.sign != 1 && l.sign != -1)
            throw ParseError("letter sign must be +1 or -1");
        if (!alphabet_.contains(l.symbol))
            throw ParseError("letter '" + l.symbol + "' not in alphabet");
    }
}

SignedWord SignedWord::parse(const Alphabet& alphabet, std::string_view tokens) {
    std::vector<SignedLetter> letters;
    for (auto& tok : split_tokens(tokens)) {
        SignedLetter letter;
        if (tok.ends_with("^-1")) {
            letter.symbol = tok.substr(0, tok.size() - 3);
            letter.sign = -1;
        } else {
            letter.symbol = tok;
        }
        if (!alphabet.contains(letter.symbol))
            throw ParseError("token '" + tok + "' not over the declared alphabet");
        letters.push_back(std::move(letter));
    }
    return SignedWord(alphabet, std::move(letters));
}

SignedWord SignedWord::inverse() const {
    std::vector<SignedLetter> rev(letters_.rbegin(), letters_.rend());
    for (auto& l : rev) l.sign = -l.sign;
    return SignedWord(alphabet_, std::move(rev));
}

SignedWord SignedWord::concat(const SignedWord& rhs) const {
    if (alphabet_ != rhs.alphabet_)
        throw AlphabetMismatch("cannot concatenate signed words over different alphabets");
    auto joined = letters_;
    joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return SignedWord(alphabet_, std::move(joined));
}

std::string SignedWord::tokens() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += l.token();
    }
    return out;
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word word;
    for (auto& tok : split_tokens(text)) {
        if (alphabet.contains(tok)) {
            word.push_back(std::move(tok));
            continue;
        }
        // Fall back to per-character letters for compact words like "ab".
        Word expanded;
        for (char c : tok) {
            std::string letter(1, c);
            if (!alphabet.contains(letter))
                throw ParseError("letter '" + tok + "' not in the input alphabet");
            expanded.push_back(std::move(letter));
        }
        word.insert(word.end(), expanded.begin(), expanded.end());
    }
    return word;
}

Alphabet doubled_alphabet(const Alphabet& base) {
    std::vector<std::string> symbols;
    symbols.reserve(base.size() * 2);
    for (const auto& s : base.symbols()) {
        symbols.push_back(s);
        symbols.push_back(s + "^-1");
    }
    return Alphabet(std::move(symbols));
}

Word to_token_word(const SignedWord& w) {
    Word out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) out.push_back(l.token());
    return out;
}

SignedWord from_token_word(const Alphabet& base, const Word& tokens) {
    std::string joined;
    for (const auto& t : tokens) {
        if (!joined.empty()) joined += ' ';
        joined += t;
    }
    return SignedWord::parse(base, joined);
}

std::string format_word(const Word& word) {
    if (word.empty()) return "ε";
    bool single_chars = std::all_of(word.begin(), word.end(),
                                    [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (const auto& l : word) {
        if (!single_chars && !out.empty()) out += ' ';
        out += l;
    }
    return out;
}

}  // namespace valence
