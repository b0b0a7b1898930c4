#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "valence/alphabet.hpp"

namespace valence {

/// A finite automaton over Σ* × Ω*: edges carry an input word and an output
/// word (either possibly ε). Recognises a rational transduction.
class FiniteTransducer {
public:
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        Word in;
        Word out;

        bool operator==(const Edge&) const = default;
        auto operator<=>(const Edge&) const = default;
    };

    FiniteTransducer(Alphabet input_alphabet, Alphabet output_alphabet,
                     std::vector<std::string> state_names, const std::string& initial,
                     const std::vector<std::string>& finals);

    void add_edge(const std::string& from, Word in, Word out, const std::string& to);
    void add_edge(std::size_t from, Word in, Word out, std::size_t to);

    const Alphabet& input_alphabet() const { return input_; }
    const Alphabet& output_alphabet() const { return output_; }
    const std::vector<std::string>& state_names() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    std::size_t initial() const { return initial_; }
    bool is_final(std::size_t state) const { return final_[state]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t state_id(const std::string& name) const;

private:
    Alphabet input_, output_;
    std::vector<std::string> states_;
    std::size_t initial_ = 0;
    std::vector<bool> final_;
    std::vector<Edge> edges_;
};

struct ImageResult {
    std::set<Word> words;
    bool truncated = false;  // some output exceeded the cap
};

/// All v with |v| ≤ cap and (u, v) recognised. ε-input cycles are handled by
/// deduplication on (state, position, output); outputs that outgrow the cap
/// set the truncation flag.
ImageResult image_of_word(const FiniteTransducer& t, const Word& u, std::size_t cap);

ImageResult image_of_language(const FiniteTransducer& t, const std::set<Word>& language,
                              std::size_t cap);

/// Splits every edge so input and output each carry at most one letter.
/// Preserves the recognised relation.
FiniteTransducer normalize_labels(const FiniteTransducer& t);

/// Relational composition: recognises {(u, w) : ∃v. (u,v) ∈ r, (v,w) ∈ s}.
/// The middle alphabets must agree.
FiniteTransducer compose(const FiniteTransducer& r, const FiniteTransducer& s);

/// A free-monoid morphism sending each letter to a single letter or ε.
class AlphabeticMorphism {
public:
    /// `mapping` must be total on `from`; images are letters of `to` or "".
    AlphabeticMorphism(Alphabet from, Alphabet to, std::map<std::string, std::string> mapping);

    const Alphabet& from() const { return from_; }
    const Alphabet& to() const { return to_; }
    const std::string& image(const std::string& letter) const;

    Word apply(const Word& w) const;

private:
    Alphabet from_, to_;
    std::map<std::string, std::string> mapping_;
};

std::set<Word> morphism_image(const AlphabeticMorphism& m, const std::set<Word>& language);

/// One state with a loop (a, m(a)) per letter.
FiniteTransducer morphism_to_transducer(const AlphabeticMorphism& m);

}  // namespace valence
