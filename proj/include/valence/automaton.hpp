#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "valence/alphabet.hpp"
#include "valence/monoid.hpp"

namespace valence {

/// An edge's register multiplier: one generator word per monoid factor
/// (a single part for non-product monoids).
struct Multiplier {
    std::vector<SignedWord> parts;

    static Multiplier single(SignedWord word);
    /// ε in every factor, with the correct per-factor alphabets.
    static Multiplier identity(const MonoidSpec& spec);

    std::size_t total_length() const;
    bool is_epsilon() const;

    bool operator==(const Multiplier&) const = default;
    auto operator<=>(const Multiplier&) const = default;
};

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Multiplier mult;
    std::string read;        // input letter, or "" for ε
    RegisterElement value;   // mult evaluated in the register monoid
};

/// A finite automaton over M × Σ*: edges carry a register multiplier and an
/// input letter or ε. A word is accepted when a path from the initial state
/// to a final state reads it with the register product equal to the identity.
class ValenceAutomaton {
public:
    ValenceAutomaton(MonoidSpec monoid, Alphabet input_alphabet,
                     std::vector<std::string> state_names, const std::string& initial,
                     const std::vector<std::string>& finals);

    void add_edge(const std::string& from, const Multiplier& mult, const std::string& read,
                  const std::string& to);
    void add_edge(std::size_t from, Multiplier mult, std::string read, std::size_t to);

    const MonoidSpec& monoid() const { return monoid_; }
    const Alphabet& input_alphabet() const { return input_; }
    const std::vector<std::string>& state_names() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    std::size_t initial() const { return initial_; }
    bool is_final(std::size_t state) const { return final_[state]; }
    std::vector<std::size_t> final_states() const;
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t state_id(const std::string& name) const;

    /// Edge indices leaving `state`.
    const std::vector<std::size_t>& out_edges(std::size_t state) const { return out_[state]; }

private:
    MonoidSpec monoid_;
    Alphabet input_;
    std::vector<std::string> states_;
    std::size_t initial_ = 0;
    std::vector<bool> final_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

enum class Outcome { Accepted, Rejected, BudgetExhausted };

/// Caps for the configuration search. register_cap 0 selects the default
/// |w| · max-multiplier-length · |states| + 8.
struct SearchBudget {
    std::size_t register_cap = 0;
    std::size_t max_visited = 5'000'000;
};

/// Breadth-first search over configurations (state, position, register
/// normal form) with deduplication.
///
/// Dead configurations are discarded outright: Zero registers, polycyclic
/// registers with a non-empty pop component (the pop component never shrinks
/// under right multiplication), free-group registers whose inverse is not
/// reachable as a future multiplier product (decided exactly by cancellation
/// saturation of the position-indexed multiplier NFA), and free-abelian
/// registers out of drift range of the remaining input. These discards are
/// certificates, not budget pruning.
///
/// Rejected is only reported when the search exhausted the frontier without
/// the caps pruning anything; otherwise the answer is BudgetExhausted.
Outcome accepts(const ValenceAutomaton& automaton, const Word& word,
                const SearchBudget& budget = {});

struct Enumeration {
    std::set<Word> words;
    bool complete = true;  // false if any membership query exhausted its budget
};

/// All accepted words of length ≤ max_len in length-lexicographic order.
Enumeration enumerate_language(const ValenceAutomaton& automaton, std::size_t max_len,
                               const SearchBudget& budget = {});

/// The finite set of multipliers occurring on edges; the automaton is
/// equivalently an automaton over the submonoid they generate.
std::set<Multiplier> used_submonoid_generators(const ValenceAutomaton& automaton);

}  // namespace valence
