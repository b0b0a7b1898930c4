#pragma once

#include <string>
#include <vector>

#include "valence/automaton.hpp"

namespace valence {

struct Production {
    std::string lhs;
    std::vector<std::string> rhs;

    bool operator==(const Production&) const = default;
    auto operator<=>(const Production&) const = default;
};

/// Nonterminals, terminals, a start symbol, and productions. Used as an
/// exact membership oracle for polycyclic and free-group automata.
class ContextFreeGrammar {
public:
    ContextFreeGrammar(std::vector<std::string> nonterminals,
                       std::vector<std::string> terminals, std::string start,
                       std::vector<Production> productions);

    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    const std::vector<std::string>& terminals() const { return terminals_; }
    const std::string& start() const { return start_; }
    const std::vector<Production>& productions() const { return productions_; }

    bool is_nonterminal(const std::string& symbol) const;
    bool is_terminal(const std::string& symbol) const;

private:
    std::vector<std::string> nonterminals_, terminals_;
    std::string start_;
    std::vector<Production> productions_;
};

/// Triple construction for a polycyclic automaton with unit multipliers and
/// acceptance by identity (= empty stack at a final state): nonterminals
/// [p,x,q] derive the words readable from p to q while popping net x (a
/// stack symbol or ε) without going below it.
ContextFreeGrammar pda_to_cfg(const ValenceAutomaton& a);

/// Simulates a free-group register with a pushdown store over marker
/// symbols: multiplying by x either cancels a top x-inverse marker or pushes
/// x; wrong guesses die as Zero. Language-preserving; requires unit
/// multipliers.
ValenceAutomaton fg_automaton_to_pda(const ValenceAutomaton& a);

/// Chomsky normal form (A → BC | a, plus S → ε when ε is in the language).
ContextFreeGrammar cnf_transform(const ContextFreeGrammar& g);

/// Exact membership for a grammar in the normal form produced by
/// cnf_transform.
bool cyk_member(const ContextFreeGrammar& cnf, const Word& w);

}  // namespace valence
