#pragma once

#include "valence/automaton.hpp"
#include "valence/transducer.hpp"

namespace valence {

/// The product automaton over M1 × M2: synchronized edges on shared input
/// letters, asynchronous ε-edges padded with identities. Accepts
/// L(a1) ∩ L(a2). Both machines must share the input alphabet.
ValenceAutomaton product_automaton(const ValenceAutomaton& a1, const ValenceAutomaton& a2);

/// Subdivides edges until every multiplier carries at most one generator
/// letter in total. Language-preserving.
ValenceAutomaton normalize_multipliers(const ValenceAutomaton& a);

/// Views a non-product automaton as a transducer from generator words to
/// input words: edge (s, m, a, t) becomes (s, m as tokens, a, t). The image
/// of the monoid's identity language is the accepted language.
FiniteTransducer automaton_to_transducer(const ValenceAutomaton& a);

/// Inverse view: each edge's input word is evaluated as a multiplier in
/// `monoid`. Edge outputs must carry at most one letter (normalize first).
ValenceAutomaton transducer_to_automaton(const FiniteTransducer& t, const MonoidSpec& monoid);

/// One-state transducer with loops (w_a, a): rewrites words over one
/// generating set into another.
FiniteTransducer generator_change_transducer(
    const Alphabet& from_generators, const Alphabet& to_generators,
    const std::vector<std::pair<SignedWord, SignedLetter>>& pairs);

/// Retags a free-group automaton as polycyclic or vice versa, keeping
/// states, edges, and multipliers.
ValenceAutomaton reinterpret_register(const ValenceAutomaton& a, MonoidKind kind);

/// The doubled-state padding construction: from a P(X)-automaton with unit
/// multipliers, builds the automaton over X ∪ {#} that accepts the same
/// language whether its register is read in F(X ∪ {#}) or P(X ∪ {#}).
/// `target` selects the register tag of the result.
ValenceAutomaton padding_construction(const ValenceAutomaton& a,
                                      MonoidKind target = MonoidKind::FreeGroup);

}  // namespace valence
