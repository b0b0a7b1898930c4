#pragma once

#include <filesystem>
#include <string>

#include "valence/automaton.hpp"
#include "valence/grammar.hpp"
#include "valence/transducer.hpp"

namespace valence {

// The interchange format: a JSON object with keys (in canonical order)
// kind, monoid, input_alphabet, states, initial, finals, edges for valence
// automata; transducers replace monoid with output_alphabet and carry
// in/out words on edges. Serialization is canonical: two-space indent, LF,
// UTF-8, edges sorted, one trailing newline. Malformed input raises
// DocumentError naming the offending key.

std::string automaton_to_json(const ValenceAutomaton& a);
ValenceAutomaton automaton_from_json(const std::string& text);
ValenceAutomaton load_automaton(const std::filesystem::path& path);
void save_automaton(const ValenceAutomaton& a, const std::filesystem::path& path);

std::string transducer_to_json(const FiniteTransducer& t);
FiniteTransducer transducer_from_json(const std::string& text);
FiniteTransducer load_transducer(const std::filesystem::path& path);
void save_transducer(const FiniteTransducer& t, const std::filesystem::path& path);

std::string grammar_to_json(const ContextFreeGrammar& g);
ContextFreeGrammar grammar_from_json(const std::string& text);
void save_grammar(const ContextFreeGrammar& g, const std::filesystem::path& path);

/// Parses a monoid descriptor such as {"type":"free_group","alphabet":["x"]}.
MonoidSpec monoid_from_json(const std::string& text);

}  // namespace valence
