#include "valence/grammar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace valence {

ContextFreeGrammar::ContextFreeGrammar(std::vector<std::string> nonterminals,
                                       std::vector<std::string> terminals,
                                       std::string start,
                                       std::vector<Production> productions)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)),
      start_(std::move(start)), productions_(std::move(productions)) {
    std::unordered_set<std::string> nts(nonterminals_.begin(), nonterminals_.end());
    std::unordered_set<std::string> ts(terminals_.begin(), terminals_.end());
    if (nts.size() != nonterminals_.size())
        throw PreconditionError("duplicate nonterminal");
    if (ts.size() != terminals_.size()) throw PreconditionError("duplicate terminal");
    for (const auto& s : nonterminals_)
        if (ts.contains(s))
            throw PreconditionError("symbol is both terminal and nonterminal: " + s);
    if (!nts.contains(start_)) throw PreconditionError("start symbol is not a nonterminal");
    for (const auto& p : productions_) {
        if (!nts.contains(p.lhs))
            throw PreconditionError("production head is not a nonterminal: " + p.lhs);
        for (const auto& s : p.rhs)
            if (!nts.contains(s) && !ts.contains(s))
                throw PreconditionError("undeclared symbol in production body: " + s);
    }
}

bool ContextFreeGrammar::is_nonterminal(const std::string& symbol) const {
    return std::find(nonterminals_.begin(), nonterminals_.end(), symbol) !=
           nonterminals_.end();
}

bool ContextFreeGrammar::is_terminal(const std::string& symbol) const {
    return std::find(terminals_.begin(), terminals_.end(), symbol) != terminals_.end();
}

// --------------------------------------------------------------------------
// Triple construction
// --------------------------------------------------------------------------

ContextFreeGrammar pda_to_cfg(const ValenceAutomaton& a) {
    if (a.monoid().kind() != MonoidKind::Polycyclic)
        throw PreconditionError("pda_to_cfg expects a polycyclic automaton");
    for (const auto& e : a.edges())
        if (e.mult.total_length() > 1)
            throw PreconditionError(
                "multipliers must be single generators or ε; normalize first");

    const auto& stack_symbols = a.monoid().generator_alphabet().symbols();
    const auto& names = a.state_names();
    auto triple = [&](std::size_t p, const std::string& x, std::size_t q) {
        return "[" + names[p] + "," + (x.empty() ? "ε" : x) + "," + names[q] + "]";
    };

    std::vector<std::string> nonterminals{"S"};
    for (std::size_t p = 0; p < names.size(); ++p)
        for (std::size_t q = 0; q < names.size(); ++q) {
            nonterminals.push_back(triple(p, "", q));
            for (const auto& x : stack_symbols) nonterminals.push_back(triple(p, x, q));
        }

    std::vector<std::string> middles{""};
    middles.insert(middles.end(), stack_symbols.begin(), stack_symbols.end());

    std::vector<Production> prods;
    for (std::size_t f : a.final_states())
        prods.push_back({"S", {triple(a.initial(), "", f)}});
    for (std::size_t p = 0; p < names.size(); ++p)
        prods.push_back({triple(p, "", p), {}});

    auto body = [](const std::string& read, std::vector<std::string> tail) {
        std::vector<std::string> rhs;
        if (!read.empty()) rhs.push_back(read);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        return rhs;
    };

    for (const auto& e : a.edges()) {
        if (e.mult.is_epsilon()) {
            // No stack motion: [p,ξ,q] → a [r,ξ,q]
            for (const auto& xi : middles)
                for (std::size_t q = 0; q < names.size(); ++q)
                    prods.push_back(
                        {triple(e.from, xi, q), body(e.read, {triple(e.to, xi, q)})});
            continue;
        }
        SignedLetter g = e.mult.parts[0].letters()[0];
        if (g.sign > 0) {
            // Push y: [p,ξ,q] → a [r,y,s] [s,ξ,q]
            for (std::size_t s = 0; s < names.size(); ++s)
                for (const auto& xi : middles)
                    for (std::size_t q = 0; q < names.size(); ++q)
                        prods.push_back({triple(e.from, xi, q),
                                         body(e.read, {triple(e.to, g.symbol, s),
                                                       triple(s, xi, q)})});
        } else {
            // Pop x: [p,x,q] → a [r,ε,q]
            for (std::size_t q = 0; q < names.size(); ++q)
                prods.push_back(
                    {triple(e.from, g.symbol, q), body(e.read, {triple(e.to, "", q)})});
        }
    }
    return ContextFreeGrammar(std::move(nonterminals), a.input_alphabet().symbols(), "S",
                              std::move(prods));
}

// --------------------------------------------------------------------------
// Free group simulation by a pushdown store
// --------------------------------------------------------------------------

ValenceAutomaton fg_automaton_to_pda(const ValenceAutomaton& a) {
    if (a.monoid().kind() != MonoidKind::FreeGroup)
        throw PreconditionError("fg_automaton_to_pda expects a free group automaton");
    for (const auto& e : a.edges())
        if (e.mult.total_length() > 1)
            throw PreconditionError(
                "multipliers must be single generators or ε; normalize first");

    const Alphabet& base = a.monoid().generator_alphabet();
    // Marker symbols stand for inverse letters on the stack.
    std::string suffix = "~";
    auto clashes = [&] {
        for (const auto& s : base.symbols())
            if (base.contains(s + suffix)) return true;
        return false;
    };
    while (clashes()) suffix += "~";
    std::vector<std::string> stack_symbols = base.symbols();
    for (const auto& s : base.symbols()) stack_symbols.push_back(s + suffix);
    MonoidSpec monoid = MonoidSpec::polycyclic(Alphabet(stack_symbols));
    const Alphabet& stack = monoid.generator_alphabet();

    std::vector<std::string> finals;
    for (std::size_t s = 0; s < a.state_count(); ++s)
        if (a.is_final(s)) finals.push_back(a.state_names()[s]);
    ValenceAutomaton out(monoid, a.input_alphabet(), a.state_names(),
                         a.state_names()[a.initial()], finals);

    auto push = [&](const std::string& sym) {
        return Multiplier::single(SignedWord(stack, {{sym, +1}}));
    };
    auto pop = [&](const std::string& sym) {
        return Multiplier::single(SignedWord(stack, {{sym, -1}}));
    };
    for (const auto& e : a.edges()) {
        if (e.mult.is_epsilon()) {
            out.add_edge(e.from, Multiplier::single(SignedWord(stack)), e.read, e.to);
            continue;
        }
        SignedLetter g = e.mult.parts[0].letters()[0];
        const std::string positive = g.symbol;
        const std::string marker = g.symbol + suffix;
        if (g.sign > 0) {
            // Multiplying by x: push x, or cancel a pending x^-1 marker.
            out.add_edge(e.from, push(positive), e.read, e.to);
            out.add_edge(e.from, pop(marker), e.read, e.to);
        } else {
            out.add_edge(e.from, push(marker), e.read, e.to);
            out.add_edge(e.from, pop(positive), e.read, e.to);
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Chomsky normal form
// --------------------------------------------------------------------------

ContextFreeGrammar cnf_transform(const ContextFreeGrammar& g) {
    using Rhs = std::vector<std::string>;
    std::set<std::string> nts(g.nonterminals().begin(), g.nonterminals().end());
    std::set<std::string> ts(g.terminals().begin(), g.terminals().end());
    auto fresh = [&nts](std::string stem) {
        std::string name = std::move(stem);
        while (nts.contains(name)) name += "'";
        nts.insert(name);
        return name;
    };

    // Fresh start symbol so the start never occurs on a right-hand side.
    std::string start = fresh("S0");
    std::set<std::pair<std::string, Rhs>> rules;
    rules.insert({start, {g.start()}});
    for (const auto& p : g.productions()) rules.insert({p.lhs, p.rhs});

    // DEL: eliminate ε-productions (keeping start-ε if derivable).
    std::set<std::string> nullable;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [lhs, rhs] : rules) {
            if (nullable.contains(lhs)) continue;
            bool all = std::all_of(rhs.begin(), rhs.end(), [&](const std::string& s) {
                return nullable.contains(s);
            });
            if (all) nullable.insert(lhs), grew = true;
        }
    }
    std::set<std::pair<std::string, Rhs>> after_del;
    for (const auto& [lhs, rhs] : rules) {
        // All ways of omitting nullable occurrences.
        std::vector<Rhs> variants{{}};
        for (const auto& s : rhs) {
            std::vector<Rhs> next;
            for (const auto& v : variants) {
                Rhs with = v;
                with.push_back(s);
                next.push_back(std::move(with));
                if (nullable.contains(s)) next.push_back(v);
            }
            variants = std::move(next);
        }
        for (auto& v : variants)
            if (!v.empty()) after_del.insert({lhs, std::move(v)});
    }
    if (nullable.contains(g.start())) after_del.insert({start, {}});

    // UNIT: eliminate A → B chains.
    std::set<std::pair<std::string, std::string>> unit_pairs;
    for (const auto& n : nts) unit_pairs.insert({n, n});
    grew = true;
    while (grew) {
        grew = false;
        for (const auto& [lhs, rhs] : after_del) {
            if (rhs.size() != 1 || !nts.contains(rhs[0])) continue;
            std::vector<std::pair<std::string, std::string>> to_add;
            for (const auto& [a, b] : unit_pairs)
                if (b == lhs) to_add.push_back({a, rhs[0]});
            for (auto& p : to_add)
                if (unit_pairs.insert(std::move(p)).second) grew = true;
        }
    }
    std::set<std::pair<std::string, Rhs>> after_unit;
    for (const auto& [a, b] : unit_pairs) {
        for (const auto& [lhs, rhs] : after_del) {
            if (lhs != b) continue;
            if (rhs.size() == 1 && nts.contains(rhs[0])) continue;  // drop unit rules
            after_unit.insert({a, rhs});
        }
    }

    // Useless-symbol removal: generating, then reachable.
    std::set<std::string> generating(ts.begin(), ts.end());
    grew = true;
    while (grew) {
        grew = false;
        for (const auto& [lhs, rhs] : after_unit) {
            if (generating.contains(lhs)) continue;
            if (std::all_of(rhs.begin(), rhs.end(), [&](const std::string& s) {
                    return generating.contains(s);
                }))
                generating.insert(lhs), grew = true;
        }
    }
    std::set<std::string> reachable{start};
    grew = true;
    while (grew) {
        grew = false;
        for (const auto& [lhs, rhs] : after_unit) {
            if (!reachable.contains(lhs) || !generating.contains(lhs)) continue;
            if (!std::all_of(rhs.begin(), rhs.end(), [&](const std::string& s) {
                    return generating.contains(s);
                }))
                continue;
            for (const auto& s : rhs)
                if (nts.contains(s) && reachable.insert(s).second) grew = true;
        }
    }
    std::vector<std::pair<std::string, Rhs>> kept;
    for (const auto& [lhs, rhs] : after_unit) {
        if (!reachable.contains(lhs) || !generating.contains(lhs)) continue;
        bool ok = std::all_of(rhs.begin(), rhs.end(), [&](const std::string& s) {
            return generating.contains(s) && (!nts.contains(s) || reachable.contains(s));
        });
        if (ok) kept.push_back({lhs, rhs});
    }

    // TERM + BIN.
    std::map<std::string, std::string> terminal_nt;
    std::vector<Production> out;
    auto lift_terminal = [&](const std::string& t) {
        auto it = terminal_nt.find(t);
        if (it != terminal_nt.end()) return it->second;
        std::string name = fresh("T<" + t + ">");
        terminal_nt.emplace(t, name);
        out.push_back({name, {t}});
        return name;
    };
    std::size_t bin_counter = 0;
    for (auto& [lhs, rhs] : kept) {
        if (rhs.size() <= 1) {
            out.push_back({lhs, rhs});
            continue;
        }
        Rhs symbols;
        for (const auto& s : rhs) symbols.push_back(ts.contains(s) ? lift_terminal(s) : s);
        std::string head = lhs;
        while (symbols.size() > 2) {
            std::string mid = fresh("B" + std::to_string(bin_counter++));
            out.push_back({head, {symbols[0], mid}});
            symbols.erase(symbols.begin());
            head = mid;
        }
        out.push_back({head, {symbols[0], symbols[1]}});
    }

    // Keep only the nonterminals that still occur.
    std::set<std::string> used{start};
    for (const auto& p : out) {
        used.insert(p.lhs);
        for (const auto& s : p.rhs)
            if (!ts.contains(s)) used.insert(s);
    }
    std::vector<std::string> nonterminals(used.begin(), used.end());
    return ContextFreeGrammar(std::move(nonterminals), g.terminals(), start,
                              std::move(out));
}

// --------------------------------------------------------------------------
// CYK
// --------------------------------------------------------------------------

bool cyk_member(const ContextFreeGrammar& cnf, const Word& w) {
    std::unordered_map<std::string, std::size_t> nt_index;
    for (std::size_t i = 0; i < cnf.nonterminals().size(); ++i)
        nt_index.emplace(cnf.nonterminals()[i], i);
    const std::size_t n_nts = cnf.nonterminals().size();

    bool start_nullable = false;
    std::unordered_map<std::string, std::vector<std::size_t>> by_terminal;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> binary;
    for (const auto& p : cnf.productions()) {
        std::size_t lhs = nt_index.at(p.lhs);
        if (p.rhs.empty()) {
            if (p.lhs != cnf.start())
                throw PreconditionError("grammar is not in normal form: ε-rule");
            start_nullable = true;
        } else if (p.rhs.size() == 1) {
            if (!cnf.is_terminal(p.rhs[0]))
                throw PreconditionError("grammar is not in normal form: unit rule");
            by_terminal[p.rhs[0]].push_back(lhs);
        } else if (p.rhs.size() == 2) {
            auto b = nt_index.find(p.rhs[0]);
            auto c = nt_index.find(p.rhs[1]);
            if (b == nt_index.end() || c == nt_index.end())
                throw PreconditionError("grammar is not in normal form: terminal in pair");
            binary.push_back({{b->second, c->second}, lhs});
        } else {
            throw PreconditionError("grammar is not in normal form: long rule");
        }
    }

    const std::size_t n = w.size();
    if (n == 0) return start_nullable;
    // table[i][len-1]: set of nonterminals deriving w[i, i+len)
    std::vector<std::vector<std::vector<bool>>> table(
        n, std::vector<std::vector<bool>>(n, std::vector<bool>(n_nts, false)));
    for (std::size_t i = 0; i < n; ++i) {
        auto it = by_terminal.find(w[i]);
        if (it == by_terminal.end()) continue;
        for (std::size_t a : it->second) table[i][0][a] = true;
    }
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i)
            for (std::size_t split = 1; split < len; ++split)
                for (const auto& [pair, lhs] : binary)
                    if (table[i][split - 1][pair.first] &&
                        table[i + split][len - split - 1][pair.second])
                        table[i][len - 1][lhs] = true;
    return table[0][n - 1][nt_index.at(cnf.start())];
}

}  // namespace valence
