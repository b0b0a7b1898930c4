#include "valence/automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_set>

#include "valence/cancellation_nfa.hpp"

namespace valence {

// --------------------------------------------------------------------------
// Multiplier
// --------------------------------------------------------------------------

Multiplier Multiplier::single(SignedWord word) {
    return Multiplier{{std::move(word)}};
}

Multiplier Multiplier::identity(const MonoidSpec& spec) {
    Multiplier m;
    for (std::size_t i = 0; i < spec.arity(); ++i)
        m.parts.emplace_back(spec.factor(i).kind() == MonoidKind::Trivial
                                 ? SignedWord(Alphabet{})
                                 : SignedWord(spec.factor(i).generator_alphabet()));
    return m;
}

std::size_t Multiplier::total_length() const {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
}

bool Multiplier::is_epsilon() const {
    return total_length() == 0;
}

// --------------------------------------------------------------------------
// ValenceAutomaton
// --------------------------------------------------------------------------

ValenceAutomaton::ValenceAutomaton(MonoidSpec monoid, Alphabet input_alphabet,
                                   std::vector<std::string> state_names,
                                   const std::string& initial,
                                   const std::vector<std::string>& finals)
    : monoid_(std::move(monoid)), input_(std::move(input_alphabet)),
      states_(std::move(state_names)) {
    if (states_.empty()) throw PreconditionError("an automaton needs at least one state");
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : states_)
            if (!seen.insert(s).second)
                throw PreconditionError("duplicate state name: '" + s + "'");
    }
    initial_ = state_id(initial);
    final_.resize(states_.size(), false);
    for (const auto& f : finals) final_[state_id(f)] = true;
    out_.resize(states_.size());
}

std::size_t ValenceAutomaton::state_id(const std::string& name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) throw PreconditionError("unknown state: '" + name + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

std::vector<std::size_t> ValenceAutomaton::final_states() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < states_.size(); ++s)
        if (final_[s]) out.push_back(s);
    return out;
}

void ValenceAutomaton::add_edge(const std::string& from, const Multiplier& mult,
                                const std::string& read, const std::string& to) {
    add_edge(state_id(from), mult, read, state_id(to));
}

void ValenceAutomaton::add_edge(std::size_t from, Multiplier mult, std::string read,
                                std::size_t to) {
    if (from >= states_.size() || to >= states_.size())
        throw PreconditionError("edge endpoint out of range");
    if (!read.empty() && !input_.contains(read))
        throw ParseError("edge reads '" + read + "' which is not an input letter");
    Edge e;
    e.from = from;
    e.to = to;
    e.value = evaluate(monoid_, mult.parts);  // validates the multiplier
    e.mult = std::move(mult);
    e.read = std::move(read);
    out_[from].push_back(edges_.size());
    edges_.push_back(std::move(e));
}

// --------------------------------------------------------------------------
// Dead-configuration certificates
// --------------------------------------------------------------------------

namespace {

// Caps the position-indexed NFA size beyond which the free-group test is
// skipped (searches then rely on the budget alone).
constexpr std::size_t kMaxNfaStates = 50'000;

// Per-word analysis deciding whether a configuration can still reach an
// accepting one. All verdicts are certificates: "dead" means no continuation
// multiplies the register to the identity at a final state at end of input.
class DeadAnalysis {
public:
    DeadAnalysis(const ValenceAutomaton& a, const Word& w) : automaton_(a), length_(w.size()) {
        const auto& spec = a.monoid();
        for (std::size_t f = 0; f < spec.arity(); ++f) {
            switch (spec.factor(f).kind()) {
                case MonoidKind::FreeGroup: build_group_nfa(f, w); break;
                case MonoidKind::FreeAbelian: build_drift_bounds(f); break;
                default: break;  // Polycyclic/Trivial need no precomputation
            }
        }
    }

    bool dead(std::size_t state, std::size_t pos, const RegisterElement& reg) const {
        if (is_zero(reg)) return true;
        const auto& spec = automaton_.monoid();
        for (std::size_t f = 0; f < spec.arity(); ++f) {
            const RegisterElement& part =
                spec.is_product() ? reg.get<ProductElement>().parts()[f] : reg;
            if (factor_dead(f, state, pos, part)) return true;
        }
        return false;
    }

private:
    bool factor_dead(std::size_t f, std::size_t state, std::size_t pos,
                     const RegisterElement& part) const {
        if (part.holds<PolycyclicElement>()) {
            // The pop component never shrinks under right multiplication, so
            // a non-empty pop makes the identity unreachable.
            const auto& p = part.get<PolycyclicElement>();
            return p.is_zero() || !p.pop().empty();
        }
        if (part.holds<FreeGroupElement>()) {
            auto it = group_nfas_.find(f);
            if (it == group_nfas_.end()) return false;
            const auto& [nfa, base] = it->second;
            const auto& g = part.get<FreeGroupElement>();
            return !nfa.accepts_reduced_from(base + state * (length_ + 1) + pos,
                                             fg_invert(g).word());
        }
        if (part.holds<IntVector>()) {
            auto it = drift_.find(f);
            if (it == drift_.end()) return false;
            const auto& per_step = it->second;
            std::size_t remaining = length_ - pos;
            const auto& c = part.get<IntVector>().components();
            for (std::size_t i = 0; i < c.size(); ++i) {
                std::uint64_t mag = static_cast<std::uint64_t>(c[i] < 0 ? -c[i] : c[i]);
                if (mag > per_step[i] * remaining) return true;
            }
            return false;
        }
        return false;
    }

    // NFA over the factor's doubled generators whose states are (automaton
    // state, input position); a path to (final, end) spells a future
    // multiplier product. Saturated, it decides exactly whether a free-group
    // register can still cancel to the identity.
    void build_group_nfa(std::size_t f, const Word& w) {
        const std::size_t layers = length_ + 1;
        const std::size_t base = 0;
        std::size_t positional = automaton_.state_count() * layers;
        if (positional > kMaxNfaStates) return;
        CancellationNfa nfa(positional);
        auto id = [&](std::size_t s, std::size_t i) { return base + s * layers + i; };
        for (const auto& e : automaton_.edges()) {
            const SignedWord& m = e.mult.parts[f];
            for (std::size_t i = 0; i < layers; ++i) {
                std::size_t j;
                if (e.read.empty())
                    j = i;
                else if (i < length_ && w[i] == e.read)
                    j = i + 1;
                else
                    continue;
                if (m.empty()) {
                    nfa.add_epsilon_edge(id(e.from, i), id(e.to, j));
                } else {
                    std::size_t cur = id(e.from, i);
                    for (std::size_t k = 0; k < m.size(); ++k) {
                        std::size_t nxt =
                            (k + 1 == m.size()) ? id(e.to, j) : nfa.add_state();
                        nfa.add_letter_edge(cur, m.letters()[k], nxt);
                        cur = nxt;
                    }
                }
            }
            if (nfa.state_count() > kMaxNfaStates) return;
        }
        for (std::size_t s : automaton_.final_states()) nfa.mark_final(id(s, length_));
        nfa.saturate();
        group_nfas_.emplace(f, std::make_pair(std::move(nfa), base));
    }

    // Sound only when every ε-input edge is the identity in this factor:
    // each remaining input letter then changes a component by at most the
    // largest per-edge contribution.
    void build_drift_bounds(std::size_t f) {
        const auto& names = automaton_.monoid().factor(f).generator_alphabet();
        std::vector<std::uint64_t> per_step(names.size(), 0);
        for (const auto& e : automaton_.edges()) {
            IntVector delta = zn_eval(names, e.mult.parts[f]);
            if (e.read.empty() && !delta.is_identity()) return;  // not applicable
            for (std::size_t i = 0; i < names.size(); ++i) {
                auto c = delta.components()[i];
                per_step[i] = std::max<std::uint64_t>(
                    per_step[i], static_cast<std::uint64_t>(c < 0 ? -c : c));
            }
        }
        drift_.emplace(f, std::move(per_step));
    }

    const ValenceAutomaton& automaton_;
    std::size_t length_;
    std::map<std::size_t, std::pair<CancellationNfa, std::size_t>> group_nfas_;
    std::map<std::size_t, std::vector<std::uint64_t>> drift_;
};

struct Configuration {
    std::size_t state;
    std::size_t pos;
    RegisterElement reg;
};

// Specialized search for monoids whose factors are all free abelian or
// trivial: registers flatten to a fixed-length integer vector, so the search
// runs allocation-lean. Semantics match the generic path exactly.
struct FlatAbelian {
    bool applicable = false;
    std::size_t dims = 0;
    std::vector<std::vector<std::int64_t>> edge_delta;  // per edge, length dims
    std::vector<int> edge_read;                         // letter index, -1 for ε
    std::vector<std::uint64_t> per_step;                // drift bound per dim
    bool drift_ok = true;  // every ε-input edge is the identity

    // When every ε-edge is the identity, ε-moves never touch the register and
    // fold into a precomputed closure.
    std::vector<std::vector<std::size_t>> closed_out;  // read-edges from the ε-closure
    std::vector<bool> eps_final;                       // closure contains a final state

    explicit FlatAbelian(const ValenceAutomaton& a) {
        const auto& spec = a.monoid();
        for (std::size_t f = 0; f < spec.arity(); ++f) {
            MonoidKind k = spec.factor(f).kind();
            if (k != MonoidKind::FreeAbelian && k != MonoidKind::Trivial) return;
        }
        const auto& letters = a.input_alphabet().symbols();
        for (const auto& e : a.edges()) {
            if (e.read.empty()) {
                edge_read.push_back(-1);
            } else {
                auto it = std::find(letters.begin(), letters.end(), e.read);
                edge_read.push_back(static_cast<int>(it - letters.begin()));
            }
        }
        for (std::size_t f = 0; f < spec.arity(); ++f)
            if (spec.factor(f).kind() == MonoidKind::FreeAbelian)
                dims += spec.factor(f).rank();
        if (dims > 14) return;  // kMaxFlatDims; very wide products use the generic path
        applicable = true;
        per_step.assign(dims, 0);
        for (const auto& e : a.edges()) {
            std::vector<std::int64_t> delta;
            delta.reserve(dims);
            for (std::size_t f = 0; f < spec.arity(); ++f) {
                if (spec.factor(f).kind() != MonoidKind::FreeAbelian) continue;
                IntVector v = zn_eval(spec.factor(f).generator_alphabet(), e.mult.parts[f]);
                delta.insert(delta.end(), v.components().begin(), v.components().end());
            }
            bool nonzero = std::any_of(delta.begin(), delta.end(),
                                       [](std::int64_t c) { return c != 0; });
            if (e.read.empty() && nonzero) drift_ok = false;
            for (std::size_t i = 0; i < dims; ++i)
                per_step[i] = std::max<std::uint64_t>(
                    per_step[i],
                    static_cast<std::uint64_t>(delta[i] < 0 ? -delta[i] : delta[i]));
            edge_delta.push_back(std::move(delta));
        }
        if (drift_ok) build_closure(a);
    }

private:
    void build_closure(const ValenceAutomaton& a) {
        closed_out.resize(a.state_count());
        eps_final.assign(a.state_count(), false);
        for (std::size_t s = 0; s < a.state_count(); ++s) {
            std::vector<bool> reached(a.state_count(), false);
            std::deque<std::size_t> queue{s};
            reached[s] = true;
            while (!queue.empty()) {
                std::size_t t = queue.front();
                queue.pop_front();
                if (a.is_final(t)) eps_final[s] = true;
                for (std::size_t ei : a.out_edges(t)) {
                    const Edge& e = a.edges()[ei];
                    if (!e.read.empty()) {
                        closed_out[s].push_back(ei);
                    } else if (!reached[e.to]) {
                        reached[e.to] = true;
                        queue.push_back(e.to);
                    }
                }
            }
        }
    }
};

// Key layout: [state, pos, components...]; unused slots stay zero.
constexpr std::size_t kMaxFlatDims = 14;
using FlatKey = std::array<std::int64_t, 2 + kMaxFlatDims>;

inline std::size_t flat_hash(const FlatKey& v, std::size_t used) {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < used; ++i)
        h = (h ^ static_cast<std::size_t>(v[i])) * 1099511628211ull;
    return h;
}

// Insert-only linear-probing set with O(1) clear via version stamps; reused
// across calls to keep the search allocation-free.
class FlatSet {
public:
    void reset(std::size_t used) {
        used_ = used;
        ++version_;
        count_ = 0;
        if (slots_.empty()) slots_.resize(1024);
    }
    std::size_t size() const { return count_; }
    bool insert(const FlatKey& key) {
        if ((count_ + 1) * 2 > slots_.size()) grow();
        std::size_t mask = slots_.size() - 1;
        std::size_t i = flat_hash(key, used_) & mask;
        while (slots_[i].version == version_) {
            if (slots_[i].key == key) return false;
            i = (i + 1) & mask;
        }
        slots_[i].key = key;
        slots_[i].version = version_;
        ++count_;
        return true;
    }

private:
    struct Slot {
        FlatKey key{};
        std::uint64_t version = 0;
    };
    void grow() {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(old.size() * 2, Slot{});
        std::size_t mask = slots_.size() - 1;
        for (const auto& s : old) {
            if (s.version != version_) continue;
            std::size_t i = flat_hash(s.key, used_) & mask;
            while (slots_[i].version == version_) i = (i + 1) & mask;
            slots_[i] = s;
        }
    }
    std::vector<Slot> slots_;
    std::uint64_t version_ = 0;
    std::size_t used_ = 0;
    std::size_t count_ = 0;
};

Outcome accepts_flat(const ValenceAutomaton& automaton, const Word& word,
                     const FlatAbelian& flat, std::size_t register_cap,
                     std::size_t max_visited) {
    const std::size_t dims = flat.dims;
    const bool closed = flat.drift_ok;  // ε-moves folded into the closure
    const auto& letters = automaton.input_alphabet().symbols();
    thread_local std::vector<int> word_idx;
    word_idx.clear();
    for (const auto& l : word) {
        auto it = std::find(letters.begin(), letters.end(), l);
        word_idx.push_back(static_cast<int>(it - letters.begin()));
    }
    auto accepting = [&](const FlatKey& k) {
        if (static_cast<std::size_t>(k[1]) != word.size()) return false;
        std::size_t state = static_cast<std::size_t>(k[0]);
        if (closed ? !flat.eps_final[state] : !automaton.is_final(state)) return false;
        for (std::size_t i = 0; i < dims; ++i)
            if (k[2 + i] != 0) return false;
        return true;
    };
    auto dead = [&](const FlatKey& k) {
        if (!flat.drift_ok) return false;
        std::uint64_t remaining = word.size() - static_cast<std::size_t>(k[1]);
        for (std::size_t i = 0; i < dims; ++i) {
            std::int64_t c = k[2 + i];
            if (static_cast<std::uint64_t>(c < 0 ? -c : c) > flat.per_step[i] * remaining)
                return true;
        }
        return false;
    };
    auto size_of = [&](const FlatKey& k) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < dims; ++i) {
            std::int64_t c = k[2 + i];
            m = std::max<std::uint64_t>(m, static_cast<std::uint64_t>(c < 0 ? -c : c));
        }
        return m;
    };

    FlatKey start{};
    start[0] = static_cast<std::int64_t>(automaton.initial());
    if (accepting(start)) return Outcome::Accepted;

    bool pruned = false;
    // Scratch containers keep their capacity across calls.
    thread_local std::deque<FlatKey> frontier;
    thread_local FlatSet seen;
    frontier.clear();
    seen.reset(2 + dims);
    if (!dead(start)) {
        seen.insert(start);
        frontier.push_back(start);
    }
    FlatKey next{};
    while (!frontier.empty()) {
        FlatKey current = frontier.front();
        frontier.pop_front();
        const std::size_t state = static_cast<std::size_t>(current[0]);
        const std::size_t pos = static_cast<std::size_t>(current[1]);
        const auto& out = closed ? flat.closed_out[state] : automaton.out_edges(state);
        for (std::size_t ei : out) {
            const Edge& e = automaton.edges()[ei];
            std::size_t next_pos = pos;
            int read = flat.edge_read[ei];
            if (read >= 0) {
                if (pos >= word.size() || word_idx[pos] != read) continue;
                next_pos = pos + 1;
            }
            next[0] = static_cast<std::int64_t>(e.to);
            next[1] = static_cast<std::int64_t>(next_pos);
            const auto& delta = flat.edge_delta[ei];
            for (std::size_t i = 0; i < dims; ++i) {
                if (__builtin_add_overflow(current[2 + i], delta[i], &next[2 + i]))
                    throw OverflowError("integer register overflow");
            }
            if (accepting(next)) return Outcome::Accepted;
            if (dead(next)) continue;
            if (size_of(next) > register_cap) {
                pruned = true;
                continue;
            }
            if (seen.size() >= max_visited) {
                pruned = true;
                continue;
            }
            if (!seen.insert(next)) continue;
            frontier.push_back(next);
        }
    }
    return pruned ? Outcome::BudgetExhausted : Outcome::Rejected;
}

}  // namespace

// --------------------------------------------------------------------------
// Acceptance search
// --------------------------------------------------------------------------

namespace {

Outcome accepts_impl(const ValenceAutomaton& automaton, const Word& word,
                     const SearchBudget& budget, const FlatAbelian& flat) {
    for (const auto& letter : word)
        if (!automaton.input_alphabet().contains(letter))
            throw ParseError("word letter '" + letter + "' not in the input alphabet");

    std::size_t register_cap = budget.register_cap;
    if (register_cap == 0) {
        std::size_t max_mult = 1;
        for (const auto& e : automaton.edges())
            max_mult = std::max(max_mult, e.mult.total_length());
        register_cap = word.size() * max_mult * automaton.state_count() + 8;
    }

    if (flat.applicable)
        return accepts_flat(automaton, word, flat, register_cap, budget.max_visited);

    DeadAnalysis analysis(automaton, word);

    auto accepting = [&](const Configuration& c) {
        return c.pos == word.size() && automaton.is_final(c.state) && is_identity(c.reg);
    };
    auto key_of = [](const Configuration& c) {
        return std::to_string(c.state) + "|" + std::to_string(c.pos) + "|" +
               register_key(c.reg);
    };

    Configuration start{automaton.initial(), 0, identity_of(automaton.monoid())};
    if (accepting(start)) return Outcome::Accepted;

    bool pruned = false;
    std::deque<Configuration> frontier;
    std::unordered_set<std::string> seen;
    if (!analysis.dead(start.state, start.pos, start.reg)) {
        seen.insert(key_of(start));
        frontier.push_back(std::move(start));
    }

    while (!frontier.empty()) {
        Configuration current = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t ei : automaton.out_edges(current.state)) {
            const Edge& e = automaton.edges()[ei];
            std::size_t next_pos = current.pos;
            if (!e.read.empty()) {
                if (current.pos >= word.size() || word[current.pos] != e.read) continue;
                next_pos = current.pos + 1;
            }
            Configuration next{e.to, next_pos, multiply(current.reg, e.value)};
            if (accepting(next)) return Outcome::Accepted;
            if (analysis.dead(next.state, next.pos, next.reg)) continue;
            if (normal_form_size(next.reg) > register_cap) {
                pruned = true;
                continue;
            }
            if (seen.size() >= budget.max_visited) {
                pruned = true;
                continue;
            }
            if (!seen.insert(key_of(next)).second) continue;
            frontier.push_back(std::move(next));
        }
    }
    return pruned ? Outcome::BudgetExhausted : Outcome::Rejected;
}

}  // namespace

Outcome accepts(const ValenceAutomaton& automaton, const Word& word,
                const SearchBudget& budget) {
    return accepts_impl(automaton, word, budget, FlatAbelian(automaton));
}

Enumeration enumerate_language(const ValenceAutomaton& automaton, std::size_t max_len,
                               const SearchBudget& budget) {
    Enumeration result;
    const FlatAbelian flat(automaton);
    const auto& symbols = automaton.input_alphabet().symbols();
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0 && symbols.empty()) break;
        std::vector<std::size_t> digits(len, 0);
        Word w(len);
        while (true) {
            for (std::size_t i = 0; i < len; ++i) w[i] = symbols[digits[i]];
            switch (accepts_impl(automaton, w, budget, flat)) {
                case Outcome::Accepted: result.words.insert(w); break;
                case Outcome::Rejected: break;
                case Outcome::BudgetExhausted: result.complete = false; break;
            }
            // Odometer step over Σ^len.
            std::size_t i = len;
            while (i > 0) {
                if (++digits[i - 1] < symbols.size()) break;
                digits[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
    return result;
}

std::set<Multiplier> used_submonoid_generators(const ValenceAutomaton& automaton) {
    std::set<Multiplier> gens;
    for (const auto& e : automaton.edges()) gens.insert(e.mult);
    return gens;
}

}  // namespace valence
