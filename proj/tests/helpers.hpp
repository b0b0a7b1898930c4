#pragma once

// Test-side oracles, independent of the library implementations they check.

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "valence/automaton.hpp"
#include "valence/monoid.hpp"

namespace valence::test {

inline std::vector<SignedLetter> signed_letters(const Alphabet& a) {
    std::vector<SignedLetter> out;
    for (const auto& s : a.symbols()) {
        out.push_back({s, +1});
        out.push_back({s, -1});
    }
    return out;
}

inline std::vector<SignedWord> all_signed_words(const Alphabet& a, std::size_t max_len) {
    std::vector<SignedWord> out{SignedWord(a)};
    std::vector<std::vector<SignedLetter>> layer{{}};
    auto letters = signed_letters(a);
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<SignedLetter>> next;
        for (const auto& w : layer)
            for (const auto& l : letters) {
                auto longer = w;
                longer.push_back(l);
                out.emplace_back(a, longer);
                next.push_back(std::move(longer));
            }
        layer = std::move(next);
    }
    return out;
}

inline std::vector<Word> all_plain_words(const Alphabet& a, std::size_t max_len) {
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (const auto& s : a.symbols()) {
                auto longer = w;
                longer.push_back(s);
                out.push_back(longer);
                next.push_back(std::move(longer));
            }
        layer = std::move(next);
    }
    return out;
}

// Every irreducible word reachable by deleting adjacent inverse pairs in any
// order. Free reduction is confluent, so this should be a singleton.
inline std::set<std::vector<SignedLetter>> rewrite_descendants(const SignedWord& w) {
    std::set<std::vector<SignedLetter>> seen{w.letters()};
    std::deque<std::vector<SignedLetter>> queue{w.letters()};
    std::set<std::vector<SignedLetter>> irreducible;
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        bool reduced_any = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i].symbol != cur[i + 1].symbol || cur[i].sign == cur[i + 1].sign)
                continue;
            auto shorter = cur;
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i),
                          shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            reduced_any = true;
            if (seen.insert(shorter).second) queue.push_back(std::move(shorter));
        }
        if (!reduced_any) irreducible.insert(std::move(cur));
    }
    return irreducible;
}

// Pushdown simulation from the empty stack: x pushes, x^-1 pops its own
// symbol or fails. The word is 1-sided Dyck iff the run survives and ends
// with an empty stack.
inline bool stack_sim_one_sided(const SignedWord& w) {
    Word stack;
    for (const auto& l : w.letters()) {
        if (l.sign > 0) {
            stack.push_back(l.symbol);
        } else {
            if (stack.empty() || stack.back() != l.symbol) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

// Pointwise application of a polycyclic element to one stack, straight from
// the partial-function semantics.
inline std::optional<Word> apply_poly(const PolycyclicElement& e, const Word& stack) {
    if (e.is_zero()) return std::nullopt;
    const Word& pop = e.pop();
    if (pop.size() > stack.size()) return std::nullopt;
    if (!std::equal(pop.rbegin(), pop.rend(), stack.rbegin())) return std::nullopt;
    Word out(stack.begin(), stack.end() - static_cast<std::ptrdiff_t>(pop.size()));
    out.insert(out.end(), e.push().begin(), e.push().end());
    return out;
}

// Pair acceptance of the underlying finite automaton over (X̄* × Σ*): path
// labels are concatenated formally, with no monoid evaluation.
inline std::set<std::pair<std::vector<SignedLetter>, Word>> accepted_pairs(
    const ValenceAutomaton& a, std::size_t max_register_len, std::size_t max_word_len) {
    using Item = std::tuple<std::size_t, std::vector<SignedLetter>, Word>;
    std::set<Item> seen;
    std::deque<Item> queue;
    queue.push_back({a.initial(), {}, {}});
    seen.insert(queue.front());
    std::set<std::pair<std::vector<SignedLetter>, Word>> accepted;
    while (!queue.empty()) {
        auto [state, reg, word] = std::move(queue.front());
        queue.pop_front();
        if (a.is_final(state)) accepted.insert({reg, word});
        for (std::size_t ei : a.out_edges(state)) {
            const Edge& e = a.edges()[ei];
            auto next_reg = reg;
            for (const auto& l : e.mult.parts[0].letters()) next_reg.push_back(l);
            if (next_reg.size() > max_register_len) continue;
            auto next_word = word;
            if (!e.read.empty()) {
                if (next_word.size() >= max_word_len) continue;
                next_word.push_back(e.read);
            }
            Item item{e.to, std::move(next_reg), std::move(next_word)};
            if (seen.insert(item).second) queue.push_back(std::move(item));
        }
    }
    return accepted;
}

// Membership restricted to runs whose total multiplier length stays within
// a bound.
inline bool accepts_with_mult_budget(const ValenceAutomaton& a, const Word& w,
                                     std::size_t max_mult_letters) {
    using Item = std::tuple<std::size_t, std::size_t, std::string, std::size_t>;
    std::set<Item> seen;
    std::deque<std::tuple<std::size_t, std::size_t, RegisterElement, std::size_t>> queue;
    queue.push_back({a.initial(), 0, identity_of(a.monoid()), 0});
    seen.insert({a.initial(), 0, register_key(identity_of(a.monoid())), 0});
    while (!queue.empty()) {
        auto [state, pos, reg, used] = std::move(queue.front());
        queue.pop_front();
        if (pos == w.size() && a.is_final(state) && is_identity(reg)) return true;
        for (std::size_t ei : a.out_edges(state)) {
            const Edge& e = a.edges()[ei];
            std::size_t next_pos = pos;
            if (!e.read.empty()) {
                if (pos >= w.size() || w[pos] != e.read) continue;
                next_pos = pos + 1;
            }
            std::size_t next_used = used + e.mult.total_length();
            if (next_used > max_mult_letters) continue;
            RegisterElement next_reg = multiply(reg, e.value);
            if (is_zero(next_reg)) continue;
            Item key{e.to, next_pos, register_key(next_reg), next_used};
            if (seen.insert(key).second)
                queue.push_back({e.to, next_pos, std::move(next_reg), next_used});
        }
    }
    return false;
}

// Subset-construction membership, valid for trivial-register automata.
inline bool nfa_member(const ValenceAutomaton& a, const Word& w) {
    auto close = [&](std::set<std::size_t> states) {
        std::deque<std::size_t> queue(states.begin(), states.end());
        while (!queue.empty()) {
            std::size_t s = queue.front();
            queue.pop_front();
            for (std::size_t ei : a.out_edges(s)) {
                const Edge& e = a.edges()[ei];
                if (e.read.empty() && states.insert(e.to).second) queue.push_back(e.to);
            }
        }
        return states;
    };
    std::set<std::size_t> current = close({a.initial()});
    for (const auto& letter : w) {
        std::set<std::size_t> next;
        for (std::size_t s : current)
            for (std::size_t ei : a.out_edges(s)) {
                const Edge& e = a.edges()[ei];
                if (e.read == letter) next.insert(e.to);
            }
        current = close(std::move(next));
    }
    for (std::size_t s : current)
        if (a.is_final(s)) return true;
    return false;
}

// All permissible paddings of w whose #^-1 blocks have length ≤ max_block.
inline std::vector<SignedWord> all_paddings(const SignedWord& w, std::size_t max_block) {
    Alphabet padded = w.alphabet().with("#");
    const SignedLetter marker{"#", +1};
    std::vector<std::vector<SignedLetter>> partials{{}};
    for (const auto& l : w.letters()) {
        std::vector<std::vector<SignedLetter>> next;
        for (const auto& p : partials) {
            std::size_t blocks = l.sign < 0 ? max_block : 0;
            for (std::size_t m = 0; m <= blocks; ++m) {
                auto grown = p;
                for (std::size_t i = 0; i < m; ++i) grown.push_back(marker.inverse());
                grown.push_back(l);
                grown.push_back(marker);
                next.push_back(std::move(grown));
            }
        }
        partials = std::move(next);
    }
    std::vector<SignedWord> out;
    for (const auto& p : partials) {
        for (std::size_t k = 0; k <= max_block; ++k) {
            auto full = p;
            for (std::size_t i = 0; i < k; ++i) full.push_back(marker.inverse());
            out.emplace_back(padded, std::move(full));
        }
    }
    return out;
}

}  // namespace valence::test
