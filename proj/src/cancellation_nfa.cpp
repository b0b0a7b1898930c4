#include "valence/cancellation_nfa.hpp"

#include <deque>
#include <map>

namespace valence {

CancellationNfa::CancellationNfa(std::size_t state_count) : epsilon_(state_count) {
    final_.resize(state_count, false);
}

std::size_t CancellationNfa::add_state() {
    epsilon_.emplace_back();
    final_.push_back(false);
    saturated_ = false;
    return epsilon_.size() - 1;
}

void CancellationNfa::add_letter_edge(std::size_t from, const SignedLetter& letter,
                                      std::size_t to) {
    letter_edges_.push_back({from, letter, to});
    saturated_ = false;
}

void CancellationNfa::add_epsilon_edge(std::size_t from, std::size_t to) {
    epsilon_[from].push_back(to);
    saturated_ = false;
}

void CancellationNfa::mark_final(std::size_t state) {
    final_[state] = true;
}

void CancellationNfa::close_from(std::size_t state) {
    Row& row = closure_[state];
    row.assign((state_count() + 63) / 64, 0);
    std::deque<std::size_t> queue{state};
    row[state >> 6] |= std::uint64_t{1} << (state & 63);
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop_front();
        for (std::size_t t : epsilon_[s]) {
            if (!reach(row, t)) {
                row[t >> 6] |= std::uint64_t{1} << (t & 63);
                queue.push_back(t);
            }
        }
    }
}

void CancellationNfa::saturate() {
    const std::size_t n = state_count();
    const std::size_t words = (n + 63) / 64;
    closure_.assign(n, {});
    for (std::size_t s = 0; s < n; ++s) close_from(s);

    // Pair up-edges with down-edges of the same symbol and opposite sign.
    std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
        by_symbol;
    for (std::size_t i = 0; i < letter_edges_.size(); ++i) {
        auto& [pos, neg] = by_symbol[letter_edges_[i].letter.symbol];
        (letter_edges_[i].letter.sign > 0 ? pos : neg).push_back(i);
    }

    auto add_closure_edge = [&](std::size_t u, std::size_t v) {
        if (reach(closure_[u], v)) return false;
        epsilon_[u].push_back(v);
        // Incremental transitive closure: everything reaching u now also
        // reaches everything v reaches.
        for (std::size_t s = 0; s < n; ++s) {
            if (!reach(closure_[s], u)) continue;
            for (std::size_t w = 0; w < words; ++w) closure_[s][w] |= closure_[v][w];
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [symbol, groups] : by_symbol) {
            for (std::size_t i : groups.first) {
                for (std::size_t j : groups.second) {
                    // Both orders cancel: x then x^-1, and x^-1 then x.
                    const auto& a = letter_edges_[i];
                    const auto& b = letter_edges_[j];
                    if (reach(closure_[a.to], b.from) && add_closure_edge(a.from, b.to))
                        changed = true;
                    if (reach(closure_[b.to], a.from) && add_closure_edge(b.from, a.to))
                        changed = true;
                }
            }
        }
    }
    saturated_ = true;
}

bool CancellationNfa::accepts_reduced_from(std::size_t start, const SignedWord& reduced) const {
    const std::size_t words = (state_count() + 63) / 64;
    Row current = closure_[start];
    for (const auto& letter : reduced.letters()) {
        Row next(words, 0);
        bool any = false;
        for (const auto& e : letter_edges_) {
            if (e.letter != letter || !reach(current, e.from)) continue;
            for (std::size_t w = 0; w < words; ++w) next[w] |= closure_[e.to][w];
            any = true;
        }
        if (!any) return false;
        current = std::move(next);
    }
    for (std::size_t s = 0; s < state_count(); ++s)
        if (final_[s] && reach(current, s)) return true;
    return false;
}

}  // namespace valence
