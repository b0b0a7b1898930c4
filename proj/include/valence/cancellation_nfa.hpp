#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "valence/alphabet.hpp"

namespace valence {

/// An NFA over a doubled alphabet X̄ whose ε-edges are closed under free
/// cancellation: after saturate(), whenever some path p→q reads a word that
/// freely reduces to ε, the automaton has an ε-path p→q. A reduced word then
/// belongs to the freely reduced image of the recognised language exactly
/// when the saturated NFA accepts it letter by letter.
///
/// Used as a sound-and-complete co-reachability test for free group
/// registers: a register r at NFA state s can still be multiplied to the
/// identity iff the saturated NFA accepts r^-1 from s.
class CancellationNfa {
public:
    explicit CancellationNfa(std::size_t state_count);

    std::size_t add_state();
    std::size_t state_count() const { return epsilon_.size(); }

    /// Adds a transition reading one signed letter (sign ±1).
    void add_letter_edge(std::size_t from, const SignedLetter& letter, std::size_t to);
    void add_epsilon_edge(std::size_t from, std::size_t to);
    void mark_final(std::size_t state);

    /// Closes the ε-relation under cancellation: p --x--> r ~~ε~~> s --x^-1--> q
    /// yields ε: p → q. Idempotent.
    void saturate();

    /// After saturate(): does some word recognised from `start` freely reduce
    /// to `reduced`? `reduced` must be freely reduced.
    bool accepts_reduced_from(std::size_t start, const SignedWord& reduced) const;

private:
    struct LetterEdge {
        std::size_t from;
        SignedLetter letter;
        std::size_t to;
    };

    using Row = std::vector<std::uint64_t>;  // bitset over states

    bool reach(const Row& row, std::size_t state) const {
        return (row[state >> 6] >> (state & 63)) & 1u;
    }
    void close_from(std::size_t state);  // recompute ε-closure row

    std::vector<LetterEdge> letter_edges_;
    std::vector<std::vector<std::size_t>> epsilon_;  // adjacency
    std::vector<Row> closure_;                       // ε-reachability per state
    std::vector<bool> final_;
    bool saturated_ = false;
};

}  // namespace valence
