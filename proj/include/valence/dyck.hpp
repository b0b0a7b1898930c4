#pragma once

#include <set>

#include "valence/monoid.hpp"

namespace valence {

/// The padding marker symbol.
inline constexpr const char* kPaddingSymbol = "#";

/// True iff w freely reduces to ε (identity of F(X)).
bool is_two_sided_dyck(const SignedWord& w);

/// True iff w evaluates to the identity of P(X): reducible to ε by deleting
/// xx^-1 factors only.
bool is_one_sided_dyck(const SignedWord& w);

/// The minima of w: group elements x such that some prefix of w represents
/// x and no prefix representing x is immediately followed by a negative
/// generator.
std::set<FreeGroupElement> minima(const SignedWord& w);

/// True iff every prefix of w reduces to ε or to a word of positive
/// generators only.
bool all_prefixes_positive_or_identity(const SignedWord& w);

/// A permissible padding of `origin`: # inserted after every generator,
/// blocks of #^-1 before negative generators and at the end.
struct PaddedWord {
    SignedWord word;    // over X ∪ {#}
    SignedWord origin;  // over X

    PaddedWord(SignedWord padded, SignedWord origin_word);
};

/// Shape predicate for permissible paddings. `padded` is over X ∪ {#},
/// `origin` over X; the alignment is rigid, so greedy matching decides.
bool is_permissible_padding(const SignedWord& padded, const SignedWord& origin);

/// Deletes all # and #^-1 letters; the result is over X.
SignedWord strip_padding(const SignedWord& padded);

/// The canonical identity-representing padding of a 1-sided Dyck word:
/// markers are popped exactly when they surface during stack simulation.
/// Throws PreconditionError when w is not 1-sided Dyck.
PaddedWord insert_padding(const SignedWord& w);

}  // namespace valence
