#pragma once

#include "foldmv/weyl.hpp"

namespace foldmv {

// Nonnegative integer tuple attached to a reduced word.
struct LusztigDatum {
    ReducedWord word;
    Vec values;
    bool operator==(const LusztigDatum& o) const {
        return word == o.word && values == o.values;
    }
};

// Checks word/values shape and nonnegativity; the word must be reduced.
void validate_datum(const RootDatum& rd, const LusztigDatum& d);

// The coroot chain of a reduced word: beta_k = w_{k-1}(alpha_{i_k}^vee)
// where w_{k-1} is the length-(k-1) prefix.  All entries are positive
// coroots when the word is reduced.
std::vector<Vec> chain_coroots(const RootDatum& rd, const ReducedWord& word);

// Piecewise-linear change of datum under one braid move.  Order 2 swaps the
// two values; order 3 maps (n1, n2, n3) to (n2 + n3 - p, p, n1 + n2 - p)
// with p = min(n1, n3).  Orders 4 and 6 are refused: in this tool data only
// move along simply-laced words, and folded words move via their lifts.
LusztigDatum tropical_move(const RootDatum& rd, const LusztigDatum& d, const BraidMove& mv);

// Value rewrite of tropical_move without any validation, for callers that
// walk a pre-validated move graph (polytope building, batch transport).
void tropical_move_values(Vec& values, const BraidMove& mv);

// Moves a datum to another reduced word of the same element by composing
// tropical moves along a braid path.
LusztigDatum transport(const RootDatum& rd, const LusztigDatum& d, const ReducedWord& target);

// The coweight -sum(n_k beta_k), independent of the word by transport.
Vec coweight_of(const RootDatum& rd, const LusztigDatum& d);

}  // namespace foldmv
