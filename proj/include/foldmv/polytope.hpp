#pragma once

#include "foldmv/lusztig.hpp"

namespace foldmv {

// A pseudo-Weyl polytope presented by its vertex map: one coweight per Weyl
// group element, indexed by the element order of weyl_group(rd).  Built from
// a Lusztig datum on a reduced word of the longest element.
struct MVPolytope {
    LusztigDatum datum;  // the defining datum
    std::vector<Vec> vertices;
};

// Builds the full vertex map by transporting the datum to every reduced word
// of w0 and reading each prefix chain.  Every element arises as a prefix of
// several words; the chains are cross-checked against each other.
MVPolytope build_polytope(const RootDatum& rd, const LusztigDatum& d);

const Vec& vertex_at(const RootDatum& rd, const MVPolytope& p, const WeylElement& w);

// Reads the Lusztig datum on an arbitrary reduced word of w0 off the vertex
// chain.  Errors if some chain difference is not a nonnegative integer
// multiple of the expected chain coroot.
LusztigDatum datum_along(const RootDatum& rd, const MVPolytope& p, const ReducedWord& word);

// Whether the polytope shifted by dominant lambda sits inside the convex
// hull of the W-orbit of lambda: mu_w + lambda <=_w w(lambda) for all w.
bool lies_in_weyl_hull(const RootDatum& rd, const MVPolytope& p, const Vec& lambda);

// All Lusztig data on the given reduced word with the given coweight nu
// (requires nu <= 0 in dominance order).  Sorted lexicographically.
std::vector<LusztigDatum> enumerate_data(const RootDatum& rd, const ReducedWord& word,
                                         const Vec& nu, long long cap = 1000000);

// All nonnegative integer tuples n with sum n_k chain[k] = target, in
// lexicographic order.  Every chain entry must be nonzero with nonnegative
// coordinates; target must be nonnegative.
std::vector<Vec> enumerate_nonneg_combinations(const std::vector<Vec>& chain, const Vec& target,
                                               long long cap = 1000000);

}  // namespace foldmv
