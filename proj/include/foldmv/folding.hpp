#pragma once

#include <string>

#include "foldmv/polytope.hpp"

namespace foldmv {

// One sigma-orbit of Dynkin nodes.  h counts the edges inside the orbit
// (0 or 1; 1 only for an adjacent pair, as in the middle of an even A chain).
// r is the length of the orbit reflection s_eta in the unfolded group.
struct Orbit {
    std::vector<int> nodes;  // ascending
    int h = 0;
    int r = 0;
};

// Whether a per-orbit reduced expression lists nodes in ascending or
// descending order ((i,j,i) vs (j,i,j) for the h = 1 pair).  Results of
// folded operations must not depend on this choice.
enum class LiftConvention { Ascending, Descending };

// A diagram automorphism sigma of a simply-laced datum together with the
// folded datum it induces.  Folded coweights use the basis of folded simple
// coroots alpha_eta^vee = 2^h * sum of the orbit's coroots; sigma-invariant
// ambient vectors are mapped to folded coordinates by a rational extraction
// matrix (the invariant lattice can be strictly bigger than the folded
// coroot lattice, so folded coordinates of a general invariant vector may be
// rational).
struct FoldingData {
    RootDatum base;
    std::vector<int> sigma;  // node permutation, 0-based
    int order = 0;           // 2 or 3
    std::vector<Orbit> orbits;
    RootDatum folded;            // Cartan matrix in orbit order; label is a tag
    std::vector<Vec> embed;      // embed[eta] = alpha_eta^vee in ambient coordinates
    QMat coords;                 // folded coordinates of a sigma-invariant ambient vector
    std::vector<Mat> s_eta;      // orbit reflections as unfolded Weyl matrices
};

FoldingData build_folding(const RootDatum& rd, const std::vector<int>& sigma);

// "flip" (A_n, D_n, E6 order-2 automorphism), "triality" (D4), or explicit
// cycle notation like "(1 4)(2 3)" with 1-based nodes.
std::vector<int> parse_sigma(const RootDatum& rd, const std::string& text);

std::string format_sigma(const std::vector<int>& sigma);  // cycle notation, 1-based

// Concatenation of per-orbit reduced expressions.  The folded word must be
// reduced; the result is then reduced in the unfolded group.
ReducedWord lift_word(const FoldingData& f, const ReducedWord& folded_word,
                      LiftConvention conv = LiftConvention::Ascending);

// Reduced word of the folded longest element used as the default lift target.
ReducedWord canonical_folded_word(const FoldingData& f);

// Whether a datum on the lift of folded_word is constant on each orbit block.
bool is_block_constant(const FoldingData& f, const ReducedWord& folded_word,
                       const LusztigDatum& d, LiftConvention conv = LiftConvention::Ascending);

// Reads one value per block from a block-constant datum (errors otherwise).
LusztigDatum fold_datum(const FoldingData& f, const ReducedWord& folded_word,
                        const LusztigDatum& d, LiftConvention conv = LiftConvention::Ascending);

// Repeats each folded value along its block on the lifted word.
LusztigDatum unfold_datum(const FoldingData& f, const LusztigDatum& folded_d,
                          LiftConvention conv = LiftConvention::Ascending);

// Transport between reduced words of the folded longest element, routed
// through the unfolded group: unfold, transport, fold.  The result landing
// block-constant is a theorem, so a violation is an internal error.
LusztigDatum folded_transport(const FoldingData& f, const LusztigDatum& folded_d,
                              const ReducedWord& target,
                              LiftConvention conv = LiftConvention::Ascending);

// The polytope sigma(P): vertices permuted by conjugation and coordinates
// by sigma.  Applying it ord(sigma) times gives back P.
MVPolytope apply_sigma(const FoldingData& f, const MVPolytope& p);

bool is_sigma_invariant(const FoldingData& f, const MVPolytope& p);

Vec apply_sigma_vec(const FoldingData& f, const Vec& v);

bool is_sigma_invariant_vec(const FoldingData& f, const Vec& v);

// Folded coweight to ambient coordinates: sum mu_eta * alpha_eta^vee.
Vec embed_coweight(const FoldingData& f, const Vec& folded_mu);

// Ambient sigma-invariant vector to folded coroot coordinates; errors if
// the vector is not in the lattice spanned by the folded simple coroots.
Vec restrict_coweight(const FoldingData& f, const Vec& ambient_mu);

// The folded polytope of a sigma-invariant P: vertices are read off P at
// the Weyl elements fixed by sigma (products of orbit reflections) and
// rewritten in folded coordinates; the defining folded datum is read along
// the canonical folded word.
MVPolytope theta_P(const FoldingData& f, const MVPolytope& p);

}  // namespace foldmv
