#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foldmv/numeric.hpp"

namespace foldmv {

// A simply-connected root datum in Bourbaki numbering.  Coweights live in the
// coroot lattice and are stored as integer coordinate vectors in the basis of
// simple coroots; weights are stored as rational vectors in the dual basis,
// so the fundamental weights are exactly the unit vectors.
struct RootDatum {
    std::string label;  // "A2", "D4", ... (for folded data, the classified tag)
    int rank = 0;
    Mat cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
    std::vector<QVec> fundamental_weights;
    std::vector<Vec> positive_coroots;  // sorted by (height, lex)

    // Stable identity for the cache registry: label + Cartan entries.
    std::string key() const;
};

// Build a standard datum from a label such as "A2", "B3", "C2", "D4", "E6",
// "F4", "G2".  Supported: A(n>=1), B(n>=2), C(n>=2), D(n>=4), E6, F4, G2.
RootDatum build_root_datum(const std::string& label);

// Build a datum from an explicit Cartan matrix (used for folded data).
// Validates symmetrizability and positive definiteness; the label is a
// display tag and is not consulted by any computation.
RootDatum datum_from_cartan(std::string label, Mat cartan);

// <mu, alpha_j> for a coweight mu and simple root alpha_j.
Int pair_simple_root(const RootDatum& rd, const Vec& mu, int j);

// Exact pairing of a coweight with a weight in the dual basis.
Rat pair_weight(const Vec& mu, const QVec& xi);

// Simple reflection s_i acting on a coweight: mu - <mu, alpha_i> alpha_i^vee.
Vec reflect(const RootDatum& rd, int i, const Vec& mu);

// Simple reflection acting on a weight: xi - xi_i * alpha_i, where alpha_i
// has dual-basis coordinates given by column i of the Cartan matrix.
QVec reflect_weight(const RootDatum& rd, int i, const QVec& xi);

// Dominance order: mu <= nu iff nu - mu is a nonnegative integer combination
// of simple coroots, i.e. componentwise in coroot coordinates.
bool leq_dominance(const Vec& mu, const Vec& nu);

bool is_dominant(const RootDatum& rd, const Vec& mu);

// Throws Error naming the first failing node (1-based) if mu is not dominant.
void require_dominant(const RootDatum& rd, const Vec& mu);

// Returns the dominant element of the W-orbit of mu, together with the list
// of simple reflections applied (first entry applied first).
std::pair<Vec, std::vector<int>> dominant_representative(const RootDatum& rd, Vec mu);

// Simple root alpha_j as a weight vector (column j of the Cartan matrix).
QVec simple_root_weight(const RootDatum& rd, int j);

// Positive rationals c with c_j a_ij = c_i a_ji, normalized so the smallest
// is 1.  Then G_ij = c_j a_ij is the W-invariant Gram matrix of the simple
// coroots with short coroots of squared length 2.
QVec coroot_symmetrizer(const Mat& cartan);

}  // namespace foldmv
