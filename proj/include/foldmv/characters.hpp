#pragma once

#include "foldmv/folding.hpp"

namespace foldmv {

// Finite formal sum of exponentials e^mu with integer coefficients, keyed by
// ambient coweight coordinates.  Zero coefficients are never stored.
struct FormalCharacter {
    std::map<Vec, Int> terms;

    void add(const Vec& mu, Int c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(mu, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    Int at(const Vec& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const FormalCharacter& o) const { return terms == o.terms; }
};

// A finite reflection system prepared for character computations, either the
// coroot side of a datum or the folded coroots embedded in ambient
// coordinates.  The invariant form is evaluated through the coordinate
// extraction so that it is exact for every vector in the span.
struct CharacterSystem {
    std::string name;
    int ambient = 0;
    std::vector<Vec> simple_roots;     // integer ambient vectors
    Mat pairing;                       // pairing[zeta] . x = <x, alpha_zeta>
    QMat coords;                       // ambient -> simple-root coordinates
    QMat gram;                         // Gram matrix of the simple roots
    std::vector<Vec> positive_roots;   // reflection closure of simple_roots
    QVec rho;                          // half-sum of positive roots
};

// The coroot system of a datum: roots are the simple coroots themselves.
CharacterSystem character_system(const RootDatum& rd);

// The folded coroot system in ambient coordinates of the unfolded datum.
CharacterSystem folded_character_system(const FoldingData& f);

Int pairing_in(const CharacterSystem& sys, const Vec& x, int zeta);
bool dominant_in(const CharacterSystem& sys, const Vec& x);
Vec dominantize_in(const CharacterSystem& sys, Vec x);
Rat inner(const CharacterSystem& sys, const QVec& x, const QVec& y);

// Weight multiplicities of the irreducible with highest weight lambda,
// stored on dominant weights only.
struct CharacterTable {
    Vec lambda;
    Vec lowest;
    std::map<Vec, Int> dominant_mult;
};

CharacterTable freudenthal_table(const CharacterSystem& sys, const Vec& lambda);

Int multiplicity_lookup(const CharacterSystem& sys, const CharacterTable& table, const Vec& mu);

Int freudenthal_multiplicity(const CharacterSystem& sys, const Vec& lambda, const Vec& mu);

// Full character: every weight with its multiplicity.
FormalCharacter weyl_character(const CharacterSystem& sys, const Vec& lambda);

// Product formula dimension, exact; cross-checks the table in tests.
Int weyl_dimension(const CharacterSystem& sys, const Vec& lambda);

// Counting kernel: how many of the data give a polytope that fits in the
// lambda-shifted Weyl hull.  The parallel version is the default; the serial
// one is the reference implementation it is tested against.
Int count_in_hull(const RootDatum& rd, const std::vector<LusztigDatum>& data, const Vec& lambda);
Int count_in_hull_serial(const RootDatum& rd, const std::vector<LusztigDatum>& data,
                         const Vec& lambda);

// Number of MV polytopes of coweight mu - lambda inside the lambda-hull,
// enumerated on the given reduced word of w0 (defaults to a fixed word).
Int mv_weight_multiplicity(const RootDatum& rd, const Vec& lambda, const Vec& mu,
                           const ReducedWord& word);
Int mv_weight_multiplicity(const RootDatum& rd, const Vec& lambda, const Vec& mu);

struct WeightRow {
    Vec mu;
    Int mv = 0;
    Int freudenthal = 0;
};

struct WeightsReport {
    bool equal = false;
    Int dimension = 0;  // sum of Freudenthal multiplicities
    std::vector<WeightRow> rows;
};

// Compares MV counting against Freudenthal on the whole weight box of lambda.
WeightsReport verify_weights(const RootDatum& rd, const Vec& lambda, long long cap = 1000000);

// Sum over sigma-invariant mu of (number of sigma-invariant MV polytopes of
// coweight mu - lambda in the lambda-hull) e^mu.  Sigma-invariant polytopes
// are enumerated as block-constant data on the lifted canonical folded word.
FormalCharacter twining_character(const RootDatum& rd, const FoldingData& f, const Vec& lambda,
                                  long long cap = 1000000);

struct TwiningRow {
    Vec mu;  // ambient coordinates, sigma-invariant
    Int count = 0;
    Int folded_dim = 0;
};

struct TwiningReport {
    bool equal = false;
    std::vector<TwiningRow> rows;
};

// Checks the counted twining character against the folded Weyl character of
// the same highest weight, weight by weight.
TwiningReport verify_twining(const RootDatum& rd, const FoldingData& f, const Vec& lambda,
                             long long cap = 1000000);

}  // namespace foldmv
