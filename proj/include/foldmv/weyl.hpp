#pragma once

#include <map>
#include <utility>
#include <vector>

#include "foldmv/root_datum.hpp"

namespace foldmv {

// A Weyl group element, uniquely represented by its integer matrix acting on
// the coroot lattice in the simple-coroot basis.
struct WeylElement {
    Mat mat;
    bool operator==(const WeylElement& o) const { return mat == o.mat; }
    bool operator!=(const WeylElement& o) const { return mat != o.mat; }
    bool operator<(const WeylElement& o) const { return mat < o.mat; }
};

// A word in the simple reflections, letters are 0-based node indices.
using ReducedWord = std::vector<int>;

// One braid relation application: the window word[pos .. pos+order) currently
// reads (a, b, a, ...) and is rewritten to (b, a, b, ...).
struct BraidMove {
    int pos = 0;    // 0-based start of the window
    int order = 0;  // 2, 3, 4 or 6 = braid order m(a, b)
    int node_a = 0;
    int node_b = 0;
    bool operator==(const BraidMove& o) const {
        return pos == o.pos && order == o.order && node_a == o.node_a && node_b == o.node_b;
    }
};

// Fully enumerated Weyl group with Cayley graph, built once per root datum
// and immutable afterwards (safe for concurrent reads).
struct WeylGroup {
    RootDatum datum;
    int m = 0;  // number of positive coroots = l(w0)
    std::vector<Mat> elements;          // index 0 = identity, BFS order by length
    std::vector<int> length;            // length[idx]
    std::vector<std::vector<int>> right;  // right[idx][i] = index of elements[idx] * s_i
    std::vector<int> inverse;           // inverse[idx]
    std::vector<ReducedWord> canonical_word;  // one reduced word per element
    int w0 = -1;

    int index_of(const Mat& mat) const;
    int size() const { return static_cast<int>(elements.size()); }

private:
    friend struct WeylGroupBuilder;
    std::map<Mat, int> index_;
};

// All reduced words of one element plus the braid-move adjacency between
// them.  Built lazily (the word graph of a long element can be huge).
struct WordGraph {
    std::vector<ReducedWord> words;  // sorted lexicographically
    std::map<ReducedWord, int> index;
    std::vector<std::vector<std::pair<int, BraidMove>>> adjacency;
};

// Registry access.  The first call for a datum builds the group; subsequent
// calls (any thread) return the same immutable instance.
const WeylGroup& weyl_group(const RootDatum& rd);

// Word graph of the longest element, built on first request, capped.
const WordGraph& word_graph_w0(const RootDatum& rd, long long cap = 1000000);

Mat simple_reflection_matrix(const RootDatum& rd, int i);

WeylElement element_of(const RootDatum& rd, const ReducedWord& word);

// Length from the matrix alone: positive coroots sent to negative ones.
int length_of(const RootDatum& rd, const WeylElement& w);

bool is_reduced(const RootDatum& rd, const ReducedWord& word);

WeylElement longest_element(const RootDatum& rd);

// Braid order m(i, j) of two distinct nodes: 2, 3, 4 or 6.
int braid_order(const RootDatum& rd, int i, int j);

// All reduced words of w, sorted lexicographically.  Throws CapExceeded if
// more than cap words exist.
std::vector<ReducedWord> all_reduced_words(const RootDatum& rd, const WeylElement& w,
                                           long long cap = 1000000);

// Applies one braid move after validating the window against the Cartan data.
ReducedWord apply_braid_move(const RootDatum& rd, const ReducedWord& word,
                             const BraidMove& mv);

// All braid moves applicable to a word, in ascending window position.
std::vector<BraidMove> braid_moves(const RootDatum& rd, const ReducedWord& word);

// Shortest chain of braid moves from one reduced word to another reduced
// word of the same element (empty when the words are equal).
std::vector<BraidMove> braid_path(const RootDatum& rd, const ReducedWord& from,
                                  const ReducedWord& to, long long cap = 1000000);

// Twisted dominance: mu <=_w nu iff w^{-1}(mu) <= w^{-1}(nu).
bool leq_twisted(const RootDatum& rd, const Vec& mu, const Vec& nu, const WeylElement& w);

}  // namespace foldmv
