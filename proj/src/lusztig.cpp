#include "foldmv/lusztig.hpp"

#include <algorithm>

namespace foldmv {

void validate_datum(const RootDatum& rd, const LusztigDatum& d) {
    require(d.word.size() == d.values.size(), "datum length disagrees with its word");
    for (int i : d.word)
        require(i >= 0 && i < rd.rank, "datum word has an out-of-range node");
    for (Int n : d.values) require(n >= 0, "datum has a negative entry");
    require(is_reduced(rd, d.word), "datum word is not reduced");
}

std::vector<Vec> chain_coroots(const RootDatum& rd, const ReducedWord& word) {
    std::vector<Vec> chain;
    chain.reserve(word.size());
    Mat w = identity_mat(rd.rank);
    for (int i : word) {
        Vec beta(rd.rank);
        for (int row = 0; row < rd.rank; ++row) beta[row] = w[row][i];
        chain.push_back(std::move(beta));
        w = mul_mat(w, simple_reflection_matrix(rd, i));
    }
    return chain;
}

void tropical_move_values(Vec& values, const BraidMove& mv) {
    if (mv.order == 2) {
        std::swap(values[mv.pos], values[mv.pos + 1]);
    } else if (mv.order == 3) {
        Int n1 = values[mv.pos], n2 = values[mv.pos + 1], n3 = values[mv.pos + 2];
        Int p = std::min(n1, n3);
        values[mv.pos] = n2 + n3 - p;
        values[mv.pos + 1] = p;
        values[mv.pos + 2] = n1 + n2 - p;
    } else {
        throw Error("no tropical rule for order-" + std::to_string(mv.order) +
                    " braid moves; move such data through the unfolded group");
    }
}

LusztigDatum tropical_move(const RootDatum& rd, const LusztigDatum& d, const BraidMove& mv) {
    validate_datum(rd, d);
    LusztigDatum out;
    out.word = apply_braid_move(rd, d.word, mv);
    out.values = d.values;
    tropical_move_values(out.values, mv);
    return out;
}

LusztigDatum transport(const RootDatum& rd, const LusztigDatum& d, const ReducedWord& target) {
    validate_datum(rd, d);
    LusztigDatum cur = d;
    for (const BraidMove& mv : braid_path(rd, d.word, target)) {
        cur.word = apply_braid_move(rd, cur.word, mv);
        tropical_move_values(cur.values, mv);
    }
    check_internal(cur.word == target, "transport landed on the wrong word");
    return cur;
}

Vec coweight_of(const RootDatum& rd, const LusztigDatum& d) {
    validate_datum(rd, d);
    Vec mu = zero_vec(rd.rank);
    std::vector<Vec> chain = chain_coroots(rd, d.word);
    for (size_t k = 0; k < chain.size(); ++k) mu = sub(mu, scale(d.values[k], chain[k]));
    return mu;
}

}  // namespace foldmv
