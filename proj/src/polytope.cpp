#include "foldmv/polytope.hpp"

#include <algorithm>

namespace foldmv {

namespace {

// Transports the datum's values to every reduced word of w0 along a BFS
// spanning tree of the braid-move graph.  Index order matches wg.words.
std::vector<Vec> transport_to_all_words(const WordGraph& wg, const LusztigDatum& d) {
    auto it = wg.index.find(d.word);
    require(it != wg.index.end(), "datum word is not a reduced word of the longest element");
    std::vector<Vec> vals(wg.words.size());
    std::vector<char> seen(wg.words.size(), 0);
    std::vector<int> queue{it->second};
    vals[it->second] = d.values;
    seen[it->second] = 1;
    for (size_t at = 0; at < queue.size(); ++at) {
        int cur = queue[at];
        for (const auto& [nb, mv] : wg.adjacency[cur]) {
            if (seen[nb]) continue;
            Vec v = vals[cur];
            tropical_move_values(v, mv);
            vals[nb] = std::move(v);
            seen[nb] = 1;
            queue.push_back(nb);
        }
    }
    check_internal(queue.size() == wg.words.size(), "word graph is disconnected");
    return vals;
}

}  // namespace

MVPolytope build_polytope(const RootDatum& rd, const LusztigDatum& d) {
    validate_datum(rd, d);
    const WeylGroup& g = weyl_group(rd);
    require(static_cast<int>(d.word.size()) == g.m,
            "datum word is not a reduced word of the longest element");
    const WordGraph& wg = word_graph_w0(rd);
    std::vector<Vec> vals = transport_to_all_words(wg, d);

    std::vector<Vec> vertices(g.size());
    std::vector<char> have(g.size(), 0);
    for (size_t widx = 0; widx < wg.words.size(); ++widx) {
        const ReducedWord& word = wg.words[widx];
        int at = 0;  // group index of the current prefix
        Vec mu = zero_vec(rd.rank);
        for (int k = 0; k <= g.m; ++k) {
            if (!have[at]) {
                vertices[at] = mu;
                have[at] = 1;
            } else {
                check_internal(vertices[at] == mu, "vertex chains disagree between words");
            }
            if (k == g.m) break;
            int i = word[k];
            Vec beta(rd.rank);
            for (int row = 0; row < rd.rank; ++row) beta[row] = g.elements[at][row][i];
            mu = sub(mu, scale(vals[widx][k], beta));
            at = g.right[at][i];
        }
    }
    for (char h : have) check_internal(h, "some Weyl chamber vertex was never reached");
    return MVPolytope{d, std::move(vertices)};
}

const Vec& vertex_at(const RootDatum& rd, const MVPolytope& p, const WeylElement& w) {
    const WeylGroup& g = weyl_group(rd);
    require(p.vertices.size() == static_cast<size_t>(g.size()),
            "polytope vertex map has the wrong size");
    return p.vertices[g.index_of(w.mat)];
}

LusztigDatum datum_along(const RootDatum& rd, const MVPolytope& p, const ReducedWord& word) {
    const WeylGroup& g = weyl_group(rd);
    require(p.vertices.size() == static_cast<size_t>(g.size()),
            "polytope vertex map has the wrong size");
    require(static_cast<int>(word.size()) == g.m && is_reduced(rd, word),
            "expected a reduced word of the longest element");
    LusztigDatum out;
    out.word = word;
    out.values.reserve(word.size());
    int at = 0;
    for (int i : word) {
        Vec beta(rd.rank);
        for (int row = 0; row < rd.rank; ++row) beta[row] = g.elements[at][row][i];
        int next = g.right[at][i];
        Vec delta = sub(p.vertices[at], p.vertices[next]);
        int j = 0;
        while (beta[j] == 0) ++j;
        require(delta[j] % beta[j] == 0 && delta[j] / beta[j] >= 0 &&
                    delta == scale(delta[j] / beta[j], beta),
                "vertex difference is not a nonnegative multiple of the chain coroot");
        out.values.push_back(delta[j] / beta[j]);
        at = next;
    }
    return out;
}

bool lies_in_weyl_hull(const RootDatum& rd, const MVPolytope& p, const Vec& lambda) {
    require(is_dominant(rd, lambda), "lambda is not dominant");
    const WeylGroup& g = weyl_group(rd);
    require(p.vertices.size() == static_cast<size_t>(g.size()),
            "polytope vertex map has the wrong size");
    for (int idx = 0; idx < g.size(); ++idx) {
        Vec shifted = add(p.vertices[idx], lambda);
        Vec pulled = apply_mat(g.elements[g.inverse[idx]], shifted);
        if (!leq_dominance(pulled, lambda)) return false;
    }
    return true;
}

std::vector<Vec> enumerate_nonneg_combinations(const std::vector<Vec>& chain, const Vec& target,
                                               long long cap) {
    require(all_nonneg(target), "combination target must be nonnegative");
    int m = static_cast<int>(chain.size());
    int dim = static_cast<int>(target.size());
    for (const Vec& beta : chain)
        require(all_nonneg(beta) && !is_zero(beta), "chain entries must be positive vectors");
    std::vector<Vec> out;
    Vec values(m, 0);
    Vec rest = target;

    auto dfs = [&](auto&& self, int k) -> void {
        if (k == m) {
            if (is_zero(rest)) {
                out.push_back(values);
                if (static_cast<long long>(out.size()) > cap)
                    throw CapExceeded("datum enumeration exceeds cap",
                                      static_cast<long long>(out.size()));
            }
            return;
        }
        const Vec& beta = chain[k];
        Int hi = -1;
        for (int j = 0; j < dim; ++j)
            if (beta[j] > 0) {
                Int b = rest[j] / beta[j];
                hi = (hi < 0) ? b : std::min(hi, b);
            }
        for (Int n = 0; n <= hi; ++n) {
            values[k] = n;
            self(self, k + 1);
            for (int j = 0; j < dim; ++j) rest[j] -= beta[j];
        }
        for (int j = 0; j < dim; ++j) rest[j] += (hi + 1) * beta[j];
        values[k] = 0;
    };
    dfs(dfs, 0);
    return out;
}

std::vector<LusztigDatum> enumerate_data(const RootDatum& rd, const ReducedWord& word,
                                         const Vec& nu, long long cap) {
    require(is_reduced(rd, word), "enumeration word is not reduced");
    require(all_nonneg(neg(nu)), "coweight must be <= 0 in dominance order");
    std::vector<Vec> chain = chain_coroots(rd, word);
    std::vector<LusztigDatum> out;
    for (Vec& values : enumerate_nonneg_combinations(chain, neg(nu), cap))
        out.push_back(LusztigDatum{word, std::move(values)});
    return out;
}

}  // namespace foldmv
