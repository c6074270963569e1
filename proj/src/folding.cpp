#include "foldmv/folding.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace foldmv {

namespace {

// Tries to identify a Cartan matrix with a standard table entry: first as
// given, then (at small rank) up to node relabeling.  Display tag only.
std::string classify_cartan(const Mat& cartan) {
    int n = static_cast<int>(cartan.size());
    std::vector<std::pair<char, int>> candidates;
    for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
        bool valid = (letter == 'A' && n >= 1) || (letter == 'B' && n >= 2) ||
                     (letter == 'C' && n >= 2) || (letter == 'D' && n >= 4) ||
                     (letter == 'E' && n == 6) || (letter == 'F' && n == 4) ||
                     (letter == 'G' && n == 2);
        if (valid) candidates.emplace_back(letter, n);
    }
    auto table = [](char letter, int n) {
        return build_root_datum(std::string(1, letter) + std::to_string(n)).cartan;
    };
    for (auto [letter, rank] : candidates)
        if (cartan == table(letter, rank))
            return std::string(1, letter) + std::to_string(rank);
    if (n <= 6) {
        std::vector<int> perm(n);
        for (auto [letter, rank] : candidates) {
            Mat t = table(letter, rank);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool match = true;
                for (int i = 0; i < n && match; ++i)
                    for (int j = 0; j < n && match; ++j)
                        match = t[i][j] == cartan[perm[i]][perm[j]];
                if (match) return std::string(1, letter) + std::to_string(rank);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return "X" + std::to_string(n);
}

int permutation_order(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    int ord = 1;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, at = i;
        while (!seen[at]) {
            seen[at] = 1;
            at = sigma[at];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<int> orbit_expression(const Orbit& o, LiftConvention conv) {
    if (o.h == 1) {
        int i = o.nodes[0], j = o.nodes[1];
        if (conv == LiftConvention::Ascending) return {i, j, i};
        return {j, i, j};
    }
    std::vector<int> e = o.nodes;
    if (conv == LiftConvention::Descending) std::reverse(e.begin(), e.end());
    return e;
}

}  // namespace

FoldingData build_folding(const RootDatum& rd, const std::vector<int>& sigma) {
    require(static_cast<int>(sigma.size()) == rd.rank, "sigma size disagrees with rank");
    std::vector<char> hit(rd.rank, 0);
    for (int s : sigma) {
        require(s >= 0 && s < rd.rank, "sigma image out of range");
        require(!hit[s], "sigma is not a permutation");
        hit[s] = 1;
    }
    bool trivial = true;
    for (int i = 0; i < rd.rank; ++i) trivial = trivial && sigma[i] == i;
    require(!trivial, "sigma must be a nontrivial automorphism");
    for (int i = 0; i < rd.rank; ++i)
        for (int j = 0; j < rd.rank; ++j)
            require(rd.cartan[sigma[i]][sigma[j]] == rd.cartan[i][j],
                    "sigma does not preserve the Cartan matrix");
    for (int i = 0; i < rd.rank; ++i)
        for (int j = 0; j < rd.rank; ++j)
            require(i == j || rd.cartan[i][j] >= -1, "folding needs a simply-laced base");

    FoldingData f;
    f.base = rd;
    f.sigma = sigma;
    f.order = permutation_order(sigma);
    require(f.order == 2 || f.order == 3, "sigma must have order 2 or 3");

    std::vector<char> seen(rd.rank, 0);
    for (int i = 0; i < rd.rank; ++i) {
        if (seen[i]) continue;
        Orbit o;
        int at = i;
        while (!seen[at]) {
            seen[at] = 1;
            o.nodes.push_back(at);
            at = sigma[at];
        }
        std::sort(o.nodes.begin(), o.nodes.end());
        for (size_t a = 0; a < o.nodes.size(); ++a)
            for (size_t b = a + 1; b < o.nodes.size(); ++b)
                if (rd.cartan[o.nodes[a]][o.nodes[b]] < 0) ++o.h;
        require(o.h <= 1, "unsupported orbit: more than one internal edge");
        require(o.h == 0 || o.nodes.size() == 2, "unsupported orbit shape");
        f.orbits.push_back(std::move(o));
    }

    int r = static_cast<int>(f.orbits.size());
    for (const Orbit& o : f.orbits) {
        Vec e = zero_vec(rd.rank);
        for (int node : o.nodes) e[node] = (o.h == 1) ? 2 : 1;
        f.embed.push_back(std::move(e));
    }

    Mat folded_cartan(r, Vec(r, 0));
    for (int eta = 0; eta < r; ++eta)
        for (int zeta = 0; zeta < r; ++zeta) {
            Int val = pair_simple_root(rd, f.embed[eta], f.orbits[zeta].nodes[0]);
            for (int node : f.orbits[zeta].nodes)
                check_internal(pair_simple_root(rd, f.embed[eta], node) == val,
                               "folded Cartan entry depends on the orbit representative");
            folded_cartan[eta][zeta] = val;
        }
    f.folded = datum_from_cartan(classify_cartan(folded_cartan), folded_cartan);

    for (Orbit& o : f.orbits) {
        std::vector<int> expr = orbit_expression(o, LiftConvention::Ascending);
        WeylElement s = element_of(rd, expr);
        o.r = length_of(rd, s);
        check_internal(o.r == static_cast<int>(expr.size()), "orbit expression is not reduced");
        WeylElement s_desc = element_of(rd, orbit_expression(o, LiftConvention::Descending));
        check_internal(s == s_desc, "orbit reflection depends on the convention");
        f.s_eta.push_back(s.mat);
    }

    // coords = (folded A)^-T * P where row zeta of P pairs with alpha_{rep(zeta)}.
    QMat at(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) at[i][j] = Rat(static_cast<long>(folded_cartan[j][i]));
    QMat at_inv = inverse_qmat(at);
    f.coords.assign(r, QVec(rd.rank, Rat(0)));
    for (int zeta = 0; zeta < r; ++zeta)
        for (int j = 0; j < rd.rank; ++j) {
            Rat p = Rat(static_cast<long>(rd.cartan[j][f.orbits[zeta].nodes[0]]));
            for (int row = 0; row < r; ++row) f.coords[row][j] += at_inv[row][zeta] * p;
        }
    for (int eta = 0; eta < r; ++eta)
        for (int zeta = 0; zeta < r; ++zeta) {
            Rat got = 0;
            for (int j = 0; j < rd.rank; ++j)
                got += f.coords[eta][j] * Rat(static_cast<long>(f.embed[zeta][j]));
            check_internal(got == ((eta == zeta) ? 1 : 0),
                           "folded coordinate extraction is not a left inverse");
        }
    return f;
}

std::vector<int> parse_sigma(const RootDatum& rd, const std::string& text) {
    int n = rd.rank;
    char letter = rd.label.empty() ? '?' : rd.label[0];
    if (text == "flip") {
        std::vector<int> s(n);
        if (letter == 'A') {
            require(n >= 2, "flip needs rank >= 2");
            for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
        } else if (letter == 'D') {
            std::iota(s.begin(), s.end(), 0);
            std::swap(s[n - 2], s[n - 1]);
        } else if (letter == 'E' && n == 6) {
            s = {5, 1, 4, 3, 2, 0};
        } else {
            throw Error("flip is not defined for type " + rd.label);
        }
        return s;
    }
    if (text == "triality") {
        require(letter == 'D' && n == 4, "triality is only defined for D4");
        return {2, 1, 3, 0};  // 1 -> 3 -> 4 -> 1
    }
    // Cycle notation with 1-based nodes, e.g. "(1 4)(2 3)".
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    size_t at = 0;
    bool any = false;
    while (at < text.size()) {
        while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
        if (at == text.size()) break;
        require(text[at] == '(', "sigma must be 'flip', 'triality' or cycle notation");
        size_t close = text.find(')', at);
        require(close != std::string::npos, "unclosed cycle in sigma");
        std::string body = text.substr(at + 1, close - at - 1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream is(body);
        std::vector<int> cycle;
        int node;
        while (is >> node) {
            require(node >= 1 && node <= n, "cycle node out of range");
            cycle.push_back(node - 1);
        }
        require(cycle.size() >= 2, "cycle must list at least two nodes");
        for (size_t k = 0; k < cycle.size(); ++k) {
            require(s[cycle[k]] == cycle[k], "node repeated across cycles");
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            s[cycle[k]] = cycle[(k + 1) % cycle.size()];
        any = true;
        at = close + 1;
    }
    require(any, "empty sigma");
    return s;
}

std::string format_sigma(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::ostringstream os;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i] || sigma[i] == i) continue;
        os << '(';
        int at = i;
        bool first = true;
        while (!seen[at]) {
            seen[at] = 1;
            if (!first) os << ' ';
            os << at + 1;
            first = false;
            at = sigma[at];
        }
        os << ')';
    }
    return os.str();
}

ReducedWord lift_word(const FoldingData& f, const ReducedWord& folded_word,
                      LiftConvention conv) {
    int r = static_cast<int>(f.orbits.size());
    for (int eta : folded_word)
        require(eta >= 0 && eta < r, "folded word letter out of range");
    require(is_reduced(f.folded, folded_word), "folded word is not reduced");
    ReducedWord out;
    for (int eta : folded_word) {
        std::vector<int> expr = orbit_expression(f.orbits[eta], conv);
        out.insert(out.end(), expr.begin(), expr.end());
    }
    check_internal(is_reduced(f.base, out), "lift of a reduced folded word is not reduced");
    return out;
}

ReducedWord canonical_folded_word(const FoldingData& f) {
    const WeylGroup& fg = weyl_group(f.folded);
    return fg.canonical_word[fg.w0];
}

bool is_block_constant(const FoldingData& f, const ReducedWord& folded_word,
                       const LusztigDatum& d, LiftConvention conv) {
    require(d.word == lift_word(f, folded_word, conv),
            "datum word is not the lift of the folded word");
    require(d.word.size() == d.values.size(), "datum length disagrees with its word");
    size_t at = 0;
    for (int eta : folded_word) {
        size_t r = static_cast<size_t>(f.orbits[eta].r);
        for (size_t k = 1; k < r; ++k)
            if (d.values[at + k] != d.values[at]) return false;
        at += r;
    }
    return true;
}

LusztigDatum fold_datum(const FoldingData& f, const ReducedWord& folded_word,
                        const LusztigDatum& d, LiftConvention conv) {
    require(is_block_constant(f, folded_word, d, conv),
            "datum is not constant on its orbit blocks");
    LusztigDatum out;
    out.word = folded_word;
    size_t at = 0;
    for (int eta : folded_word) {
        out.values.push_back(d.values[at]);
        at += static_cast<size_t>(f.orbits[eta].r);
    }
    return out;
}

LusztigDatum unfold_datum(const FoldingData& f, const LusztigDatum& folded_d,
                          LiftConvention conv) {
    validate_datum(f.folded, folded_d);
    LusztigDatum out;
    out.word = lift_word(f, folded_d.word, conv);
    for (size_t k = 0; k < folded_d.word.size(); ++k) {
        int r = f.orbits[folded_d.word[k]].r;
        for (int c = 0; c < r; ++c) out.values.push_back(folded_d.values[k]);
    }
    return out;
}

LusztigDatum folded_transport(const FoldingData& f, const LusztigDatum& folded_d,
                              const ReducedWord& target, LiftConvention conv) {
    validate_datum(f.folded, folded_d);
    LusztigDatum big = unfold_datum(f, folded_d, conv);
    LusztigDatum moved = transport(f.base, big, lift_word(f, target, conv));
    check_internal(is_block_constant(f, target, moved, conv),
                   "transport of a folded datum left the block-constant locus");
    return fold_datum(f, target, moved, conv);
}

MVPolytope apply_sigma(const FoldingData& f, const MVPolytope& p) {
    const WeylGroup& g = weyl_group(f.base);
    require(p.vertices.size() == static_cast<size_t>(g.size()),
            "polytope vertex map has the wrong size");
    int n = f.base.rank;
    MVPolytope out;
    out.datum.word.reserve(p.datum.word.size());
    for (int i : p.datum.word) out.datum.word.push_back(f.sigma[i]);
    out.datum.values = p.datum.values;
    out.vertices.assign(g.size(), Vec());
    for (int idx = 0; idx < g.size(); ++idx) {
        const Mat& m = g.elements[idx];
        Mat conj(n, Vec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) conj[f.sigma[i]][f.sigma[j]] = m[i][j];
        out.vertices[g.index_of(conj)] = apply_sigma_vec(f, p.vertices[idx]);
    }
    return out;
}

bool is_sigma_invariant(const FoldingData& f, const MVPolytope& p) {
    return apply_sigma(f, p).vertices == p.vertices;
}

Vec apply_sigma_vec(const FoldingData& f, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[f.sigma[i]] = v[i];
    return out;
}

bool is_sigma_invariant_vec(const FoldingData& f, const Vec& v) {
    return apply_sigma_vec(f, v) == v;
}

Vec embed_coweight(const FoldingData& f, const Vec& folded_mu) {
    require(folded_mu.size() == f.orbits.size(), "folded coweight has the wrong rank");
    Vec out = zero_vec(f.base.rank);
    for (size_t eta = 0; eta < f.orbits.size(); ++eta)
        out = add(out, scale(folded_mu[eta], f.embed[eta]));
    return out;
}

Vec restrict_coweight(const FoldingData& f, const Vec& ambient_mu) {
    require(is_sigma_invariant_vec(f, ambient_mu), "coweight is not sigma-invariant");
    Vec out(f.orbits.size());
    for (size_t eta = 0; eta < f.orbits.size(); ++eta) {
        Rat c = 0;
        for (int j = 0; j < f.base.rank; ++j)
            c += f.coords[eta][j] * Rat(static_cast<long>(ambient_mu[j]));
        require(c.get_den() == 1, "coweight is not in the folded coroot lattice");
        out[eta] = c.get_num().get_si();
    }
    return out;
}

MVPolytope theta_P(const FoldingData& f, const MVPolytope& p) {
    require(is_sigma_invariant(f, p), "polytope is not sigma-invariant");
    const WeylGroup& g = weyl_group(f.base);
    const WeylGroup& fg = weyl_group(f.folded);
    MVPolytope out;
    out.vertices.assign(fg.size(), Vec());
    for (int fidx = 0; fidx < fg.size(); ++fidx) {
        Mat big = identity_mat(f.base.rank);
        for (int eta : fg.canonical_word[fidx]) big = mul_mat(big, f.s_eta[eta]);
        const Vec& mu = p.vertices[g.index_of(big)];
        Rat c;
        Vec folded_mu(f.orbits.size());
        for (size_t eta = 0; eta < f.orbits.size(); ++eta) {
            c = 0;
            for (int j = 0; j < f.base.rank; ++j)
                c += f.coords[eta][j] * Rat(static_cast<long>(mu[j]));
            check_internal(c.get_den() == 1,
                           "invariant vertex is outside the folded coroot lattice");
            folded_mu[eta] = c.get_num().get_si();
        }
        out.vertices[fidx] = std::move(folded_mu);
    }
    out.datum = datum_along(f.folded, out, canonical_folded_word(f));
    return out;
}

}  // namespace foldmv
