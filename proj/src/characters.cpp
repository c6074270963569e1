#include "foldmv/characters.hpp"

#include <algorithm>
#include <set>

namespace foldmv {

namespace {

QVec qadd(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec shift_by_rho(const CharacterSystem& sys, const Vec& x) {
    return qadd(to_qvec(x), sys.rho);
}

Vec reflect_in(const CharacterSystem& sys, int zeta, const Vec& x) {
    return sub(x, scale(pairing_in(sys, x, zeta), sys.simple_roots[zeta]));
}

// Reflection closure of the simple roots; positivity is readable off the
// sign of the ambient coordinates for both system flavors.
void close_positive_roots(CharacterSystem& sys) {
    std::set<Vec> pos(sys.simple_roots.begin(), sys.simple_roots.end());
    std::vector<Vec> frontier(pos.begin(), pos.end());
    int r = static_cast<int>(sys.simple_roots.size());
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (int zeta = 0; zeta < r; ++zeta) {
                Vec w = reflect_in(sys, zeta, v);
                if (all_nonneg(w) && pos.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    sys.positive_roots.assign(pos.begin(), pos.end());
    std::sort(sys.positive_roots.begin(), sys.positive_roots.end(),
              [](const Vec& a, const Vec& b) {
                  Int ha = height(a), hb = height(b);
                  if (ha != hb) return ha < hb;
                  return a < b;
              });
    sys.rho.assign(sys.ambient, Rat(0));
    for (const Vec& beta : sys.positive_roots)
        for (int j = 0; j < sys.ambient; ++j)
            sys.rho[j] += Rat(static_cast<long>(beta[j])) / 2;
    for (int zeta = 0; zeta < r; ++zeta) {
        Rat p = 0;
        for (int j = 0; j < sys.ambient; ++j)
            p += sys.rho[j] * Rat(static_cast<long>(sys.pairing[zeta][j]));
        check_internal(p == 1, "rho does not pair to 1 with a simple root");
    }
}

void build_gram(CharacterSystem& sys, const Mat& cartan) {
    QVec c = coroot_symmetrizer(cartan);
    int r = static_cast<int>(cartan.size());
    sys.gram.assign(r, QVec(r, Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            sys.gram[i][j] = c[j] * Rat(static_cast<long>(cartan[i][j]));
}

}  // namespace

CharacterSystem character_system(const RootDatum& rd) {
    CharacterSystem sys;
    sys.name = rd.label;
    sys.ambient = rd.rank;
    sys.simple_roots.resize(rd.rank);
    sys.pairing.assign(rd.rank, zero_vec(rd.rank));
    for (int i = 0; i < rd.rank; ++i) {
        sys.simple_roots[i] = zero_vec(rd.rank);
        sys.simple_roots[i][i] = 1;
        for (int j = 0; j < rd.rank; ++j) sys.pairing[i][j] = rd.cartan[j][i];
    }
    sys.coords.assign(rd.rank, QVec(rd.rank, Rat(0)));
    for (int i = 0; i < rd.rank; ++i) sys.coords[i][i] = 1;
    build_gram(sys, rd.cartan);
    close_positive_roots(sys);
    return sys;
}

CharacterSystem folded_character_system(const FoldingData& f) {
    CharacterSystem sys;
    sys.name = f.folded.label + " in " + f.base.label;
    sys.ambient = f.base.rank;
    sys.simple_roots = f.embed;
    int r = static_cast<int>(f.orbits.size());
    sys.pairing.assign(r, zero_vec(f.base.rank));
    for (int zeta = 0; zeta < r; ++zeta)
        for (int j = 0; j < f.base.rank; ++j)
            sys.pairing[zeta][j] = f.base.cartan[j][f.orbits[zeta].nodes[0]];
    sys.coords = f.coords;
    build_gram(sys, f.folded.cartan);
    close_positive_roots(sys);
    return sys;
}

Int pairing_in(const CharacterSystem& sys, const Vec& x, int zeta) {
    Int s = 0;
    for (int j = 0; j < sys.ambient; ++j) s += sys.pairing[zeta][j] * x[j];
    return s;
}

bool dominant_in(const CharacterSystem& sys, const Vec& x) {
    for (size_t zeta = 0; zeta < sys.simple_roots.size(); ++zeta)
        if (pairing_in(sys, x, static_cast<int>(zeta)) < 0) return false;
    return true;
}

Vec dominantize_in(const CharacterSystem& sys, Vec x) {
    size_t guard = 0;
    for (;;) {
        int neg = -1;
        for (size_t zeta = 0; zeta < sys.simple_roots.size(); ++zeta)
            if (pairing_in(sys, x, static_cast<int>(zeta)) < 0) {
                neg = static_cast<int>(zeta);
                break;
            }
        if (neg < 0) return x;
        x = reflect_in(sys, neg, x);
        check_internal(++guard <= 4 * sys.positive_roots.size() + 8,
                       "dominantize failed to terminate");
    }
}

Rat inner(const CharacterSystem& sys, const QVec& x, const QVec& y) {
    QVec cx = apply_qmat(sys.coords, x);
    QVec cy = apply_qmat(sys.coords, y);
    Rat s = 0;
    for (size_t i = 0; i < cx.size(); ++i)
        for (size_t j = 0; j < cy.size(); ++j) s += cx[i] * sys.gram[i][j] * cy[j];
    return s;
}

CharacterTable freudenthal_table(const CharacterSystem& sys, const Vec& lambda) {
    require(static_cast<int>(lambda.size()) == sys.ambient,
            "highest weight has the wrong dimension");
    for (size_t zeta = 0; zeta < sys.simple_roots.size(); ++zeta)
        require(pairing_in(sys, lambda, static_cast<int>(zeta)) >= 0,
                "highest weight is not dominant for the system");

    CharacterTable table;
    table.lambda = lambda;
    table.lowest = neg(dominantize_in(sys, neg(lambda)));

    int r = static_cast<int>(sys.simple_roots.size());
    // Box bounds in simple-root coordinates of lambda - lowest.
    QVec dq = apply_qmat(sys.coords, to_qvec(sub(lambda, table.lowest)));
    Vec box(r);
    for (int i = 0; i < r; ++i) {
        check_internal(dq[i].get_den() == 1 && dq[i] >= 0, "weight box is not integral");
        box[i] = dq[i].get_num().get_si();
    }

    // Dominant candidates mu = lambda - sum c_i root_i, ordered by depth.
    std::vector<std::pair<Vec, Vec>> cand;  // (c, mu)
    Vec c(r, 0);
    auto gen = [&](auto&& self, int at) -> void {
        if (at == r) {
            Vec mu = lambda;
            for (int i = 0; i < r; ++i) mu = sub(mu, scale(c[i], sys.simple_roots[i]));
            if (dominant_in(sys, mu)) cand.emplace_back(c, mu);
            return;
        }
        for (c[at] = 0; c[at] <= box[at]; ++c[at]) self(self, at + 1);
        c[at] = 0;
    };
    gen(gen, 0);
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
        Int ha = height(a.first), hb = height(b.first);
        if (ha != hb) return ha < hb;
        return a.first < b.first;
    });
    check_internal(!cand.empty() && is_zero(cand.front().first),
                   "highest weight missing from its own weight box");

    // Root coordinates of each positive root, for the <= lambda test.
    std::vector<Vec> root_coords;
    for (const Vec& beta : sys.positive_roots) {
        QVec cb = apply_qmat(sys.coords, to_qvec(beta));
        Vec v(r);
        for (int i = 0; i < r; ++i) {
            check_internal(cb[i].get_den() == 1, "root has non-integral coordinates");
            v[i] = cb[i].get_num().get_si();
        }
        root_coords.push_back(std::move(v));
    }

    Rat lam_norm = inner(sys, shift_by_rho(sys, lambda), shift_by_rho(sys, lambda));
    for (const auto& [cvec, mu] : cand) {
        if (is_zero(cvec)) {
            table.dominant_mult[mu] = 1;
            continue;
        }
        Rat total = 0;
        for (size_t b = 0; b < sys.positive_roots.size(); ++b) {
            const Vec& beta = sys.positive_roots[b];
            for (Int k = 1;; ++k) {
                bool inside = true;
                for (int i = 0; i < r && inside; ++i)
                    inside = cvec[i] - k * root_coords[b][i] >= 0;
                if (!inside) break;
                Vec nu = add(mu, scale(k, beta));
                auto it = table.dominant_mult.find(dominantize_in(sys, nu));
                if (it == table.dominant_mult.end()) continue;
                total += Rat(static_cast<long>(it->second)) *
                         inner(sys, to_qvec(nu), to_qvec(beta));
            }
        }
        Rat mu_norm = inner(sys, shift_by_rho(sys, mu), shift_by_rho(sys, mu));
        Rat denom = lam_norm - mu_norm;
        check_internal(denom > 0, "Freudenthal denominator is not positive");
        Rat mult = 2 * total / denom;
        check_internal(mult.get_den() == 1 && mult >= 1,
                       "Freudenthal produced a non-positive-integer multiplicity");
        table.dominant_mult[mu] = mult.get_num().get_si();
    }
    return table;
}

Int multiplicity_lookup(const CharacterSystem& sys, const CharacterTable& table, const Vec& mu) {
    auto it = table.dominant_mult.find(dominantize_in(sys, mu));
    return it == table.dominant_mult.end() ? 0 : it->second;
}

Int freudenthal_multiplicity(const CharacterSystem& sys, const Vec& lambda, const Vec& mu) {
    return multiplicity_lookup(sys, freudenthal_table(sys, lambda), mu);
}

FormalCharacter weyl_character(const CharacterSystem& sys, const Vec& lambda) {
    CharacterTable table = freudenthal_table(sys, lambda);
    FormalCharacter ch;
    int r = static_cast<int>(sys.simple_roots.size());
    for (const auto& [mu, mult] : table.dominant_mult) {
        std::set<Vec> orbit{mu};
        std::vector<Vec> frontier{mu};
        while (!frontier.empty()) {
            std::vector<Vec> next;
            for (const Vec& v : frontier)
                for (int zeta = 0; zeta < r; ++zeta) {
                    Vec w = reflect_in(sys, zeta, v);
                    if (orbit.insert(w).second) next.push_back(w);
                }
            frontier = std::move(next);
        }
        for (const Vec& v : orbit) ch.add(v, mult);
    }
    return ch;
}

Int weyl_dimension(const CharacterSystem& sys, const Vec& lambda) {
    for (size_t zeta = 0; zeta < sys.simple_roots.size(); ++zeta)
        require(pairing_in(sys, lambda, static_cast<int>(zeta)) >= 0,
                "highest weight is not dominant for the system");
    Rat dim = 1;
    QVec shifted = shift_by_rho(sys, lambda);
    for (const Vec& beta : sys.positive_roots)
        dim *= inner(sys, shifted, to_qvec(beta)) / inner(sys, sys.rho, to_qvec(beta));
    check_internal(dim.get_den() == 1 && dim >= 1, "dimension formula gave a non-integer");
    return dim.get_num().get_si();
}

Int count_in_hull_serial(const RootDatum& rd, const std::vector<LusztigDatum>& data,
                         const Vec& lambda) {
    require_dominant(rd, lambda);
    Int count = 0;
    for (const LusztigDatum& d : data) {
        MVPolytope p = build_polytope(rd, d);
        if (lies_in_weyl_hull(rd, p, lambda)) ++count;
    }
    return count;
}

Int count_in_hull(const RootDatum& rd, const std::vector<LusztigDatum>& data,
                  const Vec& lambda) {
    require_dominant(rd, lambda);
    // Shared caches must exist before the parallel region; afterwards all
    // accesses are reads.
    weyl_group(rd);
    word_graph_w0(rd);
    Int count = 0;
    std::exception_ptr err = nullptr;
    long n = static_cast<long>(data.size());
#ifdef FOLDMV_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            MVPolytope p = build_polytope(rd, data[i]);
            if (lies_in_weyl_hull(rd, p, lambda)) ++count;
        } catch (...) {
#ifdef FOLDMV_HAVE_OPENMP
#pragma omp critical
#endif
            {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    return count;
}

Int mv_weight_multiplicity(const RootDatum& rd, const Vec& lambda, const Vec& mu,
                           const ReducedWord& word) {
    require_dominant(rd, lambda);
    Vec nu = sub(mu, lambda);
    if (!all_nonneg(neg(nu))) return 0;
    return count_in_hull(rd, enumerate_data(rd, word, nu), lambda);
}

Int mv_weight_multiplicity(const RootDatum& rd, const Vec& lambda, const Vec& mu) {
    const WeylGroup& g = weyl_group(rd);
    return mv_weight_multiplicity(rd, lambda, mu, g.canonical_word[g.w0]);
}

WeightsReport verify_weights(const RootDatum& rd, const Vec& lambda, long long cap) {
    require_dominant(rd, lambda);
    CharacterSystem sys = character_system(rd);
    CharacterTable table = freudenthal_table(sys, lambda);
    const WeylGroup& g = weyl_group(rd);
    const ReducedWord& word = g.canonical_word[g.w0];

    WeightsReport report;
    report.equal = true;
    Vec box = sub(lambda, table.lowest);
    Vec c(rd.rank, 0);
    auto gen = [&](auto&& self, int at) -> void {
        if (at == rd.rank) {
            Vec mu = sub(lambda, c);
            WeightRow row;
            row.mu = mu;
            row.freudenthal = multiplicity_lookup(sys, table, mu);
            row.mv = count_in_hull(rd, enumerate_data(rd, word, sub(mu, lambda), cap), lambda);
            report.equal = report.equal && row.mv == row.freudenthal;
            report.dimension += row.freudenthal;
            report.rows.push_back(std::move(row));
            return;
        }
        for (c[at] = 0; c[at] <= box[at]; ++c[at]) self(self, at + 1);
        c[at] = 0;
    };
    gen(gen, 0);
    std::sort(report.rows.begin(), report.rows.end(), [&](const WeightRow& a, const WeightRow& b) {
        Int ha = height(sub(lambda, a.mu)), hb = height(sub(lambda, b.mu));
        if (ha != hb) return ha < hb;
        return a.mu < b.mu;
    });
    return report;
}

namespace {

struct BlockSetup {
    ReducedWord folded_word;
    ReducedWord lifted;
    std::vector<int> repeats;     // block length per folded letter
    std::vector<Vec> block_sums;  // sum of chain coroots over each block
};

BlockSetup block_setup(const RootDatum& rd, const FoldingData& f) {
    BlockSetup s;
    s.folded_word = canonical_folded_word(f);
    s.lifted = lift_word(f, s.folded_word, LiftConvention::Ascending);
    std::vector<Vec> chain = chain_coroots(rd, s.lifted);
    size_t at = 0;
    for (int eta : s.folded_word) {
        int r = f.orbits[eta].r;
        Vec sum = zero_vec(rd.rank);
        for (int k = 0; k < r; ++k) sum = add(sum, chain[at + k]);
        s.repeats.push_back(r);
        s.block_sums.push_back(std::move(sum));
        at += static_cast<size_t>(r);
    }
    return s;
}

// Sigma-invariant MV polytopes of coweight mu - lambda inside the hull:
// block-constant data on the lifted word, then the hull filter.
Int twining_count(const RootDatum& rd, const Vec& lambda, const Vec& mu,
                  const BlockSetup& s, long long cap) {
    Vec target = sub(lambda, mu);
    if (!all_nonneg(target)) return 0;
    std::vector<LusztigDatum> data;
    for (const Vec& block_values : enumerate_nonneg_combinations(s.block_sums, target, cap)) {
        LusztigDatum d;
        d.word = s.lifted;
        for (size_t t = 0; t < block_values.size(); ++t)
            for (int k = 0; k < s.repeats[t]; ++k) d.values.push_back(block_values[t]);
        data.push_back(std::move(d));
    }
    return count_in_hull(rd, data, lambda);
}

// Sigma-invariant grid points lambda - sum c_eta (sum of e_i over the orbit)
// inside the weight box of lambda.
std::vector<Vec> invariant_grid(const RootDatum& rd, const FoldingData& f, const Vec& lambda) {
    Vec lowest = neg(dominant_representative(rd, neg(lambda)).first);
    Vec d = sub(lambda, lowest);
    int r = static_cast<int>(f.orbits.size());
    Vec bound(r);
    for (int eta = 0; eta < r; ++eta) {
        Int b = -1;
        for (int node : f.orbits[eta].nodes)
            b = (b < 0) ? d[node] : std::min(b, d[node]);
        bound[eta] = b;
    }
    std::vector<Vec> grid;
    Vec c(r, 0);
    auto gen = [&](auto&& self, int at) -> void {
        if (at == r) {
            Vec mu = lambda;
            for (int eta = 0; eta < r; ++eta)
                for (int node : f.orbits[eta].nodes) mu[node] -= c[eta];
            grid.push_back(std::move(mu));
            return;
        }
        for (c[at] = 0; c[at] <= bound[at]; ++c[at]) self(self, at + 1);
        c[at] = 0;
    };
    gen(gen, 0);
    return grid;
}

void require_twining_input(const RootDatum& rd, const FoldingData& f, const Vec& lambda) {
    require(f.base.key() == rd.key(), "folding does not belong to this root datum");
    require_dominant(rd, lambda);
    require(is_sigma_invariant_vec(f, lambda), "lambda is not sigma-invariant");
}

}  // namespace

FormalCharacter twining_character(const RootDatum& rd, const FoldingData& f, const Vec& lambda,
                                  long long cap) {
    require_twining_input(rd, f, lambda);
    BlockSetup s = block_setup(rd, f);
    FormalCharacter ch;
    for (const Vec& mu : invariant_grid(rd, f, lambda))
        ch.add(mu, twining_count(rd, lambda, mu, s, cap));
    return ch;
}

TwiningReport verify_twining(const RootDatum& rd, const FoldingData& f, const Vec& lambda,
                             long long cap) {
    require_twining_input(rd, f, lambda);
    BlockSetup s = block_setup(rd, f);
    CharacterSystem fsys = folded_character_system(f);
    FormalCharacter folded = weyl_character(fsys, lambda);

    std::set<Vec> keys;
    for (const Vec& mu : invariant_grid(rd, f, lambda)) keys.insert(mu);
    for (const auto& [mu, mult] : folded.terms) keys.insert(mu);

    TwiningReport report;
    report.equal = true;
    for (const Vec& mu : keys) {
        TwiningRow row;
        row.mu = mu;
        row.count = twining_count(rd, lambda, mu, s, cap);
        row.folded_dim = folded.at(mu);
        report.equal = report.equal && row.count == row.folded_dim;
        report.rows.push_back(std::move(row));
    }
    std::sort(report.rows.begin(), report.rows.end(), [&](const TwiningRow& a, const TwiningRow& b) {
        Int ha = height(sub(lambda, a.mu)), hb = height(sub(lambda, b.mu));
        if (ha != hb) return ha < hb;
        return a.mu < b.mu;
    });
    return report;
}

}  // namespace foldmv
