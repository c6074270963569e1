#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "foldmv/characters.hpp"
#include "foldmv/records.hpp"

using namespace foldmv;

namespace {

std::string cli_path;

bool report(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (unexpected error: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS: " : "FAIL: ") << name << note << "\n";
    return ok;
}

FoldingData flip_of(const std::string& label) {
    RootDatum rd = build_root_datum(label);
    return build_folding(rd, parse_sigma(rd, "flip"));
}

// Every value tuple on `size` slots with entries 0..max, in odometer order.
std::vector<Vec> value_box(int size, Int max) {
    std::vector<Vec> out;
    Vec v(static_cast<size_t>(size), 0);
    while (true) {
        out.push_back(v);
        int k = 0;
        while (k < size && v[k] == max) v[k++] = 0;
        if (k == size) break;
        ++v[k];
    }
    return out;
}

bool weights_match_freudenthal() {
    bool ok = true;
    RootDatum a2 = build_root_datum("A2");
    for (Vec lambda : {Vec{0, 0}, Vec{1, 1}, Vec{1, 2}, Vec{2, 1}, Vec{2, 2}, Vec{2, 3}, Vec{3, 2},
                       Vec{2, 4}, Vec{4, 2}, Vec{3, 3}})
        ok = ok && verify_weights(a2, lambda).equal;
    RootDatum a3 = build_root_datum("A3");
    for (Vec lambda : {Vec{0, 0, 0}, Vec{1, 1, 1}, Vec{1, 2, 1}})
        ok = ok && verify_weights(a3, lambda).equal;
    return ok;
}

bool transport_is_path_independent() {
    bool ok = true;
    RootDatum a2 = build_root_datum("A2");
    auto words2 = all_reduced_words(a2, longest_element(a2), 1000);
    for (const Vec& v : value_box(3, 3))
        for (const ReducedWord& from : words2) {
            LusztigDatum d{from, v};
            for (const ReducedWord& to : words2) {
                LusztigDatum direct = transport(a2, d, to);
                ok = ok && transport(a2, direct, from) == d;
                ok = ok && coweight_of(a2, direct) == coweight_of(a2, d);
            }
        }

    RootDatum a3 = build_root_datum("A3");
    auto words = all_reduced_words(a3, longest_element(a3), 100000);
    for (const Vec& v : value_box(6, 1)) {
        LusztigDatum d{words[0], v};
        Vec nu = coweight_of(a3, d);
        for (const ReducedWord& to : words) {
            LusztigDatum direct = transport(a3, d, to);
            ok = ok && coweight_of(a3, direct) == nu;
            for (const ReducedWord& mid : words)
                ok = ok && transport(a3, transport(a3, d, mid), to) == direct;
        }
    }

    std::mt19937 rng(20250817u);
    std::uniform_int_distribution<int> entry(0, 3);
    std::uniform_int_distribution<size_t> pick3(0, words.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        Vec v(6);
        for (Int& x : v) x = entry(rng);
        LusztigDatum d{words[pick3(rng)], v};
        const ReducedWord& mid = words[pick3(rng)];
        const ReducedWord& to = words[pick3(rng)];
        ok = ok && transport(a3, transport(a3, d, mid), to) == transport(a3, d, to);
    }

    RootDatum a4 = build_root_datum("A4");
    const auto& words4 = word_graph_w0(a4).words;
    std::uniform_int_distribution<size_t> pick4(0, words4.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        Vec v(10);
        for (Int& x : v) x = entry(rng);
        LusztigDatum d{words4[pick4(rng)], v};
        const ReducedWord& mid = words4[pick4(rng)];
        const ReducedWord& to = words4[pick4(rng)];
        ok = ok && transport(a4, transport(a4, d, mid), to) == transport(a4, d, to);
    }
    return ok;
}

bool invariance_matches_block_constancy() {
    bool ok = true;
    {
        RootDatum a2 = build_root_datum("A2");
        FoldingData f = build_folding(a2, parse_sigma(a2, "flip"));
        ReducedWord fword = canonical_folded_word(f);
        ReducedWord lifted = lift_word(f, fword);
        for (const Vec& v : value_box(3, 6)) {
            LusztigDatum d{lifted, v};
            if (height(neg(coweight_of(a2, d))) > 6) continue;
            ok = ok && is_sigma_invariant(f, build_polytope(a2, d)) ==
                           is_block_constant(f, fword, d);
        }
    }
    {
        FoldingData f = flip_of("A3");
        ReducedWord fword = canonical_folded_word(f);
        ReducedWord lifted = lift_word(f, fword);
        for (const Vec& v : value_box(6, 4)) {
            LusztigDatum d{lifted, v};
            if (height(neg(coweight_of(f.base, d))) > 4) continue;
            ok = ok && is_sigma_invariant(f, build_polytope(f.base, d)) ==
                           is_block_constant(f, fword, d);
        }
    }
    return ok;
}

bool folding_is_a_bijection() {
    bool ok = true;
    for (const char* label : {"A3", "A4"}) {
        FoldingData f = flip_of(label);
        ReducedWord fword = canonical_folded_word(f);
        ReducedWord lifted = lift_word(f, fword);
        for (Int a = 0; a <= 4; ++a)
            for (Int b = 0; a + b <= 4; ++b) {
                Vec nu{-a, -b};
                Vec ambient_nu = embed_coweight(f, nu);
                std::multiset<Vec> direct;
                for (const LusztigDatum& q : enumerate_data(f.folded, fword, nu)) {
                    direct.insert(q.values);
                    LusztigDatum big = unfold_datum(f, q);
                    ok = ok && big.word == lifted;
                    ok = ok && coweight_of(f.base, big) == ambient_nu;
                    ok = ok && fold_datum(f, fword, big) == q;
                }
                std::multiset<Vec> via_theta;
                for (const LusztigDatum& d : enumerate_data(f.base, lifted, ambient_nu)) {
                    if (!is_block_constant(f, fword, d)) continue;
                    MVPolytope p = build_polytope(f.base, d);
                    ok = ok && is_sigma_invariant(f, p);
                    MVPolytope q = theta_P(f, p);
                    LusztigDatum folded_d = datum_along(f.folded, q, fword);
                    ok = ok && folded_d == fold_datum(f, fword, d);
                    ok = ok && coweight_of(f.folded, folded_d) == nu;
                    via_theta.insert(folded_d.values);
                }
                ok = ok && via_theta == direct;
            }
    }
    return ok;
}

bool twining_matches_folded_characters() {
    bool ok = true;
    RootDatum a2 = build_root_datum("A2");
    FoldingData f2 = build_folding(a2, parse_sigma(a2, "flip"));
    for (Int k = 0; k <= 3; ++k) ok = ok && verify_twining(a2, f2, {k, k}).equal;

    FoldingData f3 = flip_of("A3");
    ok = ok && verify_twining(f3.base, f3, {1, 1, 1}).equal;
    ok = ok && verify_twining(f3.base, f3, {1, 2, 1}).equal;

    FoldingData f4 = flip_of("A4");
    ok = ok && verify_twining(f4.base, f4, {1, 1, 1, 1}).equal;

    RootDatum d4 = build_root_datum("D4");
    FoldingData tri = build_folding(d4, parse_sigma(d4, "triality"));
    ok = ok && verify_twining(d4, tri, {1, 2, 1, 1}).equal;
    return ok;
}

bool folded_transport_is_well_defined() {
    bool ok = true;
    FoldingData f = flip_of("A3");
    ReducedWord fword{0, 1, 0, 1};
    ReducedWord other{1, 0, 1, 0};
    for (const Vec& v : value_box(4, 3)) {
        LusztigDatum d{fword, v};
        LusztigDatum asc = folded_transport(f, d, other);
        LusztigDatum desc = folded_transport(f, d, other, LiftConvention::Descending);
        ok = ok && asc == desc;
        ok = ok && folded_transport(f, d, fword) == d;
        ok = ok && folded_transport(f, asc, fword) == d;
        ok = ok && coweight_of(f.folded, asc) == coweight_of(f.folded, d);
    }
    return ok;
}

bool doubled_bond_lift_is_frozen() {
    bool ok = true;
    FoldingData f = flip_of("A4");
    ReducedWord fword{0, 1, 0, 1};
    ok = ok && canonical_folded_word(f) == fword;
    ReducedWord lifted = lift_word(f, fword);
    ok = ok && lifted == ReducedWord{0, 3, 1, 2, 1, 0, 3, 1, 2, 1};
    ok = ok && lift_word(f, {1, 0, 1, 0}) == ReducedWord{1, 2, 1, 0, 3, 1, 2, 1, 0, 3};
    for (const Vec& v : value_box(10, 1)) {
        bool pattern = v[0] == v[1] && v[2] == v[3] && v[3] == v[4] && v[5] == v[6] &&
                       v[7] == v[8] && v[8] == v[9];
        ok = ok && is_block_constant(f, fword, {lifted, v}) == pattern;
    }
    return ok;
}

std::pair<int, std::string> run_command(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, out};
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {status, out};
}

bool verification_output_is_deterministic() {
    std::string q = "'" + cli_path + "' ";
    std::vector<std::string> commands{
        q + "verify-weights --type A2 --lambda 2,2",
        q + "verify-twining --type A3 --sigma flip --lambda 1,2,1",
        q + "verify-twining --type D4 --sigma triality --lambda 1,2,1,1",
        q + "enumerate --type A2 --word 1,2,1 --coweight=-2,-2",
        q + "transport --type A3 --sigma '(1 3)' --from 1,2,1,2 --to 2,1,2,1 --datum 1,0,0,0",
        q + "export --type A4 --sigma flip --word 1,4,2,3,2,1,4,2,3,2 "
            "--coweight=-1,-2,-2,-1 --lambda 1,1,1,1",
    };
    bool ok = true;
    for (const std::string& command : commands) {
        auto first = run_command(command + " 2>&1");
        auto second = run_command(command + " 2>&1");
        ok = ok && first.first == 0 && second.first == 0;
        ok = ok && !first.second.empty();
        ok = ok && first.second == second.second;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    cli_path = argv[1];
    bool all = true;
    all &= report("weight counts match Freudenthal multiplicities", weights_match_freudenthal);
    all &= report("transport is independent of the braid path", transport_is_path_independent);
    all &= report("invariant polytopes are exactly the block-constant data",
                  invariance_matches_block_constancy);
    all &= report("folding polytopes is a coweight-preserving bijection", folding_is_a_bijection);
    all &= report("twining counts match folded characters", twining_matches_folded_characters);
    all &= report("folded transport is well defined and convention free",
                  folded_transport_is_well_defined);
    all &= report("the doubled-bond lift has the frozen block pattern", doubled_bond_lift_is_frozen);
    all &= report("verification output is deterministic", verification_output_is_deterministic);
    return all ? 0 : 1;
}
