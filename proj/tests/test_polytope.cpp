#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "foldmv/polytope.hpp"

using namespace foldmv;

namespace {

// Vertex lookup by a reduced word for the indexing element.
const Vec& vertex_by_word(const RootDatum& rd, const MVPolytope& p, const ReducedWord& word) {
    return vertex_at(rd, p, element_of(rd, word));
}

// Direct reading of the hull condition: every vertex, pulled back through
// every group element, must lie below lambda in dominance order.
bool hull_by_brute_force(const RootDatum& rd, const MVPolytope& p, const Vec& lambda) {
    const WeylGroup& g = weyl_group(rd);
    for (const Vec& mu : p.vertices)
        for (int u = 0; u < g.size(); ++u) {
            Vec pulled = apply_mat(g.elements[g.inverse[u]], add(mu, lambda));
            if (!leq_dominance(pulled, lambda)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("vertex maps of small polytopes") {
    RootDatum rd = build_root_datum("A2");
    MVPolytope p = build_polytope(rd, {{0, 1, 0}, {1, 0, 1}});
    CHECK(vertex_by_word(rd, p, {}) == Vec{0, 0});
    CHECK(vertex_by_word(rd, p, {0}) == Vec{-1, 0});
    CHECK(vertex_by_word(rd, p, {1}) == Vec{0, 0});
    CHECK(vertex_by_word(rd, p, {0, 1}) == Vec{-1, 0});
    CHECK(vertex_by_word(rd, p, {1, 0}) == Vec{-1, -1});
    CHECK(vertex_by_word(rd, p, {0, 1, 0}) == Vec{-1, -1});

    p = build_polytope(rd, {{0, 1, 0}, {1, 1, 1}});
    CHECK(vertex_by_word(rd, p, {}) == Vec{0, 0});
    CHECK(vertex_by_word(rd, p, {0}) == Vec{-1, 0});
    CHECK(vertex_by_word(rd, p, {1}) == Vec{0, -1});
    CHECK(vertex_by_word(rd, p, {0, 1}) == Vec{-2, -1});
    CHECK(vertex_by_word(rd, p, {1, 0}) == Vec{-1, -2});
    CHECK(vertex_by_word(rd, p, {0, 1, 0}) == Vec{-2, -2});
}

TEST_CASE("the point polytope") {
    RootDatum rd = build_root_datum("A3");
    MVPolytope p = build_polytope(rd, {{0, 1, 0, 2, 1, 0}, zero_vec(6)});
    for (const Vec& v : p.vertices) CHECK(v == zero_vec(3));
}

TEST_CASE("vertex map endpoints") {
    RootDatum rd = build_root_datum("A2");
    const WeylGroup& g = weyl_group(rd);
    for (Int a = 0; a <= 2; ++a)
        for (Int b = 0; b <= 2; ++b)
            for (Int c = 0; c <= 2; ++c) {
                LusztigDatum d{{0, 1, 0}, {a, b, c}};
                MVPolytope p = build_polytope(rd, d);
                CHECK(p.vertices[0] == zero_vec(2));
                CHECK(p.vertices[g.w0] == coweight_of(rd, d));
            }
}

TEST_CASE("reading a datum back off the vertices") {
    RootDatum rd = build_root_datum("A3");
    ReducedWord base{0, 1, 0, 2, 1, 0};
    LusztigDatum d{base, {2, 0, 1, 0, 3, 1}};
    MVPolytope p = build_polytope(rd, d);
    CHECK(datum_along(rd, p, base) == d);
    for (const ReducedWord& word : all_reduced_words(rd, longest_element(rd), 1000))
        CHECK(datum_along(rd, p, word) == transport(rd, d, word));
}

TEST_CASE("hull membership for one coroot direction") {
    RootDatum rd = build_root_datum("A1");
    MVPolytope p = build_polytope(rd, {{0}, {5}});
    CHECK(!lies_in_weyl_hull(rd, p, {1}));
    CHECK(!lies_in_weyl_hull(rd, p, {2}));  // shifted bottom vertex -3 < -lambda
    CHECK(lies_in_weyl_hull(rd, p, {3}));
    CHECK(lies_in_weyl_hull(rd, p, {4}));
}

TEST_CASE("hull membership agrees with the vertex-by-vertex reading") {
    for (const char* label : {"A2", "A3"}) {
        RootDatum rd = build_root_datum(label);
        ReducedWord base = rd.rank == 2 ? ReducedWord{0, 1, 0} : ReducedWord{0, 1, 0, 2, 1, 0};
        Int max = rd.rank == 2 ? 2 : 1;
        std::vector<Vec> lambdas;
        Vec lambda = zero_vec(rd.rank);
        while (true) {
            if (is_dominant(rd, lambda)) lambdas.push_back(lambda);
            int k = 0;
            while (k < rd.rank && lambda[k] == 2) lambda[k++] = 0;
            if (k == rd.rank) break;
            ++lambda[k];
        }
        REQUIRE(lambdas.size() >= 3);
        int entries = static_cast<int>(base.size());
        Vec values = zero_vec(entries);
        while (true) {
            MVPolytope p = build_polytope(rd, {base, values});
            for (const Vec& lam : lambdas)
                CHECK(lies_in_weyl_hull(rd, p, lam) == hull_by_brute_force(rd, p, lam));
            int k = 0;
            while (k < entries && values[k] == max) values[k++] = 0;
            if (k == entries) break;
            ++values[k];
        }
    }
}

TEST_CASE("hull membership requires a dominant weight") {
    RootDatum rd = build_root_datum("A2");
    MVPolytope p = build_polytope(rd, {{0, 1, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(lies_in_weyl_hull(rd, p, {-1, 0}), Error);
}

TEST_CASE("enumerating data with a fixed coweight") {
    RootDatum rd = build_root_datum("A2");
    ReducedWord word{0, 1, 0};
    auto data = enumerate_data(rd, word, {-1, -1});
    REQUIRE(data.size() == 2);
    CHECK(data[0].values == Vec{0, 1, 0});
    CHECK(data[1].values == Vec{1, 0, 1});
    for (const LusztigDatum& d : data) CHECK(coweight_of(rd, d) == Vec{-1, -1});

    auto zero = enumerate_data(rd, word, {0, 0});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].values == zero_vec(3));

    CHECK_THROWS_AS(enumerate_data(rd, word, {1, -1}), Error);
    CHECK_THROWS_AS(enumerate_data(rd, word, {-3, -3}, 2), CapExceeded);
}

TEST_CASE("enumeration agrees with a direct filter") {
    RootDatum rd = build_root_datum("A2");
    ReducedWord word{0, 1, 0};
    std::vector<Vec> chain = chain_coroots(rd, word);
    Vec nu{-2, -2};
    std::set<Vec> expected;
    for (Int a = 0; a <= 2; ++a)
        for (Int b = 0; b <= 2; ++b)
            for (Int c = 0; c <= 2; ++c) {
                Vec total = zero_vec(2);
                Vec values{a, b, c};
                for (size_t k = 0; k < chain.size(); ++k)
                    total = sub(total, scale(values[k], chain[k]));
                if (total == nu) expected.insert(values);
            }
    auto data = enumerate_data(rd, word, nu);
    std::set<Vec> got;
    for (const LusztigDatum& d : data) got.insert(d.values);
    CHECK(got == expected);
    CHECK(expected.size() == 3);  // (0,2,0), (1,1,1), (2,0,2)
}

TEST_CASE("nonnegative combinations along a chain") {
    std::vector<Vec> chain{{1, 0}, {1, 1}, {0, 1}};
    auto combos = enumerate_nonneg_combinations(chain, {2, 2});
    REQUIRE(combos.size() == 3);
    CHECK(combos[0] == Vec{0, 2, 0});
    CHECK(combos[1] == Vec{1, 1, 1});
    CHECK(combos[2] == Vec{2, 0, 2});
    CHECK(enumerate_nonneg_combinations(chain, {0, 0}) == std::vector<Vec>{{0, 0, 0}});
    CHECK(enumerate_nonneg_combinations(chain, {1, 0}) == std::vector<Vec>{{1, 0, 0}});
    CHECK_THROWS_AS(enumerate_nonneg_combinations(chain, {-1, 0}), Error);
    CHECK_THROWS_AS(enumerate_nonneg_combinations({{1, 0}, {0, 0}}, {1, 0}), Error);
    CHECK_THROWS_AS(enumerate_nonneg_combinations(chain, {9, 9}, 3), CapExceeded);
}
