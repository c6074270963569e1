#include <algorithm>

#include "doctest.h"
#include "foldmv/records.hpp"

using namespace foldmv;

TEST_CASE("record snapshots rebuild their polytope") {
    RootDatum rd = build_root_datum("A2");
    LusztigDatum d{{0, 1, 0}, {1, 1, 1}};
    PolytopeRecord rec = make_record(rd, d);
    CHECK(rec.type == "A2");
    CHECK(rec.rank == 2);
    CHECK(!rec.has_sigma);
    CHECK(rec.base_word == d.word);
    CHECK(rec.datum == d.values);
    CHECK(rec.coweight == Vec{-2, -2});
    REQUIRE(rec.vertices.size() == 6);
    CHECK(rec.vertices.front().first.empty());
    CHECK(rec.vertices.front().second == Vec{0, 0});
    for (size_t k = 1; k < rec.vertices.size(); ++k) {
        const auto& prev = rec.vertices[k - 1].first;
        const auto& cur = rec.vertices[k].first;
        CHECK((prev.size() < cur.size() || (prev.size() == cur.size() && prev <= cur)));
    }
    MVPolytope p = build_polytope(rd, d);
    for (const auto& [word, coords] : rec.vertices)
        CHECK(vertex_at(rd, p, element_of(rd, word)) == coords);
}

TEST_CASE("records of the point polytope") {
    RootDatum rd = build_root_datum("A2");
    PolytopeRecord rec = make_record(rd, {{0, 1, 0}, {0, 0, 0}});
    for (const auto& [word, coords] : rec.vertices) CHECK(coords == Vec{0, 0});
}

TEST_CASE("sigma and hull flags") {
    RootDatum rd = build_root_datum("A2");
    FoldingData f = build_folding(rd, parse_sigma(rd, "flip"));
    Vec lambda{1, 1};
    PolytopeRecord rec = make_record(rd, {{0, 1, 0}, {1, 1, 1}}, &f, &lambda);
    CHECK(rec.has_sigma);
    CHECK(rec.sigma == "(1 2)");
    CHECK(rec.sigma_invariant);
    CHECK(rec.has_lambda);
    CHECK(rec.lambda == lambda);
    CHECK(rec.in_vlambda);  // bottom vertex lands exactly on -lambda

    PolytopeRecord skew = make_record(rd, {{0, 1, 0}, {1, 0, 1}}, &f, &lambda);
    CHECK(!skew.sigma_invariant);
    CHECK(skew.in_vlambda);

    PolytopeRecord wide = make_record(rd, {{0, 1, 0}, {0, 2, 0}}, &f, &lambda);
    CHECK(!wide.sigma_invariant);
    CHECK(!wide.in_vlambda);
}

TEST_CASE("round trips through JSON are bit exact") {
    RootDatum rd = build_root_datum("A3");
    FoldingData f = build_folding(rd, parse_sigma(rd, "flip"));
    Vec lambda{1, 2, 1};
    std::vector<PolytopeRecord> records;
    records.push_back(make_record(rd, {{0, 1, 0, 2, 1, 0}, {1, 0, 0, 1, 0, 0}}));
    records.push_back(make_record(rd, {{0, 1, 0, 2, 1, 0}, {0, 0, 0, 0, 0, 0}}, &f, &lambda));
    std::string text = dump_records(records);
    std::vector<PolytopeRecord> parsed = parse_records(text);
    REQUIRE(parsed.size() == records.size());
    CHECK(parsed[0] == records[0]);
    CHECK(parsed[1] == records[1]);
    CHECK(dump_records(parsed) == text);
}

TEST_CASE("the JSON shape is stable") {
    RootDatum rd = build_root_datum("A2");
    PolytopeRecord rec = make_record(rd, {{0, 1, 0}, {1, 1, 1}});
    nlohmann::ordered_json j = record_to_json(rec);
    CHECK(j["type"] == "A2");
    CHECK(j["rank"] == 2);
    CHECK(j["base_word"] == nlohmann::json::array({1, 2, 1}));  // 1-based on disk
    CHECK(j["datum"] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["coweight"] == nlohmann::json::array({-2, -2}));
    CHECK(j["sigma"].is_null());
    CHECK(j["lambda"].is_null());
    CHECK(j["flags"].is_object());
    CHECK(j["flags"].empty());
    REQUIRE(j["vertices"].is_array());
    CHECK(j["vertices"][0]["word"] == nlohmann::json::array());
    CHECK(j["vertices"][0]["coords"] == nlohmann::json::array({0, 0}));
}

TEST_CASE("malformed payloads are rejected") {
    CHECK_THROWS_AS(parse_records("not json"), Error);
    CHECK_THROWS_AS(parse_records("{}"), Error);
    CHECK_THROWS_AS(parse_records(R"({"schema":"other/1","records":[]})"), Error);
    CHECK_THROWS_AS(parse_records(R"({"schema":"foldmv/1"})"), Error);
    CHECK_THROWS_AS(parse_records(R"({"schema":"foldmv/1","records":[{}]})"), Error);
    CHECK(parse_records(R"({"schema":"foldmv/1","records":[]})").empty());
}
