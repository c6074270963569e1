#include "foldmv/records.hpp"

#include <algorithm>

namespace foldmv {

namespace {

nlohmann::ordered_json word_to_json(const ReducedWord& word) {
    auto arr = nlohmann::ordered_json::array();
    for (int i : word) arr.push_back(i + 1);
    return arr;
}

ReducedWord word_from_json(const nlohmann::json& j) {
    require(j.is_array(), "word field is not an array");
    ReducedWord word;
    for (const auto& x : j) {
        require(x.is_number_integer(), "word letter is not an integer");
        word.push_back(x.get<int>() - 1);
    }
    return word;
}

nlohmann::ordered_json vec_to_json(const Vec& v) {
    auto arr = nlohmann::ordered_json::array();
    for (Int x : v) arr.push_back(x);
    return arr;
}

Vec vec_from_json(const nlohmann::json& j) {
    require(j.is_array(), "coordinate field is not an array");
    Vec v;
    for (const auto& x : j) {
        require(x.is_number_integer(), "coordinate is not an integer");
        v.push_back(x.get<Int>());
    }
    return v;
}

}  // namespace

PolytopeRecord make_record(const RootDatum& rd, const LusztigDatum& datum,
                           const FoldingData* folding, const Vec* lambda) {
    MVPolytope p = build_polytope(rd, datum);
    const WeylGroup& g = weyl_group(rd);

    PolytopeRecord rec;
    rec.type = rd.label;
    rec.rank = rd.rank;
    rec.base_word = datum.word;
    rec.datum = datum.values;
    rec.coweight = coweight_of(rd, datum);
    for (int w = 0; w < g.size(); ++w)
        rec.vertices.emplace_back(g.canonical_word[w], p.vertices[w]);
    std::sort(rec.vertices.begin(), rec.vertices.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    if (folding != nullptr) {
        require(folding->base.key() == rd.key(), "folding does not belong to this root datum");
        rec.has_sigma = true;
        rec.sigma = format_sigma(folding->sigma);
        rec.sigma_invariant = is_sigma_invariant(*folding, p);
    }
    if (lambda != nullptr) {
        rec.has_lambda = true;
        rec.lambda = *lambda;
        rec.in_vlambda = lies_in_weyl_hull(rd, p, *lambda);
    }
    return rec;
}

nlohmann::ordered_json record_to_json(const PolytopeRecord& rec) {
    nlohmann::ordered_json j;
    j["type"] = rec.type;
    j["rank"] = rec.rank;
    j["sigma"] = rec.has_sigma ? nlohmann::ordered_json(rec.sigma) : nlohmann::ordered_json(nullptr);
    j["base_word"] = word_to_json(rec.base_word);
    j["datum"] = vec_to_json(rec.datum);
    j["coweight"] = vec_to_json(rec.coweight);
    j["lambda"] = rec.has_lambda ? vec_to_json(rec.lambda) : nlohmann::ordered_json(nullptr);
    auto verts = nlohmann::ordered_json::array();
    for (const auto& [word, coords] : rec.vertices) {
        nlohmann::ordered_json v;
        v["word"] = word_to_json(word);
        v["coords"] = vec_to_json(coords);
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    auto flags = nlohmann::ordered_json::object();
    if (rec.has_sigma) flags["sigma_invariant"] = rec.sigma_invariant;
    if (rec.has_lambda) flags["in_vlambda"] = rec.in_vlambda;
    j["flags"] = std::move(flags);
    return j;
}

PolytopeRecord record_from_json(const nlohmann::json& j) {
    require(j.is_object(), "record is not an object");
    PolytopeRecord rec;
    require(j.contains("type") && j["type"].is_string(), "record has no type label");
    rec.type = j["type"].get<std::string>();
    require(j.contains("rank") && j["rank"].is_number_integer(), "record has no rank");
    rec.rank = j["rank"].get<int>();
    require(j.contains("sigma"), "record has no sigma field");
    if (!j["sigma"].is_null()) {
        require(j["sigma"].is_string(), "sigma field is not a string");
        rec.has_sigma = true;
        rec.sigma = j["sigma"].get<std::string>();
    }
    require(j.contains("base_word"), "record has no base word");
    rec.base_word = word_from_json(j["base_word"]);
    require(j.contains("datum"), "record has no datum values");
    rec.datum = vec_from_json(j["datum"]);
    require(j.contains("coweight"), "record has no coweight");
    rec.coweight = vec_from_json(j["coweight"]);
    require(j.contains("lambda"), "record has no lambda field");
    if (!j["lambda"].is_null()) {
        rec.has_lambda = true;
        rec.lambda = vec_from_json(j["lambda"]);
    }
    require(j.contains("vertices") && j["vertices"].is_array(), "record has no vertex list");
    for (const auto& v : j["vertices"]) {
        require(v.is_object() && v.contains("word") && v.contains("coords"),
                "vertex entry is malformed");
        rec.vertices.emplace_back(word_from_json(v["word"]), vec_from_json(v["coords"]));
    }
    require(j.contains("flags") && j["flags"].is_object(), "record has no flags");
    const auto& flags = j["flags"];
    if (rec.has_sigma) {
        require(flags.contains("sigma_invariant") && flags["sigma_invariant"].is_boolean(),
                "record with sigma lacks the sigma_invariant flag");
        rec.sigma_invariant = flags["sigma_invariant"].get<bool>();
    }
    if (rec.has_lambda) {
        require(flags.contains("in_vlambda") && flags["in_vlambda"].is_boolean(),
                "record with lambda lacks the in_vlambda flag");
        rec.in_vlambda = flags["in_vlambda"].get<bool>();
    }
    return rec;
}

std::string dump_records(const std::vector<PolytopeRecord>& records) {
    nlohmann::ordered_json j;
    j["schema"] = "foldmv/1";
    auto arr = nlohmann::ordered_json::array();
    for (const PolytopeRecord& rec : records) arr.push_back(record_to_json(rec));
    j["records"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<PolytopeRecord> parse_records(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    require(j.is_object() && j.contains("schema") && j["schema"] == "foldmv/1",
            "unsupported record schema");
    require(j.contains("records") && j["records"].is_array(), "record file has no records array");
    std::vector<PolytopeRecord> records;
    for (const auto& r : j["records"]) records.push_back(record_from_json(r));
    return records;
}

}  // namespace foldmv
