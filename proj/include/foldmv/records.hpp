#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "foldmv/folding.hpp"
#include "foldmv/polytope.hpp"

namespace foldmv {

// Serializable snapshot of one MV polytope. Words are stored 0-based in
// memory and converted to 1-based at the JSON boundary.
struct PolytopeRecord {
    std::string type;
    int rank = 0;
    bool has_sigma = false;
    std::string sigma;
    ReducedWord base_word;
    Vec datum;
    Vec coweight;
    bool has_lambda = false;
    Vec lambda;
    std::vector<std::pair<ReducedWord, Vec>> vertices;
    bool sigma_invariant = false;
    bool in_vlambda = false;

    bool operator==(const PolytopeRecord&) const = default;
};

PolytopeRecord make_record(const RootDatum& rd, const LusztigDatum& datum,
                           const FoldingData* folding = nullptr, const Vec* lambda = nullptr);

nlohmann::ordered_json record_to_json(const PolytopeRecord& rec);
PolytopeRecord record_from_json(const nlohmann::json& j);

std::string dump_records(const std::vector<PolytopeRecord>& records);
std::vector<PolytopeRecord> parse_records(const std::string& text);

}  // namespace foldmv
