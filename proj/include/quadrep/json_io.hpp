#pragma once

#include <json.hpp>

#include "quadrep/witness.hpp"

namespace quadrep {

using json = nlohmann::ordered_json;  // insertion order keeps output canonical

json to_json(const Term& t);
json to_json(const RepProblem& p);
json to_json(const IntervalSpec& spec);
json to_json(const WitnessTrace& tr);

Term term_from_json(const json& j);
RepProblem problem_from_json(const json& j);

/// Minimal re-verification payload: problem + tuple + n (accepts full traces).
struct CheckPayload {
    RepProblem problem;
    std::array<i64, 4> tuple;
    i64 n;
};
CheckPayload check_payload_from_json(const json& j);

}  // namespace quadrep
