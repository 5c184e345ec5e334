#pragma once

#include <string>

#include <json.hpp>

#include "ucx/coding.hpp"
#include "ucx/core_linalg.hpp"
#include "ucx/estimator.hpp"
#include "ucx/operator_basis.hpp"
#include "ucx/program_model.hpp"

namespace ucx {

// ordered_json keeps insertion order, so reports are byte-stable.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const PureState& s);

Json program_to_json(const Program& program, const Machine& machine);
Json budget_to_json(const Budget& budget);
Json complexity_report_to_json(const ComplexityReport& report, const Machine& machine);
Json theorem1_to_json(const Theorem1Result& result);
Json relation_to_json(const StateUnitaryRelation& relation, const Machine& machine);
Json kraft_to_json(const KraftSum& kraft);
Json prefix_code_to_json(const PrefixCode& code, const ProbabilityEnsemble& ensemble);

// Canonical rendering: two-space indent plus trailing newline.
std::string render_report(const Json& body);

}  // namespace ucx
