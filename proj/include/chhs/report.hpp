#pragma once

#include <string>
#include <vector>

#include "chhs/hhs_constants.hpp"
#include "chhs/instance.hpp"
#include "chhs/thm_a.hpp"
#include "chhs/verifier.hpp"
#include "json.hpp"

namespace chhs {

using Json = nlohmann::json;

/// Conventions every report records.
Json report_header(const std::string& command);

Json dist_json(Dist d);
Json rational_json(const Rational& r);
Json set_json(const FlagComplex& x, const VertexSet& s);
Json class_json(const Instance& inst, std::size_t cls);

Json inspect_json(const Instance& inst);
Json verification_json(const Instance& inst, const VerificationReport& r);
Json thm_a_json(const Instance& inst, const ThmAReport& r);
Json action_json(const Instance& inst, const ActionReport& r);
Json projections_json(const ProjectionSystem& ps);
Json constants_json(const HHSConstants& c);
Json fits_json(const std::vector<DistanceFormulaFit>& fits);
Json realization_json(const ProjectionSystem& ps, const Realization& r);

/// json: indented document; text: one "path: value" line per leaf.
std::string render(const Json& doc, const std::string& format);

}  // namespace chhs
