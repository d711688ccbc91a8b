#pragma once

#include <string>

#include "json.hpp"

#include "degen/central_fiber.hpp"
#include "degen/curve_graph.hpp"
#include "degen/graft.hpp"
#include "degen/obstruction.hpp"

namespace degen::io {

/// Insertion-ordered JSON: emitted documents have a fixed, reproducible field
/// order.
using json = nlohmann::ordered_json;

/// Parses a full JSON document; throws parse_error on malformed text.
json parse_text(const std::string& text);
/// Pretty-prints with 2-space indent and a trailing newline.
std::string dump(const json& j);

// Exact values serialize as strings: plain rationals as "p" or "p/q",
// parameter-dependent ones in the scalar expression grammar.
json scalar_json(const Scalar& s);
Scalar scalar_from(const json& j);

json point_json(const ProjPoint& p);
ProjPoint point_from(const json& j);

/// An edge of the central fiber as its vanishing coordinate pair, e.g.
/// ["z","w"].
json edge_json(int edge);
int edge_from(const json& j);

json quartic_json(const QuarticForm& f);
QuarticForm quartic_from(const json& j);

json prescription_json(const Prescription& p);
Prescription prescription_from(const json& j);

json locus_json(const SingularLocus& loc);
json design_json(const DesignResult& d);

json curve_json(const CurveGraph& c);
CurveGraph curve_from(const json& j);

json validity_json(const ValidityReport& v);
json obstruction_json(const ObstructionReport& r);

json recipe_json(const GraftRecipe& r);
GraftRecipe recipe_from(const json& j);
json graft_json(const GraftResult& g);

}  // namespace degen::io
