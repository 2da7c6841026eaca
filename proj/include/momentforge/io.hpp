#pragma once

#include <string>

#include "momentforge/constructions.hpp"
#include "momentforge/numeric_verify.hpp"
#include "momentforge/reeb.hpp"

namespace momentforge {

// Line-oriented input document. Circle data:
//
//   circle <id> center <p/q> <p/q> radius <p/q> orientation <inside|outside>
//   seed <p/q> <p/q>
//   groups <g per circle>
//   dims <dim per group>
//
// General hypersurface data replaces the circle lines with
//   nvars <n>
//   poly <canonical polynomial text>
// and an n-entry seed.
MomentData parse_input(const std::string& text);
std::string serialize_input(const MomentData& d);

std::string manifest_json(const MomentData& d);
std::string system_text(const MomentData& d);

std::string reeb_json(const MomentData& d, const ReebGraph& g);
std::string reeb_dot(const ReebGraph& g);
std::string validation_json(const ValidationReport& arrangement, const ValidationReport& maps);
std::string fiber_table_text(const MomentData& d);
std::string fiber_table_json(const MomentData& d);
std::string graph_text(const MultiGraph& g);

// Deterministic figure: shaded region, stroked circles, black event dots,
// and the Reeb graph drawn beneath at matching abscissae.
std::string render_svg(const MomentData& d, const ReebGraph* graph);

}  // namespace momentforge
