#pragma once

#include <memory>

#include <json.hpp>

#include "arcs/bipoly.hpp"
#include "arcs/curvefinder.hpp"
#include "arcs/search.hpp"

namespace arcs {

using json = nlohmann::ordered_json;

// Field element wire form: h coefficients, constant term first. A bare
// integer is accepted on input as shorthand for a prime-subfield element.
json fe_to_json(const Field& F, Fe a);
Fe fe_from_json(const Field& F, const json& j);

json point_to_json(const Field& F, const Point& x);
Point point_from_json(const Field& F, const json& j);

/// {"p":…, "h":…, "modulus":[…], "points":[[fe,fe,fe],…]}
json arc_to_json(const Arc& A);
json points_payload(const Field& F, const std::vector<Point>& pts);

/// Field described by an arc document's header. The field must outlive every
/// object built over it, hence the shared handle.
std::shared_ptr<Field> field_from_json(const json& j);
std::vector<Point> points_from_json(const Field& F, const json& j);

/// {"degree":r, "terms":[{"e":[i,j,k],"c":fe},…]} in ascending graded-lex.
json hompoly_to_json(const HomPoly& f);
HomPoly hompoly_from_json(const Field& F, const json& j);

/// {"t":…, "terms":[{"ex":[…],"ey":[…],"c":fe},…]} sorted by (ex, ey).
json ttform_to_json(const BiPoly& F);
BiPoly ttform_from_json(const Field& F, const json& j);

json certificate_to_json(const Arc& A, const CurveCertificate& cert);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace arcs
