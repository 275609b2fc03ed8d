#pragma once

#include <string>

#include <json.hpp>

#include "ftcat/algebra.hpp"
#include "ftcat/functors.hpp"
#include "ftcat/nimrep.hpp"
#include "ftcat/tensorcat.hpp"

namespace ftcat {

using Json = nlohmann::ordered_json;

// Parse errors become InvalidInput carrying the byte position.
Json parse_json(const std::string& text);
Json load_json(const std::string& path);
std::string read_file(const std::string& path);

// {"labels", "unit", "star", "fusion": {"i|j": {"k": n}}}
Json ring_to_json(const BasedRing& r);
BasedRing ring_from_json(const Json& j);
// The ring schema plus "cartan", "characteristic", "socle", "pivotal_trace_exists".
Json category_to_json(const TensorCatData& c);
TensorCatData category_from_json(const Json& j);

// {"source", "target", "A", "B", "image_cartan", "image_semisimple"}; the
// categories are inline objects, catalog names or paths relative to base_dir.
FunctorData functor_from_json(const Json& j, const std::string& base_dir);
TensorCatData category_reference(const Json& j, const std::string& base_dir);

Json module_to_json(const ZPlusModule& m);
ZPlusModule module_from_json(const Json& j);

// {"minpoly", "interval", "decimal"}
Json real_to_json(const RealAlgebraic& a, int digits = 6);
Json findings_to_json(const Report& r);

/// Algebra specs: either a presentation
///   {"field", "generators", "relations": [{"lhs", "rhs": [[coeff, word], ...]}],
///    "actions", "derivations", "compat", "anticommuting", "parity",
///    "filtration_bound", "dimension_bound"}
/// or a builder call {"builder": "taft_A" | "group_quotient" |
/// "clifford_smash" | "supergroup_internal_hom", ...}.
EquivariantAlgebra algebra_from_json(const Json& j);
Presentation presentation_from_json(const Json& j);
Json scalar_vector_to_json(const ExactField& f, const SVector& v);

}  // namespace ftcat
