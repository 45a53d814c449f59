#ifndef BRACEFORGE_JSON_IO_HPP
#define BRACEFORGE_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "braceforge/cohomology.hpp"
#include "braceforge/gamma.hpp"
#include "braceforge/group.hpp"
#include "braceforge/rota_baxter.hpp"

// Flat JSON schemas, canonical form (sorted keys, no floats, compact
// separators, trailing newline), so identical objects serialize to identical
// bytes. A "group" field may be an inline object or a string path relative to
// the referencing file. SchemaError messages carry the offending JSON path.

namespace braceforge::io {

using nlohmann::json;

// canonical serialization; load(emit(x)) == x byte for byte
std::string canon(const json& j);

json parse(const std::string& text, const std::string& what);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

// {"order": n, "identity": 0, "table": [[...]], "names": [...]?}
json group_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j, const std::string& base_dir = "");

// {"group": ..., "images": [...]}
json map_json(const GroupMap& m);
GroupMap map_from_json(const json& j, const std::string& base_dir = "");
json rb_json(const RotaBaxterOperator& b);

// {"group": ..., "action": [[...], ...]}
json gamma_json(const GammaFunction& gamma);
GammaFunction gamma_from_json(const json& j, const std::string& base_dir = "");

// {"base": ..., "coeff": {"prime": p, "rank": r, "basis": [...]}, "values": [[...]]}
json cocycle_json(const TwoCocycle& theta);
TwoCocycle cocycle_from_json(const json& j, const std::string& base_dir = "");

// {"skew_brace": bool, "witness": [g,h,k]|null}
json brace_report_json(const TripleVerdict& v);

// {"trivial": bool, "sigma": [...]|null, "obstruction_witness": q|null,
//  "witness_row": [g,h]|null, "row_combination": ...|null, "residual": ...|null}
json certificate_json(const CoboundarySolve& solve, const Obstruction* obstruction = nullptr);

GroupPtr load_group(const std::string& path);

// Schema sniffing on the top-level keys: "table" -> group, "action" -> gamma,
// "values" -> cocycle, "images" -> map. SchemaError when nothing matches.
struct LoadedObject {
  enum class Kind { group, map, gamma, cocycle } kind;
  GroupPtr group;
  GroupMap map;
  GammaFunction gamma;
  TwoCocycle cocycle;
};
LoadedObject load_object(const std::string& path);

} // namespace braceforge::io

#endif
