#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistlab/cech.hpp"
#include "twistlab/dd.hpp"
#include "twistlab/representations.hpp"

namespace twistlab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Throws InputError on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);

/// A cover (or an abstract complex), a coefficient group and an optional cochain:
///
///   {"schema_version": 1,
///    "cover": {"points": [ids], "sets": [{"label": l, "points": [ids]}]}   -- or --
///    "complex": {"vertices": [labels], "maximal_simplices": [[labels]]},
///    "group": {"cyclic_orders": [n, ...]},
///    "cochain": {"degree": p, "mode": "nerve" | "pointwise",
///                "values": [{"tuple": [labels], "point": id, "elem": [k, ...]}]}}
///
/// Tuples name cover labels (or complex vertices); missing values are zero. With
/// "alternating": true (nerve mode only) each value is given once per simplex, in any vertex
/// order, and extended to all ordered tuples as an alternating cochain.
struct Problem {
  std::shared_ptr<const Cover> cover;  // null for abstract complexes
  std::shared_ptr<const Nerve> nerve;
  FinAbGroup group;
  std::optional<CechCochain> cochain;
};

Problem parse_problem(const Json& j);
Cover parse_cover(const Json& j);
Nerve parse_complex(const Json& j);
FinAbGroup parse_group(const Json& j);
/// A missing "mode" defaults to nerve; "alternating" defaults to false.
CechCochain parse_cochain(const Json& j, std::shared_ptr<const Nerve> nerve, const FinAbGroup& group);

Json cover_to_json(const Cover& cover);
Json problem_to_json(const Problem& p);
Json to_json(const GroupElem& g);
Json to_json(const Character& tau);
Json to_json(const CechCochain& c);
Json to_json(const UnimodularCochain& nu);
Json to_json(const IdentityReport& r);
Json to_json(const DDReport& r);
Json to_json(const RankOneReport& r);
Json to_json(const HomomorphismReport& r);
Json to_json(const CohomologyGroup& h);
/// Labels carry the character exponents and the point identifier.
Json to_json(const SpectrumTable& t, const SigmaCAlgebra& s);
Json matrix_to_json(const Mat& m);

/// Pipeline problems:
///
///   {"schema_version": 1,
///    "total_points": [ids of Y], "psi": [id of X for each point of Y],
///    "base": <cover of X>, "lifts": [{"label": W label, "points": [ids of Y]}],
///    "group": {...},
///    "extension": {"pullback": <cochain on the nerve of W>}
///               | {"cocycle": [{"pair": [[y1, y2], [y2, y3]], "elem": [...]}]},
///    "section_shift": [{"arrow": [W label, [y1, y2], W label], "elem": [...]}]}
///
/// A pullback extension is built with pullback_extension; a cocycle extension with
/// build_extension. The section of the blown-up extension is the canonical one,
/// multiplied by iota(elem) at every shifted arrow.
struct PipelineProblem {
  PipelineInput input;
  std::vector<std::string> total_ids;
  std::optional<CechCochain> expected;  // the pullback cocycle, when given
};

PipelineProblem parse_pipeline(const Json& j);
Json to_json(const PipelineResult& r);

}  // namespace twistlab
