#pragma once

// JSON forms of bodies, measures and reports. Every emitted document carries
// "schema": 1. Malformed documents raise InvalidInput.

#include "logmink/cylinder.hpp"
#include "logmink/error.hpp"
#include "logmink/geometry.hpp"
#include "logmink/inequality.hpp"
#include "logmink/measures.hpp"
#include "logmink/solver.hpp"

#include <json.hpp>

#include <string>

namespace logmink {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// {"dim": n, "vertices": [[...], ...]} or
/// {"dim": n, "halfspaces": [{"normal": [...], "support": v}, ...]}.
/// Halfspace normals are normalized and their supports rescaled; the body is
/// the Wulff shape of the even closure.
ConvexBody body_from_json(const Json& j);
/// Vertices plus facets (normal, support, area) and the volume.
Json body_to_json(const ConvexBody& k);

struct LoadedMeasure {
  DiscreteMeasure measure;
  /// Asymmetry of the input before symmetrization.
  double asymmetry = 0.0;
  /// Set when the asymmetry exceeded 1e-6 relative.
  bool warned = false;
};

/// {"dim": n, "kind": "cone-volume" | "surface" | "generic", "atoms":
/// [{"u": [...], "w": v}, ...]}. Directions are normalized and the result is
/// symmetrized.
LoadedMeasure measure_from_json(const Json& j);
Json measure_to_json(const DiscreteMeasure& mu);

Json concentration_to_json(const ConcentrationReport& r);
Json verify_report_to_json(const VerifyReport& r);
/// Includes the final body, support values and the iteration trace.
Json solver_result_to_json(const SolverResult& r, const ExtremumProblem& problem);
/// Process exit status for a verification: 3 for a violation in a proven
/// regime, 0 otherwise (conjectural runs only report).
int verify_exit_code(const VerifyReport& r);

Json split_to_json(const std::optional<CylinderSplit>& split);
Json error_to_json(ErrorCode code, const std::string& message);

/// Reads and parses a JSON file; InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace logmink
