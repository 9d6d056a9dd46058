#pragma once

// Problem files and JSON reports.
//
// A problem file is a JSON object:
//   {"m": 3, "n": 2, "field": {"kind": "rational"} | {"kind": "prime", "p": 2},
//    "d": [1, 2],
//    "maps": [{"type": "identity"} | {"type": "zero"}
//             | {"type": "projection", "zero_indices": [1]}
//             | {"type": "matrix", "entries": [["1", "-3/7", ...], ...]}]}
// with n - 1 maps and 1-based projection indices. "field" defaults to rational.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lindeg/classifier.hpp"
#include "lindeg/enumerator.hpp"

namespace lindeg {

struct ProblemFile {
  DimVector d;
  RepMatrices rep;
  /// Set when every map was given as identity, zero or projection.
  std::optional<ProjectionTuple> projections;
};

/// Throws ValidationError with a message naming the offending field.
ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem(const nlohmann::json& root);

/// The tuple (pi_{J_1}, ...) when every map is a 0/1 diagonal matrix.
std::optional<ProjectionTuple> as_projection_tuple(const RepMatrices& rep);

nlohmann::json to_json(const Decomposition& dec);
nlohmann::json to_json(const RankSequence& r);
nlohmann::json to_json(const SingularInfo& info);
nlohmann::json to_json(const DegenerationReport& report);
nlohmann::json to_json(const Census& census);
nlohmann::json to_json(const CoordinatePoint& point);

/// Plain-text rendering of a report, one "key: value" line per field.
std::string to_table(const DegenerationReport& report);

}  // namespace lindeg
