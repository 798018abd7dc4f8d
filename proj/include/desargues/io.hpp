#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "desargues/boolean_lattice.hpp"
#include "desargues/desargues.hpp"
#include "desargues/measurement.hpp"
#include "desargues/subspace.hpp"

// JSON encodings for every value crossing the library boundary. Readers throw
// ParseError (or the domain error of the value being built) on bad input.
namespace desargues::io {

using nlohmann::json;

/// {"re": "p/q", "im": "p/q"}. Readers also accept a bare string or integer
/// for a real entry and integer strings such as "2" for either part.
json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);

json to_json(const ExactVector& v);
ExactVector vector_from_json(const json& j);

/// Row-major nested arrays.
json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

/// {"d": d, "vectors": [...]} with the canonical basis columns.
json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

/// A one-dimensional subspace as the spanning vector with leading entry 1.
json ray_to_json(const Subspace& point);

double round4(double x);

/// Exact entries plus a float rendering rounded to four decimals.
json to_json(const Projector& p);

struct BooleanConfig {
  std::vector<std::string> labels;  // index -> label, sorted
  boolean::DesarguesInput input;
};

/// {"ground": [labels], "A": [[...],[...],[...]], "Aprime": [...]}.
BooleanConfig boolean_config_from_json(const json& j);
json to_json(const BooleanConfig& c);
json subset_to_json(const boolean::Subset& s, const std::vector<std::string>& labels);
/// Antecedent, consequent, circuit outputs and all intermediate subsets.
json boolean_check_report(const BooleanConfig& c);
/// Counterexamples use labels "1".."n".
json to_json(const boolean::ScanReport& r);
std::vector<std::string> default_labels(unsigned n);

/// {"d": d, "triangle": [[...] x3], "triangle_prime": [[...] x3]}.
DesarguesConfig config_from_json(const json& j);
json to_json(const DesarguesConfig& c);
json to_json(const ConfigReport& r);

/// {"d": d, "amplitudes": [[re, im], ...]}, renormalized on load.
StateVector state_from_json(const json& j);
json to_json(const StateVector& s);
json to_json(const MeasurementStep& step);
json to_json(const ExperimentPair& e);

/// Reads and parses a file; throws ParseError if unreadable or malformed.
json read_json_file(const std::string& path);

}  // namespace desargues::io
