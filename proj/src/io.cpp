#include "desargues/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "desargues/errors.hpp"

namespace desargues::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key, std::size_t expected_size = 0) {
  const json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  if (expected_size != 0 && a.size() != expected_size) {
    throw ParseError(std::string("field '") + key + "' must have " + std::to_string(expected_size) + " entries");
  }
  return a;
}

std::size_t dim_field(const json& j) {
  const json& d = field(j, "d");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw ParseError("field 'd' must be a positive integer");
  return d.get<std::size_t>();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json float_pair(ComplexFloat z) { return json::array({z.real(), z.imag()}); }

std::array<ExactVector, 3> triangle_from_json(const json& j, const char* key, std::size_t d) {
  const json& a = array_field(j, key, 3);
  std::array<ExactVector, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = vector_from_json(a[i]);
    if (out[i].size() != d) {
      throw ParseError(std::string(key) + " vertex " + std::to_string(i + 1) + " has length " +
                       std::to_string(out[i].size()) + ", expected " + std::to_string(d));
    }
  }
  return out;
}

}  // namespace

json to_json(const GaussianRational& z) { return {{"re", format_rational(z.re())}, {"im", format_rational(z.im())}}; }

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_object()) {
    Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    if (!j.contains("re") && !j.contains("im")) throw ParseError("Gaussian rational needs 're' or 'im'");
    return {re, im};
  }
  return {rational_from_json(j), 0};
}

json to_json(const ExactVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

ExactVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  ExactVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(gaussian_from_json(e));
  return v;
}

json to_json(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    ExactVector row = vector_from_json(j[i]);
    if (row.size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

json to_json(const Subspace& s) {
  json vectors = json::array();
  for (const auto& v : s.basis_vectors()) vectors.push_back(to_json(v));
  return {{"d", s.ambient_dim()}, {"dim", s.dim()}, {"vectors", vectors}};
}

Subspace subspace_from_json(const json& j) {
  const std::size_t d = dim_field(j);
  std::vector<ExactVector> vs;
  for (const auto& v : array_field(j, "vectors")) vs.push_back(vector_from_json(v));
  for (const auto& v : vs) {
    if (v.size() != d) throw ParseError("subspace vector length differs from d");
  }
  return Subspace::from_vectors(vs, d);
}

json ray_to_json(const Subspace& point) {
  if (point.dim() != 1) throw PreconditionError("ray_to_json expects a one-dimensional subspace");
  return to_json(normalize_leading(point.basis().column(0)));
}

double round4(double x) {
  const double r = std::round(x * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;  // no "-0.0" in reports
}

json to_json(const Projector& p) {
  const FloatMatrix f = to_float(p.matrix);
  json rendered = json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < f.cols(); ++k) row.push_back(json::array({round4(f(i, k).real()), round4(f(i, k).imag())}));
    rendered.push_back(std::move(row));
  }
  return {{"d", p.ambient_dim}, {"dim", p.source_dim}, {"exact", to_json(p.matrix)}, {"float", rendered}};
}

std::vector<std::string> default_labels(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

BooleanConfig boolean_config_from_json(const json& j) {
  const json& ground = array_field(j, "ground");
  std::vector<std::string> labels;
  for (const auto& g : ground) {
    if (!g.is_string()) throw ParseError("ground labels must be strings");
    labels.push_back(g.get<std::string>());
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) throw ParseError("duplicate ground label");
  if (labels.empty() || labels.size() > boolean::kMaxGroundSize) {
    throw ParseError("ground set must have 1.." + std::to_string(boolean::kMaxGroundSize) + " labels");
  }
  std::map<std::string, unsigned> index;
  for (unsigned i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  const boolean::GroundSet gs(static_cast<unsigned>(labels.size()));

  auto read_triplet = [&](const char* key) {
    const json& a = array_field(j, key, 3);
    std::array<boolean::Subset, 3> out{boolean::Subset::empty(gs), boolean::Subset::empty(gs),
                                       boolean::Subset::empty(gs)};
    for (std::size_t t = 0; t < 3; ++t) {
      if (!a[t].is_array()) throw ParseError(std::string(key) + " entries must be arrays of labels");
      std::uint32_t bits = 0;
      for (const auto& e : a[t]) {
        if (!e.is_string() || !index.contains(e.get<std::string>())) {
          throw ParseError(std::string("unknown label ") + e.dump() + " in " + key);
        }
        bits |= std::uint32_t{1} << index.at(e.get<std::string>());
      }
      out[t] = boolean::Subset(gs, bits);
    }
    return out;
  };
  BooleanConfig c{labels, {gs, read_triplet("A"), read_triplet("Aprime")}};
  boolean::validate(c.input);
  return c;
}

json subset_to_json(const boolean::Subset& s, const std::vector<std::string>& labels) {
  json out = json::array();
  for (unsigned i = 0; i < s.ground().size(); ++i)
    if (s.contains(i)) out.push_back(labels.at(i));
  return out;
}

json to_json(const BooleanConfig& c) {
  json a = json::array(), ap = json::array();
  for (int t = 0; t < 3; ++t) {
    a.push_back(subset_to_json(c.input.a[t], c.labels));
    ap.push_back(subset_to_json(c.input.a_prime[t], c.labels));
  }
  return {{"ground", c.labels}, {"A", a}, {"Aprime", ap}};
}

json boolean_check_report(const BooleanConfig& c) {
  const boolean::Derived d = boolean::derive(c.input);
  const bool ante = boolean::antecedent(d);
  const bool cons = boolean::consequent(d);
  auto triple = [&](const std::array<boolean::Subset, 3>& t) {
    return json::array({subset_to_json(t[0], c.labels), subset_to_json(t[1], c.labels), subset_to_json(t[2], c.labels)});
  };
  const boolean::Subset fig2 = boolean::circuit_antecedent(c.input);
  const boolean::Subset fig3 = boolean::circuit_consequent(c.input);
  return {
      {"antecedent", ante},
      {"consequent", cons},
      {"implication_holds", !ante || cons},
      {"C", triple(d.cross_joins)},
      {"C3", subset_to_json(d.cross_joins[2], c.labels)},
      {"frakB", triple(d.cross_points)},
      {"frakB3", subset_to_json(d.cross_points[2], c.labels)},
      {"B", triple(d.sides)},
      {"Bprime", triple(d.sides_prime)},
      {"circuit_antecedent_output", subset_to_json(fig2, c.labels)},
      {"circuit_antecedent_equals_C3", fig2 == d.cross_joins[2]},
      {"circuit_consequent_output", subset_to_json(fig3, c.labels)},
      {"circuit_consequent_equals_frakB3", fig3 == d.cross_points[2]},
  };
}

json to_json(const boolean::ScanReport& r) {
  json counter = nullptr;
  if (r.converse_counterexample) {
    counter = to_json(BooleanConfig{default_labels(r.ground_size), *r.converse_counterexample});
  }
  return {{"n", r.ground_size},
          {"raw_tuples", r.raw_tuples},
          {"total", r.total},
          {"antecedent_true", r.antecedent_true},
          {"consequent_true", r.consequent_true},
          {"violations", r.violations},
          {"converse_counterexample", counter}};
}

DesarguesConfig config_from_json(const json& j) {
  const std::size_t d = dim_field(j);
  return DesarguesConfig::from_vertices(d, triangle_from_json(j, "triangle", d),
                                        triangle_from_json(j, "triangle_prime", d));
}

json to_json(const DesarguesConfig& c) {
  json t = json::array(), tp = json::array();
  for (int i = 0; i < 3; ++i) {
    t.push_back(to_json(c.vertices[i]));
    tp.push_back(to_json(c.vertices_prime[i]));
  }
  return {{"d", c.d}, {"triangle", t}, {"triangle_prime", tp}};
}

json to_json(const ConfigReport& r) {
  json axis = nullptr;
  if (r.axis) {
    axis = json::array();
    for (const auto& v : r.axis->basis_vectors()) axis.push_back(to_json(normalize_leading(v)));
  }
  return {{"concurrent", r.concurrent},
          {"collinear", r.collinear},
          {"equivalence_ok", r.equivalence_ok},
          {"absorption_lhs", r.absorption_lhs},
          {"absorption_rhs", r.absorption_rhs},
          {"commute_lhs", r.commute_lhs},
          {"commute_rhs", r.commute_rhs},
          {"center", r.center ? ray_to_json(*r.center) : json(nullptr)},
          {"axis", axis}};
}

StateVector state_from_json(const json& j) {
  const std::size_t d = dim_field(j);
  const json& amps = array_field(j, "amplitudes", d);
  FloatVector v;
  for (const auto& a : amps) {
    if (a.is_number()) {
      v.emplace_back(a.get<double>(), 0.0);
    } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
      v.emplace_back(a[0].get<double>(), a[1].get<double>());
    } else {
      throw ParseError("amplitude must be [re, im], got " + a.dump());
    }
  }
  return StateVector::from_input(std::move(v));
}

json to_json(const StateVector& s) {
  json amps = json::array();
  for (const auto& z : s.amplitudes()) amps.push_back(float_pair(z));
  return {{"d", s.ambient_dim()}, {"amplitudes", amps}};
}

json to_json(const MeasurementStep& step) {
  json rounded = json::array();
  for (const auto& z : step.post_state.amplitudes()) rounded.push_back(json::array({round4(z.real()), round4(z.imag())}));
  return {{"projector", step.projector_label},
          {"probability", round4(step.probability)},
          {"probability_full", step.probability},
          {"post_state", rounded},
          {"post_state_full", to_json(step.post_state).at("amplitudes")}};
}

json to_json(const ExperimentPair& e) {
  return {{"p1", round4(e.exp1.first.probability)},
          {"q1", round4(e.exp1.second.probability)},
          {"p2", round4(e.exp2.first.probability)},
          {"q2", round4(e.exp2.second.probability)},
          {"unchanged1", e.unchanged1},
          {"unchanged2", e.unchanged2},
          {"exp1", json::array({to_json(e.exp1.first), to_json(e.exp1.second)})},
          {"exp2", json::array({to_json(e.exp2.first), to_json(e.exp2.second)})}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace desargues::io
