#include "desargues/paper_example.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "desargues/errors.hpp"
#include "desargues/tolerances.hpp"

namespace desargues::example {

namespace {

using G = GaussianRational;

G gi(long re, long im = 0) { return G(Rational(re), Rational(im)); }

FloatMatrix table(std::initializer_list<std::initializer_list<ComplexFloat>> rows) { return FloatMatrix(rows); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string describe(const ExactVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

Subspace ray(const ExactVector& v) { return Subspace::from_vectors(std::span(&v, 1), v.size()); }

double max_table_deviation(const ExactMatrix& exact, const FloatMatrix& printed) {
  const FloatMatrix f = to_float(exact);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      worst = std::max(worst, std::abs(f(i, j).real() - printed(i, j).real()));
      worst = std::max(worst, std::abs(f(i, j).imag() - printed(i, j).imag()));
    }
  return worst;
}

}  // namespace

ExampleData embedded() {
  ExampleData d;
  d.vertices = {ExactVector{0, 1, gi(1, 1), 2, 0}, ExactVector{0, 1, 0, 2, 0}, ExactVector{0, 1, gi(1, 1), 0, 0}};
  d.vertices_prime = {ExactVector{0, 1, 3, 2, 0}, ExactVector{0, gi(1, -1), gi(1, 1), 2, 0},
                      ExactVector{0, gi(1, -1), gi(-1, -1), gi(4, -2), 0}};
  d.center = {0, gi(2, -1), 0, gi(4, -2), 0};
  d.cross_points = {ExactVector{0, gi(1, -1), gi(-1, -1), gi(4, -2), 0}, ExactVector{0, 1, gi(1, 1), 3, 0},
                    ExactVector{0, 1, 3, 2, 0}};
  d.center_coefficients = {{{gi(3), gi(-1, -1)}, {gi(2, -1), gi(0)}, {gi(1), gi(1)}}};

  const ComplexFloat o = 0.0;
  d.tables = {{
      {"Pi(L3)", table({{o, o, o, o, o},
                        {o, 0.4286, {0.2857, -0.2857}, 0.2857, o},
                        {o, {0.2857, 0.2857}, 0.7143, {-0.1429, -0.1429}, o},
                        {o, 0.2857, {-0.1429, 0.1429}, 0.8571, o},
                        {o, o, o, o, o}})},
      {"Pi(L1 meet L2)", table({{o, o, o, o, o},
                                {o, 0.2, o, 0.4, o},
                                {o, o, o, o, o},
                                {o, 0.4, o, 0.8, o},
                                {o, o, o, o, o}})},
      {"Pi(c3)", table({{o, o, o, o, o},
                        {o, 0.0714, 0.2143, 0.1429, o},
                        {o, 0.2143, 0.6429, 0.4286, o},
                        {o, 0.1429, 0.4286, 0.2857, o},
                        {o, o, o, o, o}})},
      {"Pi(c1 join c2)", table({{o, o, o, o, o},
                                {o, 0.1017, {0.1186, 0.0339}, {0.2712, -0.0508}, o},
                                {o, {0.1186, -0.0339}, 0.9831, {-0.0339, 0.0169}, o},
                                {o, {0.2712, 0.0508}, {-0.0339, -0.0169}, 0.9153, o},
                                {o, o, o, o, o}})},
  }};
  d.state = {0.2294, 0.4588, 0.2294, 0.6882, 0.4588};
  d.p1 = 0.673;
  d.p2 = 0.454;
  d.collapsed_exp1 = {0.0, 0.4472, 0.0, 0.8944, 0.0};
  d.collapsed_exp2 = {0.0, 0.2673, 0.8018, 0.5345, 0.0};
  return d;
}

DesarguesConfig config(const ExampleData& data) {
  return DesarguesConfig::from_vertices(data.vertices[0].size(), data.vertices, data.vertices_prime);
}

Result run(const ExampleData& data) {
  Result result;
  auto add = [&](std::string name, bool pass, std::string detail) {
    result.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const DesarguesConfig c = config(data);
  const std::size_t d = c.d;

  const std::size_t rank_h = rank(ExactMatrix::from_columns(std::span(data.vertices), d));
  const std::size_t rank_hp = rank(ExactMatrix::from_columns(std::span(data.vertices_prime), d));
  add("rank(h1,h2,h3) = 3", rank_h == 3, "rank " + std::to_string(rank_h));
  add("rank(h'1,h'2,h'3) = 3", rank_hp == 3, "rank " + std::to_string(rank_hp));

  const Validation v = validate_config(c);
  add("coplanar triangles", v.ok, v.ok ? "common plane of dimension 3" : v.reason);
  if (!v.ok) return result;

  std::optional<DerivedConfig> maybe_derived;
  try {
    maybe_derived = derive_config(c);
  } catch (const DegenerateConfig& e) {
    add("non-degenerate configuration", false, e.what());
    return result;
  }
  const DerivedConfig& derived = *maybe_derived;

  const auto center = concurrent(derived);
  add("cross-lines concurrent at w", center && *center == ray(data.center),
      center ? "w ray " + describe(normalize_leading(center->basis().column(0))) : "no common point");

  for (int i = 0; i < 3; ++i) {
    const auto coeffs = solve_in_span(hstack(ExactMatrix::from_columns(std::span(&data.vertices[i], 1), d),
                                             ExactMatrix::from_columns(std::span(&data.vertices_prime[i], 1), d)),
                                      data.center);
    const bool ok = coeffs && (*coeffs)[0] == data.center_coefficients[i][0] &&
                    (*coeffs)[1] == data.center_coefficients[i][1];
    add("w = a" + std::to_string(i + 1) + " h" + std::to_string(i + 1) + " + b" + std::to_string(i + 1) + " h'" +
            std::to_string(i + 1),
        ok, coeffs ? "a = " + (*coeffs)[0].to_string() + ", b = " + (*coeffs)[1].to_string() : "w not on line");
  }

  for (int k = 0; k < 3; ++k) {
    const bool ok = derived.cross_points[k] == ray(data.cross_points[k]);
    add("cross-point " + std::to_string(k + 1) + " ray", ok,
        describe(normalize_leading(derived.cross_points[k].basis().column(0))));
  }

  const std::vector<ExactVector> cps{derived.cross_points[0].basis().column(0),
                                     derived.cross_points[1].basis().column(0),
                                     derived.cross_points[2].basis().column(0)};
  const std::size_t rank_cp = rank(ExactMatrix::from_columns(std::span(cps), d));
  add("rank(c1,c2,c3) = 2", rank_cp == 2 && collinear(derived).has_value(), "rank " + std::to_string(rank_cp));

  const ExperimentProjectors p = experiment_projectors(derived);
  const std::array<const Projector*, 4> computed = {&p.third_line, &p.cross_meet, &p.third_point, &p.point_join};
  for (int t = 0; t < 4; ++t) {
    const double dev = max_table_deviation(computed[t]->matrix, data.tables[t].entries);
    add(data.tables[t].name + " table", dev <= tol::kProjectorTable, "max deviation " + fmt(dev));
  }

  const ConfigReport report = desargues_check(c);
  add("absorption Pi(L3) Pi(L1 meet L2) = Pi(L1 meet L2)", report.absorption_lhs, "exact");
  add("absorption Pi(c1 join c2) Pi(c3) = Pi(c3)", report.absorption_rhs, "exact");

  ExperimentPair e;
  try {
    e = run_experiment_pair(ExperimentSetup::from_projectors(p), StateVector::from_input(data.state));
  } catch (const std::exception& ex) {
    add("experiment", false, ex.what());
    return result;
  }
  const double p1 = e.exp1.first.probability, q1 = e.exp1.second.probability;
  const double p2 = e.exp2.first.probability, q2 = e.exp2.second.probability;
  add("p1", std::abs(p1 - data.p1) <= tol::kPrintedDecimal, "p1 = " + fmt(p1));
  add("p2", std::abs(p2 - data.p2) <= tol::kPrintedDecimal, "p2 = " + fmt(p2));
  add("q1 = 1", std::abs(q1 - 1.0) <= tol::kRayFidelity, "q1 = " + fmt(q1));
  add("q2 = 1", std::abs(q2 - 1.0) <= tol::kRayFidelity, "q2 = " + fmt(q2));

  const StateVector printed1 = StateVector::normalized(data.collapsed_exp1);
  const StateVector printed2 = StateVector::normalized(data.collapsed_exp2);
  const double f1 = fidelity(e.exp1.second.post_state, printed1);
  const double f2 = fidelity(e.exp2.second.post_state, printed2);
  add("|s1> = |s2> matches printed ray", e.unchanged1 && f1 >= 1.0 - tol::kPrintedStateFidelity,
      "fidelity " + fmt(f1));
  add("|t1> = |t2> matches printed ray", e.unchanged2 && f2 >= 1.0 - tol::kPrintedStateFidelity,
      "fidelity " + fmt(f2));

  result.all_pass = true;
  for (const auto& ch : result.checks) result.all_pass = result.all_pass && ch.pass;
  return result;
}

}  // namespace desargues::example
