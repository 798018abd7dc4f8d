#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "desargues/errors.hpp"
#include "desargues/io.hpp"
#include "desargues/rng.hpp"

using namespace desargues;
using io::json;

TEST_CASE("Gaussian rational encoding") {
  const GaussianRational z(Rational(-3, 4), Rational(2));
  CHECK(io::to_json(z) == json{{"re", "-3/4"}, {"im", "2"}});
  CHECK(io::gaussian_from_json(json{{"re", "2"}, {"im", "-6/8"}}) == GaussianRational(2, Rational(-3, 4)));
  CHECK(io::gaussian_from_json(json("5/10")) == GaussianRational(Rational(1, 2)));
  CHECK(io::gaussian_from_json(json(7)) == GaussianRational(7));
  CHECK(io::gaussian_from_json(json{{"im", "1"}}) == GaussianRational::i());
  CHECK_THROWS_AS(io::gaussian_from_json(json(0.5)), ParseError);
  CHECK_THROWS_AS(io::gaussian_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(io::gaussian_from_json(json{{"re", "1/0"}}), ParseError);
}

TEST_CASE("configuration and matrix encodings survive a round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DesarguesConfig c = generate_generic(seed, 4);
    const DesarguesConfig back = io::config_from_json(json::parse(io::to_json(c).dump()));
    CHECK(back.vertices == c.vertices);
    CHECK(back.vertices_prime == c.vertices_prime);
    CHECK(back.plane == c.plane);
  }
  Rng rng(1);
  const Subspace s = random_subspace(5, 2, rng, 4);
  CHECK(io::subspace_from_json(io::to_json(s)) == s);
  CHECK(io::matrix_from_json(io::to_json(projector(s).matrix)) == projector(s).matrix);
}

TEST_CASE("configuration parsing errors") {
  json c = io::to_json(generate_generic(1, 3));
  json missing = c;
  missing.erase("triangle_prime");
  CHECK_THROWS_AS(io::config_from_json(missing), ParseError);
  json short_vertex = c;
  short_vertex["triangle"][0].erase(0);
  CHECK_THROWS_AS(io::config_from_json(short_vertex), ParseError);
  json bad_d = c;
  bad_d["d"] = 0;
  CHECK_THROWS_AS(io::config_from_json(bad_d), ParseError);
}

TEST_CASE("projector report carries a four-decimal rendering") {
  const ExactVector w{0, GaussianRational(2, -1), 0, GaussianRational(4, -2), 0};
  const json j = io::to_json(projector(Subspace::from_vectors(std::span(&w, 1), 5)));
  CHECK(j["float"][1][1] == json::array({0.2, 0.0}));
  CHECK(j["float"][3][1] == json::array({0.4, 0.0}));
  CHECK(j["exact"][3][3] == json{{"re", "4/5"}, {"im", "0"}});
  CHECK(io::round4(-0.00001) == 0.0);
  CHECK(io::round4(9.0 / 14.0) == 0.6429);
}

TEST_CASE("Boolean configuration labels") {
  const json j = {{"ground", {"b", "a", "c"}}, {"A", {{"a"}, {"b"}, {"c"}}}, {"Aprime", {{"a", "c"}, {"b", "c"}, json::array()}}};
  const io::BooleanConfig c = io::boolean_config_from_json(j);
  CHECK(c.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(c.input.a[2].bits() == 0b100);
  CHECK(c.input.a_prime[0].bits() == 0b101);
  CHECK(io::to_json(c)["ground"] == json::array({"a", "b", "c"}));

  json unknown = j;
  unknown["A"][0] = {"z"};
  CHECK_THROWS_AS(io::boolean_config_from_json(unknown), ParseError);
  json dup = j;
  dup["ground"] = {"a", "a", "c"};
  CHECK_THROWS_AS(io::boolean_config_from_json(dup), ParseError);
  json repeated = j;
  repeated["A"][1] = {"a"};
  CHECK_THROWS_AS(io::boolean_config_from_json(repeated), PreconditionError);
}

TEST_CASE("state encoding") {
  const StateVector s = io::state_from_json(
      json{{"d", 5}, {"amplitudes", {{0.2294, 0}, {0.4588, 0}, {0.2294, 0}, {0.6882, 0}, {0.4588, 0}}}});
  CHECK(s.ambient_dim() == 5);
  CHECK_THROWS_AS(io::state_from_json(json{{"d", 2}, {"amplitudes", {{1, 0}, {1, 0}}}}), PreconditionError);
  CHECK_THROWS_AS(io::state_from_json(json{{"d", 2}, {"amplitudes", {{1, 0}}}}), ParseError);
  CHECK_THROWS_AS(io::state_from_json(json{{"d", 1}, {"amplitudes", {"x"}}}), ParseError);
}
