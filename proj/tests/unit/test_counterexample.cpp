#include "meandist/counterexample.hpp"
#include "meandist/errors.hpp"
#include "meandist/mesh.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace meandist;
using std::numbers::pi;

TEST_CASE("dumbbell mesh at L = 5, C = 1/125") {
  const DumbbellParams params(5.0, 1.0 / 125, {32, 64, 16, 64});
  const DumbbellMesh dm = build_dumbbell_mesh(params);
  const auto& m = dm.manifold;
  CHECK(m.vertex_count() == params.vertex_count());
  CHECK(euler_characteristic(m) == 2);
  CHECK(m.total_volume() == doctest::Approx(4 * pi + 5.0 / 125).epsilon(0.02));
  const auto x = m.embedding();
  CHECK(x[dm.p][2] == doctest::Approx(1.0));
  CHECK(x[dm.q][2] == doctest::Approx(-1 + params.eps() - 5.0));
  CHECK(distance_field(m, dm.p)[dm.q] == doctest::Approx(5.0 + pi).epsilon(0.03));
}

TEST_CASE("dumbbell parameters are validated") {
  CHECK_THROWS_AS(DumbbellParams(0.0, 0.01), InputError);
  CHECK_THROWS_AS(DumbbellParams(5.0, 0.0), InputError);
  CHECK_THROWS_AS(DumbbellParams(5.0, 7.0), InputError);
  CHECK_THROWS_AS(DumbbellParams(5.0, 0.01, {2, 8, 8, 8}), InputError);
  CHECK_THROWS_AS(DumbbellParams(5.0, 0.01, {8, 8, 8, 2}), InputError);
}

TEST_CASE("asymptotic sweep with C = 1/L^3") {
  const std::vector<double> lengths{5, 10, 20, 40, 80};
  const auto rows = sweep(lengths, InverseCubeNeck{}, SweepMode::Asymptotic);
  REQUIRE(rows.size() == lengths.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double L = lengths[i];
    const double C = 1 / (L * L * L);
    CHECK(rows[i].neck_circumference == doctest::Approx(C));
    CHECK(rows[i].source == SweepMode::Asymptotic);
    const double expected = (2 * pi * pi + C * (pi * L + L * L / 2)) / ((L + pi) * (4 * pi + L * C));
    CHECK(rows[i].ratio_p == doctest::Approx(expected).epsilon(1e-9));
    CHECK(rows[i].ratio_p + rows[i].ratio_q >= 0.95);
    if (i > 0) {
      CHECK(rows[i].ratio_p < rows[i - 1].ratio_p);
      CHECK(rows[i].ratio_q > rows[i - 1].ratio_q);
    }
  }
  CHECK(rows.back().ratio_p < 0.05);
  CHECK(rows.back().ratio_q > 0.9);
  CHECK(rows.back().ratio_q < 1.0);
}

TEST_CASE("sweep refuses large necks and unordered lengths") {
  CHECK_THROWS_AS(sweep({1, 2}, FixedNeck{0.5}, SweepMode::Asymptotic), PreconditionError);
  CHECK_THROWS_AS(sweep({1, 2}, FixedNeck{0.5}, SweepMode::Mesh), PreconditionError);
  CHECK_THROWS_AS(sweep({10, 5}, InverseCubeNeck{}, SweepMode::Asymptotic), InputError);
  CHECK_THROWS_AS(sweep({}, InverseCubeNeck{}, SweepMode::Asymptotic), InputError);
  CHECK_THROWS_AS(sweep({1, 2}, FixedNeck{7.0}, SweepMode::Asymptotic), InputError);
  CHECK(neck_for(FixedNeck{0.02}, 10) == 0.02);
  CHECK(neck_for(InverseCubeNeck{}, 10) == doctest::Approx(1e-3));
}

TEST_CASE("mesh row at L = 5 tracks the asymptotic row") {
  SweepOptions options;
  options.resolution = {24, 40, 12, 48};
  const auto mesh = sweep({5}, InverseCubeNeck{}, SweepMode::Mesh, options);
  const auto asym = sweep({5}, InverseCubeNeck{}, SweepMode::Asymptotic);
  CHECK(mesh[0].source == SweepMode::Mesh);
  CHECK_FALSE(mesh[0].fell_back);
  CHECK_FALSE(mesh[0].diameter_lower_bound);
  CHECK(mesh[0].ratio_p == doctest::Approx(asym[0].ratio_p).epsilon(0.1));
  CHECK(mesh[0].ratio_p < mesh[0].ratio_q);
}

TEST_CASE("mesh rows over budget fall back to the asymptotic value") {
  SweepOptions options;
  options.vertex_budget = 100;
  const auto rows = sweep({5, 10}, InverseCubeNeck{}, SweepMode::Mesh, options);
  const auto asym = sweep({5, 10}, InverseCubeNeck{}, SweepMode::Asymptotic);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].fell_back);
    CHECK(rows[i].ratio_p == asym[i].ratio_p);
    CHECK(rows[i].ratio_q == asym[i].ratio_q);
  }
}

TEST_CASE("sweeps are deterministic") {
  SweepOptions options;
  options.resolution = {8, 8, 4, 12};
  const auto a = sweep({5, 10}, InverseCubeNeck{}, SweepMode::Mesh, options);
  const auto b = sweep({5, 10}, InverseCubeNeck{}, SweepMode::Mesh, options);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ratio_p == b[i].ratio_p);
    CHECK(a[i].ratio_q == b[i].ratio_q);
  }
}
