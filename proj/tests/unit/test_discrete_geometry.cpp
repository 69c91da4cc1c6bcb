#include "meandist/errors.hpp"
#include "meandist/generators.hpp"
#include "meandist/mesh.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace meandist;
using std::numbers::pi;

namespace {

DiscreteManifold path_012() {
  ManifoldData d;
  d.vertex_count = 3;
  d.edges = {{0, 1, 1.0}, {1, 2, 2.0}};
  d.weights = {1.0, 1.0, 1.0};
  d.dim_hint = 1;
  d.label = "path";
  return DiscreteManifold(std::move(d));
}

DiscreteManifold unit_cycle(std::size_t n) {
  ManifoldData d;
  d.vertex_count = n;
  for (VertexId i = 0; i < n; ++i) d.edges.push_back({i, static_cast<VertexId>((i + 1) % n), 1.0});
  d.weights.assign(n, 1.0);
  d.dim_hint = 1;
  return DiscreteManifold(std::move(d));
}

TriangleMesh unit_square() {
  return {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, {{0, 1, 2}, {0, 2, 3}}};
}

std::vector<DiscreteManifold> small_corpus() {
  std::vector<DiscreteManifold> out;
  out.push_back(cycle(40, 2.0));
  out.push_back(icosphere(2));
  out.push_back(torus_grid(12, 1.0, 1.5));
  out.push_back(grid_patch(10, 1.0));
  return out;
}

}  // namespace

TEST_CASE("icosahedron: 12 vertices, 30 edges, exact area") {
  const DiscreteManifold m = from_mesh(icosahedron());
  CHECK(m.vertex_count() == 12);
  CHECK(m.edges().size() == 30);
  const double a = 4.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
  CHECK(m.total_volume() == doctest::Approx(5.0 * std::sqrt(3.0) * a * a));
  CHECK(euler_characteristic(m) == 2);
}

TEST_CASE("two-triangle unit square has total weight 1") {
  const DiscreteManifold m = from_mesh(unit_square());
  CHECK(m.total_volume() == doctest::Approx(1.0));
  CHECK(m.weights()[0] == doctest::Approx(1.0 / 3));
  CHECK(m.weights()[1] == doctest::Approx(1.0 / 6));
  CHECK(m.dim_hint() == 2);
}

TEST_CASE("malformed meshes are rejected") {
  TriangleMesh two = unit_square();
  for (Vec3 p : {Vec3{5, 0, 0}, Vec3{6, 0, 0}, Vec3{5, 1, 0}}) two.positions.push_back(p);
  two.faces.push_back({4, 5, 6});
  CHECK_THROWS_AS(from_mesh(two), MeshError);

  TriangleMesh degenerate{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {{0, 1, 2}}};
  CHECK_THROWS_AS(from_mesh(degenerate), MeshError);

  // Three triangles on one edge.
  TriangleMesh fin{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}},
                   {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}};
  CHECK_THROWS_AS(from_mesh(fin), MeshError);

  // Two fans touching at a single vertex.
  TriangleMesh bowtie{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {-1, 0, 0}, {-1, -1, 0}},
                      {{0, 1, 2}, {0, 3, 4}}};
  CHECK_THROWS_AS(from_mesh(bowtie), MeshError);

  TriangleMesh out_of_range{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 7}}};
  CHECK_THROWS_AS(from_mesh(out_of_range), MeshError);
}

TEST_CASE("graph invariants are enforced") {
  ManifoldData d;
  d.vertex_count = 2;
  d.edges = {{0, 1, 0.0}};
  d.weights = {1, 1};
  CHECK_THROWS_AS(DiscreteManifold{d}, InputError);
  d.edges = {{0, 1, 1.0}, {1, 0, 1.0}};
  CHECK_THROWS_AS(DiscreteManifold{d}, InputError);
  d.edges = {{0, 1, 1.0}};
  d.weights = {1, -1};
  CHECK_THROWS_AS(DiscreteManifold{d}, InputError);
  d.weights = {0, 0};
  CHECK_THROWS_AS(DiscreteManifold{d}, InputError);
  d.vertex_count = 3;
  d.weights = {1, 1, 1};
  CHECK_THROWS_AS(DiscreteManifold{d}, MeshError);
}

TEST_CASE("subdivision") {
  const DiscreteManifold ico = from_mesh(icosahedron());
  CHECK(subdivide(ico, 1, true).vertex_count() == 42);
  const DiscreteManifold same = subdivide(ico, 0, true);
  CHECK(same.vertex_count() == ico.vertex_count());
  CHECK(same.total_volume() == ico.total_volume());
  CHECK(subdivide(ico, 3, true).total_volume() == doctest::Approx(4 * pi).epsilon(0.005));
  CHECK_THROWS_AS(subdivide(unit_cycle(5), 1), InputError);
  CHECK_THROWS_AS(subdivide(ico, -1), InputError);
}

TEST_CASE("shortest paths on small graphs") {
  CHECK(distance_field(unit_cycle(8), 0)[4] == 4.0);
  CHECK(distance_field(path_012(), 0).dist == std::vector<double>{0, 1, 3});
  CHECK(diameter(unit_cycle(8)).value == 4.0);
  CHECK(diameter(path_012()).value == 3.0);
  CHECK(eccentricity(unit_cycle(8), 3) == 4.0);
  CHECK(eccentricity(path_012(), 1) == 2.0);
  CHECK_THROWS_AS(distance_field(path_012(), 3), InputError);
}

TEST_CASE("icosphere level 4: graph overestimates, fast marching within 3%") {
  const DiscreteManifold m = icosphere(4);
  const double graph = distance_field(m, 0)[11];
  CHECK(graph > pi);
  CHECK(graph < 1.1 * pi);
  CHECK(fast_marching_field(m, 0)[11] == doctest::Approx(pi).epsilon(0.03));
  CHECK(distance_oracle_field(m, 0)[11] == doctest::Approx(pi));
  const auto d = diameter(m, SampledDiameter{4, 0}, GeodesicMethod::FastMarching);
  CHECK(d.value == doctest::Approx(pi).epsilon(0.03));
}

TEST_CASE("fast marching is exact along straight lines of a flat patch") {
  const DiscreteManifold m = grid_patch(8, 1.0);
  const auto field = fast_marching_field(m, 0);
  const auto x = m.embedding();
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    const double euclid = std::hypot(x[v][0] - x[0][0], x[v][1] - x[0][1]);
    CHECK(field[v] >= euclid - 1e-12);
    CHECK(field[v] <= 1.05 * euclid + 1e-12);
  }
  CHECK_THROWS_AS(fast_marching_field(unit_cycle(5), 0), PreconditionError);
}

TEST_CASE("f on the cycle, a single vertex and the oracle torus") {
  CHECK(f_of(cycle(100, 1.0), 0) == doctest::Approx(0.25).epsilon(1e-3));
  ManifoldData one;
  one.vertex_count = 1;
  one.weights = {2.0};
  CHECK(f_of(DiscreteManifold(one), 0) == 0.0);
  const DiscreteManifold torus = torus_grid(200, 1.0, 1.0);
  CHECK(f_of(torus, distance_oracle_field(torus, 0)) == doctest::Approx(0.3826).epsilon(0.01));
}

TEST_CASE("oracle fields") {
  const DiscreteManifold torus = torus_grid(4, 1.0, 1.0);
  CHECK(distance_oracle_field(torus, 0)[3] == doctest::Approx(0.25));
  const DiscreteManifold sphere = icosphere(1);
  const auto field = distance_oracle_field(sphere, 5);
  CHECK(field[5] == 0.0);
  CHECK(distance_oracle_field(sphere, 0)[11] == doctest::Approx(pi));
  CHECK_THROWS_AS(distance_oracle_field(path_012(), 0), InputError);
}

TEST_CASE("ball volume profiles") {
  const DiscreteManifold c8 = unit_cycle(8);
  const auto profile = ball_volume_profile(c8, 0);
  CHECK(profile.volume_at(2.0) == 5.0);
  CHECK(profile.volumes.back() == c8.total_volume());
  const DiscreteManifold patch = grid_patch(12, 2.0);
  CHECK(ball_volume_profile(patch, 7).volumes.back() == doctest::Approx(patch.total_volume()));
  for (const auto& m : small_corpus()) {
    const auto p = ball_volume_profile(m, 1);
    CHECK(std::is_sorted(p.volumes.begin(), p.volumes.end()));
    CHECK(std::adjacent_find(p.radii.begin(), p.radii.end(), std::greater_equal<>()) ==
          p.radii.end());
    CHECK(p.radial_integral() == doctest::Approx(f_of(m, 1)).epsilon(1e-12));
  }
}

TEST_CASE("sublevel areas of exact Euclidean distances on a flat patch") {
  const DiscreteManifold m = grid_patch(40, 1.0);
  const auto x = m.embedding();
  const VertexId center = 20 * 41 + 20;
  DistanceField field{center, {}};
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    field.dist.push_back(std::hypot(x[v][0] - x[center][0], x[v][1] - x[center][1]));
  }
  const std::vector<double> radii{0.1, 0.2, 0.3, 0.45, 0.8};
  const auto profile = sublevel_area_profile(m, field, radii);
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    CHECK(profile.volumes[i] == doctest::Approx(pi * radii[i] * radii[i]).epsilon(0.01));
  }
  CHECK(profile.volumes.back() == doctest::Approx(1.0));
  const std::vector<double> bad{0.2, 0.1};
  CHECK_THROWS_AS(sublevel_area_profile(m, field, bad), InputError);
}

TEST_CASE("property: per-edge Lipschitz for graph, fmm and oracle fields") {
  std::mt19937_64 rng(3);
  using G = GeodesicMethod;
  const std::vector<std::pair<DiscreteManifold, std::vector<G>>> cases{
      {icosphere(2), {G::Graph, G::FastMarching, G::Oracle}},
      {torus_grid(10, 1.0, 1.0), {G::Graph, G::Oracle}},
      {grid_patch(10, 1.0), {G::Graph, G::FastMarching}}};
  for (const auto& [m, methods] : cases) {
    for (GeodesicMethod method : methods) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto s = static_cast<VertexId>(rng() % m.vertex_count());
        const auto field = geodesic_field(m, s, method);
        CHECK(field[s] == 0.0);
        double worst = 0.0;
        for (const Edge& e : m.edges()) {
          // Oracle distances are intrinsic, so an edge chord may be shorter than the arc.
          const double bound = method == G::Oracle
                                   ? distance(*m.space(), m.points()[e.u], m.points()[e.v])
                                   : e.length;
          worst = std::max(worst, std::abs(field[e.u] - field[e.v]) - bound);
        }
        CHECK(worst <= 1e-12);
      }
    }
  }
}

TEST_CASE("property: sum, Lipschitz, max f and eccentricity on all pairs") {
  for (const auto& m : small_corpus()) {
    const DistanceMatrix d = all_pairs(m);
    const double vol = m.total_volume();
    std::vector<double> f(m.vertex_count());
    for (VertexId p = 0; p < f.size(); ++p) f[p] = f_of(m, p);
    double diam = 0.0;
    for (VertexId p = 0; p < f.size(); ++p) {
      for (VertexId q = 0; q < f.size(); ++q) {
        diam = std::max(diam, d(p, q));
        CHECK(f[p] + f[q] >= d(p, q) * vol - 1e-9);
        CHECK(std::abs(f[p] - f[q]) <= d(p, q) * vol + 1e-9);
      }
    }
    CHECK(diam == diameter(m).value);
    CHECK(*std::max_element(f.begin(), f.end()) >= 0.5 * diam * vol - 1e-9);
    for (VertexId p = 0; p < f.size(); ++p) CHECK(eccentricity(m, p) >= 0.5 * diam - 1e-9);
  }
}

TEST_CASE("refinement: oracle and fast-marching f converge to 2 pi^2") {
  double previous = INFINITY;
  for (int level = 2; level <= 5; ++level) {
    const DiscreteManifold m = icosphere(level);
    const double err = std::abs(f_of(m, distance_oracle_field(m, 0)) - 2 * pi * pi);
    CHECK(err <= previous);
    previous = err;
  }
  previous = INFINITY;
  for (int level = 3; level <= 6; ++level) {
    const DiscreteManifold m = icosphere(level);
    const double err = std::abs(f_of(m, fast_marching_field(m, 0)) - 2 * pi * pi);
    CHECK(err <= previous);
    previous = err;
  }
}

TEST_CASE("graph-metric f stays within the 10% distortion band") {
  for (int level = 2; level <= 5; ++level) {
    const DiscreteManifold m = icosphere(level);
    const double f = f_of(m, 0);
    CHECK(f > 2 * pi * pi * 0.99);
    CHECK(f < 2 * pi * pi * 1.1);
  }
}

TEST_CASE("determinism") {
  const DiscreteManifold m = torus_grid(30, 1.0, 1.0);
  CHECK(distance_field(m, 17) == distance_field(m, 17));
  const DiscreteManifold patch = grid_patch(30, 1.0);
  CHECK(fast_marching_field(patch, 17) == fast_marching_field(patch, 17));
  const auto a = diameter(m);
  const auto b = diameter(m);
  CHECK(a.value == b.value);
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
}

TEST_CASE("budgets") {
  const DiscreteManifold big = cycle(20001, 1.0);
  CHECK_THROWS_AS(diameter(big, ExactDiameter{}), BudgetExceeded);
  const auto sampled = diameter(big, SampledDiameter{4, 1});
  CHECK(sampled.lower_bound_only);
  CHECK(sampled.value <= 0.5 + 1e-12);
  CHECK(sampled.value == doctest::Approx(0.5).epsilon(1e-3));
  CHECK_THROWS_AS(all_pairs(cycle(2001, 1.0)), BudgetExceeded);
  CHECK(all_pairs(cycle(50, 1.0), GeodesicMethod::Graph, 50).size() == 50);
}

TEST_CASE("sampled diameter is reproducible and never exceeds the exact one") {
  const DiscreteManifold m = icosphere(2);
  const double exact = diameter(m).value;
  const auto s1 = diameter(m, SampledDiameter{3, 42});
  const auto s2 = diameter(m, SampledDiameter{3, 42});
  CHECK(s1.value == s2.value);
  CHECK(s1.value <= exact);
}
