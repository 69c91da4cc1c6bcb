#include "meandist/generators.hpp"

#include "meandist/errors.hpp"

#include <cmath>

namespace meandist {

DiscreteManifold cycle(std::size_t n, double length) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  const Circle circle(length);
  const double step = length / static_cast<double>(n);
  ManifoldData data;
  data.vertex_count = n;
  data.dim_hint = 1;
  data.label = "cycle(" + std::to_string(n) + ")";
  data.weights.assign(n, step);
  data.space = circle;
  for (std::size_t i = 0; i < n; ++i) {
    data.edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), step});
    data.points.push_back(ArcPoint{static_cast<double>(i) * step});
  }
  return DiscreteManifold(std::move(data));
}

DiscreteManifold torus_grid(std::size_t n, double side_a, double side_b) {
  if (n < 3) throw InputError("torus grid needs n >= 3");
  const FlatTorus torus(side_a, side_b);
  const double hx = side_a / static_cast<double>(n);
  const double hy = side_b / static_cast<double>(n);
  const double hd = std::hypot(hx, hy);
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<VertexId>((j % n) * n + (i % n)); };

  ManifoldData data;
  data.vertex_count = n * n;
  data.dim_hint = 2;
  data.label = "torus_grid(" + std::to_string(n) + ")";
  data.weights.assign(n * n, side_a * side_b / static_cast<double>(n * n));
  data.space = torus;
  data.points.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      data.points[id(i, j)] = TorusPoint{static_cast<double>(i) * hx, static_cast<double>(j) * hy};
      data.edges.push_back({id(i, j), id(i + 1, j), hx});
      data.edges.push_back({id(i, j), id(i, j + 1), hy});
      data.edges.push_back({id(i, j), id(i + 1, j + 1), hd});
    }
  }
  return DiscreteManifold(std::move(data));
}

TriangleMesh icosahedron() {
  TriangleMesh mesh;
  const double z = 1.0 / std::sqrt(5.0);
  const double r = 2.0 / std::sqrt(5.0);
  mesh.positions.push_back({0.0, 0.0, 1.0});
  for (int k = 0; k < 5; ++k) {
    const double a = 2.0 * M_PI * k / 5.0;
    mesh.positions.push_back({r * std::cos(a), r * std::sin(a), z});
  }
  for (int k = 0; k < 5; ++k) {
    const double a = 2.0 * M_PI * (k + 0.5) / 5.0;
    mesh.positions.push_back({r * std::cos(a), r * std::sin(a), -z});
  }
  mesh.positions.push_back({0.0, 0.0, -1.0});

  for (VertexId k = 0; k < 5; ++k) {
    const VertexId u0 = 1 + k, u1 = 1 + (k + 1) % 5;
    const VertexId l0 = 6 + k, l1 = 6 + (k + 1) % 5;
    mesh.faces.push_back({0, u0, u1});
    mesh.faces.push_back({u0, l0, u1});
    mesh.faces.push_back({u1, l0, l1});
    mesh.faces.push_back({11, l1, l0});
  }
  return mesh;
}

DiscreteManifold icosphere(int levels) {
  ManifoldData data = from_mesh(icosahedron(), "icosahedron").data();
  data.space = Sphere(2, 1.0);
  for (const Vec3& p : data.embedding) data.points.push_back(SpherePoint{{p[0], p[1], p[2]}});
  DiscreteManifold base(std::move(data));
  if (levels == 0) return base;
  ManifoldData refined = subdivide(base, levels, true).data();
  refined.label = "icosphere(" + std::to_string(levels) + ")";
  return DiscreteManifold(std::move(refined));
}

DiscreteManifold grid_patch(std::size_t n, double side) {
  if (n < 1) throw InputError("grid patch needs n >= 1");
  if (!(side > 0.0)) throw InputError("grid patch side must be positive");
  TriangleMesh mesh;
  const double h = side / static_cast<double>(n);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i <= n; ++i) {
      mesh.positions.push_back({-side / 2 + static_cast<double>(i) * h,
                                -side / 2 + static_cast<double>(j) * h, 0.0});
    }
  }
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<VertexId>(j * (n + 1) + i); };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      mesh.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      mesh.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return from_mesh(mesh, "grid_patch(" + std::to_string(n) + ")");
}

}  // namespace meandist
