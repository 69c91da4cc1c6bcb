#pragma once

#include "meandist/discrete_manifold.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace meandist {

struct TriangleMesh {
  std::vector<Vec3> positions;
  std::vector<Triangle> faces;
};

struct MeshReadResult {
  TriangleMesh mesh;
  std::vector<std::string> warnings;
};

MeshReadResult read_off(std::istream& in);
MeshReadResult read_obj(std::istream& in);
// Dispatches on the extension (.off / .obj).
MeshReadResult read_mesh(const std::filesystem::path& path);

void write_off(std::ostream& out, const TriangleMesh& mesh);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

// Edge graph with Euclidean edge lengths and lumped vertex areas (one third of
// every incident triangle). Rejects non-manifold edges or vertices, degenerate
// triangles and multiple components.
DiscreteManifold from_mesh(const TriangleMesh& mesh, std::string label = "mesh");

TriangleMesh to_mesh(const DiscreteManifold& m);

// V - E + F of a triangulated manifold.
long euler_characteristic(const DiscreteManifold& m);

}  // namespace meandist
