#pragma once

// The dumbbell surface: a unit sphere with a thin neck of circumference C and
// length L hanging off the south pole, closed by a flat disk. With C = 1/L^3,
// f(p)/(d V) -> 0 at the north pole p and f(q)/(d V) -> 1 at the disk center q
// as L grows, so no dimensional constant bounds f(p)/(d V) from below without
// a curvature hypothesis.

#include "meandist/discrete_manifold.hpp"

#include <variant>
#include <vector>

namespace meandist {

struct DumbbellResolution {
  int rings_sphere = 32;  // latitude bands on the sphere part
  int rings_cyl = 64;     // bands along the cylinder
  int fan_disk = 16;      // concentric bands on the bottom disk
  int segments = 64;      // vertices per ring (shared by all rings)
};

struct DumbbellParams {
  DumbbellParams(double length, double neck_circumference, DumbbellResolution resolution = {});

  double length;
  double neck_circumference;
  DumbbellResolution resolution;

  double eps() const;
  Dumbbell space() const;
  std::size_t vertex_count() const;
};

struct DumbbellMesh {
  DiscreteManifold manifold;
  VertexId p;  // north pole
  VertexId q;  // center of the bottom disk
};

DumbbellMesh build_dumbbell_mesh(const DumbbellParams& params);

struct InverseCubeNeck {};  // C = 1 / L^3
struct FixedNeck {
  double neck_circumference;
};
using NeckRule = std::variant<InverseCubeNeck, FixedNeck>;

double neck_for(const NeckRule& rule, double length);

enum class SweepMode { Asymptotic, Mesh };
std::string to_string(SweepMode mode);

struct SweepOptions {
  DumbbellResolution resolution;
  std::size_t vertex_budget = 300000;
  unsigned threads = 0;
};

struct SweepRecord {
  double length;
  double neck_circumference;
  double ratio_p;
  double ratio_q;
  SweepMode source;
  bool fell_back;            // mesh row over budget, computed asymptotically
  bool diameter_lower_bound;  // mesh row used a sampled diameter
};

std::vector<SweepRecord> sweep(const std::vector<double>& lengths, const NeckRule& rule,
                               SweepMode mode, const SweepOptions& options = {});

}  // namespace meandist
