#pragma once

// Weighted metric graphs standing in for (M, dv), and the geodesic machinery
// on them: single-source distance fields, ball-volume profiles, diameters and
// the discrete functional f(p) = sum_x d(p, x) w(x).

#include "meandist/model_spaces.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace meandist {

using VertexId = std::uint32_t;
using Vec3 = std::array<double, 3>;
using Triangle = std::array<VertexId, 3>;

struct Edge {
  VertexId u;
  VertexId v;
  double length;
};

struct Neighbor {
  VertexId vertex;
  double length;
};

// Everything needed to build a DiscreteManifold. Optional parts are left empty.
struct ManifoldData {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<double> weights;
  int dim_hint = 0;
  std::string label;
  std::vector<Vec3> embedding;
  std::vector<Triangle> faces;
  // Model-space coordinates of each vertex, for oracle distances.
  std::vector<PointRef> points;
  std::optional<ModelSpace> space;
};

// Immutable after construction. The constructor rejects disconnected graphs,
// nonpositive edge lengths, duplicate edges and negative weights.
class DiscreteManifold {
 public:
  explicit DiscreteManifold(ManifoldData data);

  std::size_t vertex_count() const { return data_.vertex_count; }
  std::span<const Edge> edges() const { return data_.edges; }
  std::span<const double> weights() const { return data_.weights; }
  double total_volume() const { return total_volume_; }
  int dim_hint() const { return data_.dim_hint; }
  const std::string& label() const { return data_.label; }

  bool has_embedding() const { return !data_.embedding.empty(); }
  std::span<const Vec3> embedding() const { return data_.embedding; }
  std::span<const Triangle> faces() const { return data_.faces; }

  bool has_points() const { return !data_.points.empty(); }
  std::span<const PointRef> points() const { return data_.points; }
  const std::optional<ModelSpace>& space() const { return data_.space; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  void check_vertex(VertexId v) const;
  const ManifoldData& data() const { return data_; }

 private:
  ManifoldData data_;
  double total_volume_ = 0.0;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

struct DistanceField {
  VertexId source;
  std::vector<double> dist;

  double operator[](VertexId v) const { return dist[v]; }
  friend bool operator==(const DistanceField&, const DistanceField&) = default;
};

struct BallVolumeProfile {
  std::optional<VertexId> source;  // empty for profiles sampled from a model space
  std::vector<double> radii;       // strictly increasing
  std::vector<double> volumes;     // V_p(radii[i]), nondecreasing

  // sum_i r_i (V_i - V_{i-1}); equals f(p) when built from a distance field.
  double radial_integral() const;
  // V_p(r) for arbitrary r (step function, right-continuous).
  double volume_at(double r) const;
};

// Shortest-path distances in the edge graph (Dijkstra). Ties in the queue are
// broken by ascending vertex id, so results are bit-reproducible.
DistanceField distance_field(const DiscreteManifold& m, VertexId source);

// Distances taken from the model-space oracle at each vertex's annotated point.
DistanceField distance_oracle_field(const DiscreteManifold& m, const ModelSpace& space,
                                    VertexId source);
DistanceField distance_oracle_field(const DiscreteManifold& m, VertexId source);

// First-order fast marching on the triangle faces (needs faces and an
// embedding). Fronts crossing a triangle use the planar two-point update; at
// obtuse corners the update falls back to the edges. Converges to the surface
// metric under refinement, unlike the edge graph.
DistanceField fast_marching_field(const DiscreteManifold& m, VertexId source);

enum class GeodesicMethod { Graph, FastMarching, Oracle };
std::string to_string(GeodesicMethod method);
GeodesicMethod parse_geodesic_method(const std::string& name);  // graph | fmm | oracle

DistanceField geodesic_field(const DiscreteManifold& m, VertexId source,
                             GeodesicMethod method = GeodesicMethod::Graph);

double f_of(const DiscreteManifold& m, const DistanceField& field);
double f_of(const DiscreteManifold& m, VertexId source);

double eccentricity(const DistanceField& field);
double eccentricity(const DiscreteManifold& m, VertexId source);

BallVolumeProfile ball_volume_profile(const DiscreteManifold& m, const DistanceField& field);
BallVolumeProfile ball_volume_profile(const DiscreteManifold& m, VertexId source);

// Area of {x : d(x) <= r} with d interpolated linearly over each face, at each
// of the given increasing radii. Needs faces and an embedding.
BallVolumeProfile sublevel_area_profile(const DiscreteManifold& m, const DistanceField& field,
                                        std::span<const double> radii);

inline constexpr std::size_t kExactDiameterBudget = 20000;

struct ExactDiameter {};
struct SampledDiameter {
  std::size_t seeds = 8;
  std::uint64_t seed = 0;
};
using DiameterMode = std::variant<ExactDiameter, SampledDiameter>;

struct DiameterResult {
  double value;
  bool lower_bound_only;
  VertexId a;  // a pair realizing `value`
  VertexId b;
};

DiameterResult diameter(const DiscreteManifold& m, const DiameterMode& mode = ExactDiameter{},
                        GeodesicMethod method = GeodesicMethod::Graph);

// Dense all-pairs distances for small manifolds (property suites).
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {}
  std::size_t size() const { return n_; }
  double operator()(VertexId i, VertexId j) const { return values_[i * n_ + j]; }
  std::span<const double> row(VertexId i) const { return {values_.data() + i * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

inline constexpr std::size_t kAllPairsBudget = 2000;

DistanceMatrix all_pairs(const DiscreteManifold& m, GeodesicMethod method = GeodesicMethod::Graph,
                         std::size_t budget = kAllPairsBudget);

// Midpoint 4-split of every face, `levels` times. With `project` the new
// vertices are pushed onto the sphere through the old vertices (centered at the
// origin) and sphere annotations are kept.
DiscreteManifold subdivide(const DiscreteManifold& m, int levels, bool project = false);

}  // namespace meandist
