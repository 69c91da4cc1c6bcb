#include "meandist/counterexample.hpp"

#include "meandist/errors.hpp"
#include "meandist/mesh.hpp"
#include "meandist/parallel.hpp"

#include <cmath>
#include <numbers>

namespace meandist {

using std::numbers::pi;

DumbbellParams::DumbbellParams(double length_, double neck_circumference_,
                               DumbbellResolution resolution_)
    : length(length_), neck_circumference(neck_circumference_), resolution(resolution_) {
  Dumbbell::from_neck(neck_circumference, length);  // validates L > 0, 0 < C < 2 pi
  const auto& r = resolution;
  if (r.rings_sphere < 3 || r.rings_cyl < 3 || r.fan_disk < 3 || r.segments < 3) {
    throw InputError("dumbbell mesh resolutions must be >= 3 to weld the rings");
  }
}

double DumbbellParams::eps() const { return space().eps; }

Dumbbell DumbbellParams::space() const { return Dumbbell::from_neck(neck_circumference, length); }

std::size_t DumbbellParams::vertex_count() const {
  const auto& r = resolution;
  const auto rings = static_cast<std::size_t>(r.rings_sphere + r.rings_cyl + r.fan_disk - 1);
  return 2 + rings * static_cast<std::size_t>(r.segments);
}

DumbbellMesh build_dumbbell_mesh(const DumbbellParams& params) {
  const Dumbbell db = params.space();
  const auto& res = params.resolution;
  const double a = db.neck_radius();
  const double cut = db.cut_angle();
  const double z_cut = -1.0 + db.eps;
  const auto segments = static_cast<VertexId>(res.segments);

  TriangleMesh mesh;
  std::vector<PointRef> points;
  auto add = [&](const Vec3& x, DumbbellPoint pt) {
    mesh.positions.push_back(x);
    points.push_back(pt);
    return static_cast<VertexId>(mesh.positions.size() - 1);
  };
  auto azimuth = [&](VertexId k) { return 2.0 * pi * k / segments; };

  const VertexId p = add({0.0, 0.0, 1.0}, {DumbbellRegion::Sphere, 0.0, 0.0});

  // Every ring, top to bottom, as the id of its first vertex.
  std::vector<VertexId> rings;
  auto add_ring = [&](double radius, double z, DumbbellRegion region, double u) {
    rings.push_back(static_cast<VertexId>(mesh.positions.size()));
    for (VertexId k = 0; k < segments; ++k) {
      const double phi = azimuth(k);
      add({radius * std::cos(phi), radius * std::sin(phi), z}, {region, u, phi});
    }
  };
  for (int i = 1; i <= res.rings_sphere; ++i) {
    // The last sphere ring is the cut circle, shared with the cylinder.
    const double theta = i == res.rings_sphere ? cut : cut * i / res.rings_sphere;
    const double radius = i == res.rings_sphere ? a : std::sin(theta);
    const double z = i == res.rings_sphere ? z_cut : std::cos(theta);
    add_ring(radius, z, DumbbellRegion::Sphere, theta);
  }
  for (int j = 1; j <= res.rings_cyl; ++j) {
    const double depth = db.length * j / res.rings_cyl;
    add_ring(a, z_cut - depth, DumbbellRegion::Cylinder, depth);
  }
  const double z_bottom = z_cut - db.length;
  for (int m = 1; m < res.fan_disk; ++m) {
    const double rho = a * (res.fan_disk - m) / res.fan_disk;
    add_ring(rho, z_bottom, DumbbellRegion::Disk, rho);
  }
  const VertexId q = add({0.0, 0.0, z_bottom}, {DumbbellRegion::Disk, 0.0, 0.0});

  auto at = [segments](VertexId ring, VertexId k) { return ring + k % segments; };
  for (VertexId k = 0; k < segments; ++k) {
    mesh.faces.push_back({p, at(rings.front(), k), at(rings.front(), k + 1)});
  }
  for (std::size_t r = 0; r + 1 < rings.size(); ++r) {
    const VertexId upper = rings[r];
    const VertexId lower = rings[r + 1];
    for (VertexId k = 0; k < segments; ++k) {
      mesh.faces.push_back({at(upper, k), at(lower, k), at(lower, k + 1)});
      mesh.faces.push_back({at(upper, k), at(lower, k + 1), at(upper, k + 1)});
    }
  }
  for (VertexId k = 0; k < segments; ++k) {
    mesh.faces.push_back({q, at(rings.back(), k + 1), at(rings.back(), k)});
  }

  ManifoldData data = from_mesh(mesh, "dumbbell").data();
  data.label = "dumbbell(L=" + std::to_string(params.length) +
               ",C=" + std::to_string(params.neck_circumference) + ")";
  data.points = std::move(points);
  data.space = db;
  return {DiscreteManifold(std::move(data)), p, q};
}

double neck_for(const NeckRule& rule, double length) {
  if (std::holds_alternative<InverseCubeNeck>(rule)) return 1.0 / (length * length * length);
  return std::get<FixedNeck>(rule).neck_circumference;
}

std::string to_string(SweepMode mode) {
  return mode == SweepMode::Asymptotic ? "asymptotic" : "mesh";
}

namespace {

SweepRecord asymptotic_row(double length, double neck) {
  const auto result = dumbbell_asymptotics(Dumbbell::from_neck(neck, length));
  return {length, neck, result.f_p / result.dV, result.f_q / result.dV, SweepMode::Asymptotic,
          false, false};
}

SweepRecord mesh_row(double length, double neck, const SweepOptions& options) {
  const DumbbellParams params(length, neck, options.resolution);
  if (params.vertex_count() > options.vertex_budget) {
    SweepRecord row = asymptotic_row(length, neck);
    row.fell_back = true;
    return row;
  }
  const DumbbellMesh dm = build_dumbbell_mesh(params);
  const auto& m = dm.manifold;
  const DiameterMode mode = m.vertex_count() <= kExactDiameterBudget
                                ? DiameterMode{ExactDiameter{}}
                                : DiameterMode{SampledDiameter{16, 0}};
  const DiameterResult diam = diameter(m, mode);
  const double dV = diam.value * m.total_volume();
  return {length, neck, f_of(m, dm.p) / dV, f_of(m, dm.q) / dV, SweepMode::Mesh, false,
          diam.lower_bound_only};
}

}  // namespace

std::vector<SweepRecord> sweep(const std::vector<double>& lengths, const NeckRule& rule,
                               SweepMode mode, const SweepOptions& options) {
  if (lengths.empty()) throw InputError("sweep needs at least one length");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (!(lengths[i] > 0.0) || (i > 0 && !(lengths[i] > lengths[i - 1]))) {
      throw InputError("sweep lengths must be positive and strictly increasing");
    }
    const double neck = neck_for(rule, lengths[i]);
    if (!(neck > 0.0 && neck < 2.0 * pi)) {
      throw InputError("neck circumference " + std::to_string(neck) + " is not solvable");
    }
    // Both modes need the asymptotic regime for comparison rows and fallbacks.
    if (neck >= kMaxAsymptoticNeck) {
      throw PreconditionError("neck circumference " + std::to_string(neck) +
                              " is not small (need < " + std::to_string(kMaxAsymptoticNeck) +
                              ")");
    }
  }
  std::vector<SweepRecord> rows(lengths.size());
  parallel_for(
      lengths.size(),
      [&](std::size_t i) {
        const double neck = neck_for(rule, lengths[i]);
        rows[i] = mode == SweepMode::Asymptotic ? asymptotic_row(lengths[i], neck)
                                                : mesh_row(lengths[i], neck, options);
      },
      options.threads);
  return rows;
}

}  // namespace meandist
