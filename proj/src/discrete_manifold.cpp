#include "meandist/discrete_manifold.hpp"

#include "meandist/errors.hpp"
#include "meandist/mesh.hpp"
#include "meandist/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace meandist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VertexId farthest(const DistanceField& field) {
  // max_element returns the first maximum, i.e. the smallest id.
  return static_cast<VertexId>(
      std::max_element(field.dist.begin(), field.dist.end()) - field.dist.begin());
}

}  // namespace

DiscreteManifold::DiscreteManifold(ManifoldData data) : data_(std::move(data)) {
  const std::size_t n = data_.vertex_count;
  if (n == 0) throw InputError("manifold has no vertices");
  if (n > std::numeric_limits<VertexId>::max()) throw InputError("too many vertices");
  if (data_.weights.size() != n) throw InputError("one weight per vertex required");
  if (!data_.embedding.empty() && data_.embedding.size() != n) {
    throw InputError("embedding size does not match vertex count");
  }
  if (!data_.points.empty() && data_.points.size() != n) {
    throw InputError("point annotations do not match vertex count");
  }

  for (double w : data_.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InputError("vertex weights must be nonnegative");
    total_volume_ += w;
  }
  if (!(total_volume_ > 0.0)) throw InputError("total vertex weight must be positive");

  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : data_.edges) {
    if (e.u >= n || e.v >= n) throw InputError("edge references a missing vertex");
    if (e.u == e.v) throw InputError("self-loop edge");
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw InputError("edge lengths must be positive and finite");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " stored twice");
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : data_.edges) {
    adjacency_[fill[e.u]++] = {e.v, e.length};
    adjacency_[fill[e.v]++] = {e.u, e.length};
  }

  // Connectivity by BFS from vertex 0.
  std::vector<char> reached(n, 0);
  std::vector<VertexId> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : neighbors(v)) {
      if (!reached[nb.vertex]) {
        reached[nb.vertex] = 1;
        ++count;
        stack.push_back(nb.vertex);
      }
    }
  }
  if (count != n) {
    throw MeshError("graph is disconnected: " + std::to_string(n - count) + " of " +
                    std::to_string(n) + " vertices unreachable from vertex 0");
  }
}

void DiscreteManifold::check_vertex(VertexId v) const {
  if (v >= data_.vertex_count) {
    throw InputError("vertex id " + std::to_string(v) + " out of range (vertex count " +
                     std::to_string(data_.vertex_count) + ")");
  }
}

double BallVolumeProfile::radial_integral() const {
  double sum = 0.0;
  double previous = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    sum += radii[i] * (volumes[i] - previous);
    previous = volumes[i];
  }
  return sum;
}

double BallVolumeProfile::volume_at(double r) const {
  auto it = std::upper_bound(radii.begin(), radii.end(), r);
  if (it == radii.begin()) return 0.0;
  return volumes[static_cast<std::size_t>(it - radii.begin()) - 1];
}

DistanceField distance_field(const DiscreteManifold& m, VertexId source) {
  m.check_vertex(source);
  std::vector<double> dist(m.vertex_count(), kInf);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (const Neighbor& nb : m.neighbors(v)) {
      const double candidate = d + nb.length;
      if (candidate < dist[nb.vertex]) {
        dist[nb.vertex] = candidate;
        queue.emplace(candidate, nb.vertex);
      }
    }
  }
  return {source, std::move(dist)};
}

DistanceField distance_oracle_field(const DiscreteManifold& m, const ModelSpace& space,
                                    VertexId source) {
  m.check_vertex(source);
  if (!m.has_points()) throw InputError("manifold carries no model-space point annotations");
  const auto points = m.points();
  std::vector<double> dist(m.vertex_count());
  for (std::size_t v = 0; v < dist.size(); ++v) {
    dist[v] = v == source ? 0.0 : distance(space, points[source], points[v]);
  }
  return {source, std::move(dist)};
}

DistanceField distance_oracle_field(const DiscreteManifold& m, VertexId source) {
  if (!m.space()) throw InputError("manifold is not annotated with a model space");
  return distance_oracle_field(m, *m.space(), source);
}

namespace {

double length(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

void require_surface(const DiscreteManifold& m) {
  if (m.faces().empty() || !m.has_embedding()) {
    throw PreconditionError("manifold '" + m.label() + "' has no embedded faces");
  }
}

}  // namespace

DistanceField fast_marching_field(const DiscreteManifold& m, VertexId source) {
  m.check_vertex(source);
  require_surface(m);
  const auto faces = m.faces();
  const auto x = m.embedding();
  std::vector<std::vector<std::size_t>> incident(m.vertex_count());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (VertexId v : faces[i]) incident[v].push_back(i);
  }

  std::vector<double> dist(m.vertex_count(), kInf);
  std::vector<char> done(m.vertex_count(), 0);

  // Arrival time at c from the known values at a and b of triangle (a, b, c).
  auto triangle_update = [&](VertexId c, VertexId a, VertexId b) {
    double ta = dist[a];
    double tb = dist[b];
    if (ta > tb) {
      std::swap(a, b);
      std::swap(ta, tb);
    }
    const double len_b = length(x[b], x[c]);
    const double len_a = length(x[a], x[c]);
    double best = std::min(ta + len_a, tb + len_b);
    const Vec3 ca{x[a][0] - x[c][0], x[a][1] - x[c][1], x[a][2] - x[c][2]};
    const Vec3 cb{x[b][0] - x[c][0], x[b][1] - x[c][1], x[b][2] - x[c][2]};
    const double cos_c = (ca[0] * cb[0] + ca[1] * cb[1] + ca[2] * cb[2]) / (len_a * len_b);
    const double u = tb - ta;
    const double qa = len_b * len_b + len_a * len_a - 2.0 * len_b * len_a * cos_c;
    const double qb = 2.0 * len_a * u * (len_b * cos_c - len_a);
    const double qc = len_a * len_a * (u * u - len_b * len_b * (1.0 - cos_c * cos_c));
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0 && u <= len_b) {
      const double t = (-qb + std::sqrt(disc)) / (2.0 * qa);
      if (u < t) {
        // The characteristic must enter c through the opposite edge.
        const double k = len_a * (t - u) / t;
        if (len_b * cos_c < k && k < len_b / cos_c) best = std::min(best, ta + t);
      }
    }
    return best;
  };

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (done[v] || d > dist[v]) continue;
    done[v] = 1;
    for (std::size_t fi : incident[v]) {
      const Triangle& f = faces[fi];
      for (int k = 0; k < 3; ++k) {
        const VertexId c = f[k];
        if (done[c]) continue;
        const VertexId a = f[(k + 1) % 3];
        const VertexId b = f[(k + 2) % 3];
        double candidate;
        if (done[a] && done[b]) {
          candidate = triangle_update(c, a, b);
        } else if (done[a]) {
          candidate = dist[a] + length(x[a], x[c]);
        } else if (done[b]) {
          candidate = dist[b] + length(x[b], x[c]);
        } else {
          continue;
        }
        if (candidate < dist[c]) {
          dist[c] = candidate;
          queue.emplace(candidate, c);
        }
      }
    }
  }
  return {source, std::move(dist)};
}

std::string to_string(GeodesicMethod method) {
  switch (method) {
    case GeodesicMethod::Graph:
      return "graph";
    case GeodesicMethod::FastMarching:
      return "fmm";
    case GeodesicMethod::Oracle:
      return "oracle";
  }
  return "graph";
}

GeodesicMethod parse_geodesic_method(const std::string& name) {
  if (name == "graph") return GeodesicMethod::Graph;
  if (name == "fmm") return GeodesicMethod::FastMarching;
  if (name == "oracle") return GeodesicMethod::Oracle;
  throw InputError("unknown distance method '" + name + "' (expected graph, fmm or oracle)");
}

DistanceField geodesic_field(const DiscreteManifold& m, VertexId source, GeodesicMethod method) {
  switch (method) {
    case GeodesicMethod::FastMarching:
      return fast_marching_field(m, source);
    case GeodesicMethod::Oracle:
      return distance_oracle_field(m, source);
    case GeodesicMethod::Graph:
      break;
  }
  return distance_field(m, source);
}

double f_of(const DiscreteManifold& m, const DistanceField& field) {
  const auto w = m.weights();
  double sum = 0.0;
  for (std::size_t v = 0; v < w.size(); ++v) sum += field.dist[v] * w[v];
  return sum;
}

double f_of(const DiscreteManifold& m, VertexId source) {
  return f_of(m, distance_field(m, source));
}

double eccentricity(const DistanceField& field) {
  return *std::max_element(field.dist.begin(), field.dist.end());
}

double eccentricity(const DiscreteManifold& m, VertexId source) {
  return eccentricity(distance_field(m, source));
}

BallVolumeProfile ball_volume_profile(const DiscreteManifold& m, const DistanceField& field) {
  const auto w = m.weights();
  std::vector<VertexId> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<VertexId>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return field.dist[a] < field.dist[b]; });

  BallVolumeProfile profile;
  profile.source = field.source;
  double cumulative = 0.0;
  for (VertexId v : order) {
    cumulative += w[v];
    if (!profile.radii.empty() && profile.radii.back() == field.dist[v]) {
      profile.volumes.back() = cumulative;
    } else {
      profile.radii.push_back(field.dist[v]);
      profile.volumes.push_back(cumulative);
    }
  }
  return profile;
}

BallVolumeProfile ball_volume_profile(const DiscreteManifold& m, VertexId source) {
  return ball_volume_profile(m, distance_field(m, source));
}

BallVolumeProfile sublevel_area_profile(const DiscreteManifold& m, const DistanceField& field,
                                        std::span<const double> radii) {
  require_surface(m);
  if (field.dist.size() != m.vertex_count()) throw InputError("distance field size mismatch");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) throw InputError("profile radii must be increasing");
  }
  const auto x = m.embedding();
  BallVolumeProfile profile{field.source, {radii.begin(), radii.end()},
                            std::vector<double>(radii.size(), 0.0)};
  for (const Triangle& f : m.faces()) {
    std::array<double, 3> d{field[f[0]], field[f[1]], field[f[2]]};
    std::sort(d.begin(), d.end());
    const double area = triangle_area(x[f[0]], x[f[1]], x[f[2]]);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double r = radii[i];
      if (r <= d[0]) continue;
      if (r >= d[2]) {
        profile.volumes[i] += area;
      } else if (r <= d[1]) {
        profile.volumes[i] += area * (r - d[0]) * (r - d[0]) / ((d[1] - d[0]) * (d[2] - d[0]));
      } else {
        profile.volumes[i] +=
            area * (1.0 - (d[2] - r) * (d[2] - r) / ((d[2] - d[0]) * (d[2] - d[1])));
      }
    }
  }
  return profile;
}

DiameterResult diameter(const DiscreteManifold& m, const DiameterMode& mode,
                        GeodesicMethod method) {
  auto field_from = [&](VertexId s) { return geodesic_field(m, s, method); };
  const std::size_t n = m.vertex_count();
  if (std::holds_alternative<ExactDiameter>(mode)) {
    if (n > kExactDiameterBudget) {
      throw BudgetExceeded("exact diameter needs one distance field per vertex; " +
                           std::to_string(n) + " vertices exceeds the budget of " +
                           std::to_string(kExactDiameterBudget));
    }
    std::vector<std::pair<double, VertexId>> best(n);
    parallel_for(n, [&](std::size_t s) {
      const auto field = field_from(static_cast<VertexId>(s));
      const VertexId far = farthest(field);
      best[s] = {field.dist[far], far};
    });
    DiameterResult out{0.0, false, 0, 0};
    for (std::size_t s = 0; s < n; ++s) {
      if (best[s].first > out.value) out = {best[s].first, false, static_cast<VertexId>(s), best[s].second};
    }
    return out;
  }

  const auto& sampled = std::get<SampledDiameter>(mode);
  std::mt19937_64 rng(sampled.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<VertexId> sources;
  for (std::size_t i = 0; i < sampled.seeds; ++i) sources.push_back(static_cast<VertexId>(pick(rng)));

  DiameterResult out{0.0, true, 0, 0};
  auto consider = [&](const DistanceField& field) {
    const VertexId far = farthest(field);
    if (field.dist[far] > out.value) out = {field.dist[far], true, field.source, far};
    return far;
  };
  for (VertexId s : sources) consider(field_from(s));
  // Two double-sweep passes starting from vertex 0.
  VertexId start = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const VertexId far = consider(field_from(start));
    start = consider(field_from(far));
  }
  return out;
}

DistanceMatrix all_pairs(const DiscreteManifold& m, GeodesicMethod method, std::size_t budget) {
  const std::size_t n = m.vertex_count();
  if (n > budget) {
    throw BudgetExceeded("all-pairs distances limited to " + std::to_string(budget) +
                         " vertices, got " + std::to_string(n));
  }
  std::vector<double> values(n * n);
  parallel_for(n, [&](std::size_t s) {
    const auto source = static_cast<VertexId>(s);
    const auto field = geodesic_field(m, source, method);
    std::copy(field.dist.begin(), field.dist.end(), values.begin() + static_cast<long>(s * n));
  });
  return DistanceMatrix(n, std::move(values));
}

DiscreteManifold subdivide(const DiscreteManifold& m, int levels, bool project) {
  if (levels < 0) throw InputError("subdivision levels must be >= 0");
  if (levels == 0) return m;
  if (!m.has_embedding() || m.faces().empty()) {
    throw InputError("subdivision needs an embedded triangle mesh");
  }

  TriangleMesh mesh = to_mesh(m);
  double radius = 0.0;
  if (project) {
    for (const Vec3& p : mesh.positions) radius += std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    radius /= static_cast<double>(mesh.positions.size());
  }
  auto push_to_sphere = [radius](Vec3 p) {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (double& c : p) c *= radius / r;
    return p;
  };

  for (int level = 0; level < levels; ++level) {
    std::map<std::pair<VertexId, VertexId>, VertexId> midpoints;
    auto midpoint = [&](VertexId a, VertexId b) {
      const auto key = std::minmax(a, b);
      auto [it, inserted] = midpoints.try_emplace({key.first, key.second}, 0);
      if (inserted) {
        const Vec3& pa = mesh.positions[a];
        const Vec3& pb = mesh.positions[b];
        Vec3 mid{(pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2, (pa[2] + pb[2]) / 2};
        if (project) mid = push_to_sphere(mid);
        it->second = static_cast<VertexId>(mesh.positions.size());
        mesh.positions.push_back(mid);
      }
      return it->second;
    };
    std::vector<Triangle> faces;
    faces.reserve(mesh.faces.size() * 4);
    for (const Triangle& t : mesh.faces) {
      const VertexId ab = midpoint(t[0], t[1]);
      const VertexId bc = midpoint(t[1], t[2]);
      const VertexId ca = midpoint(t[2], t[0]);
      faces.push_back({t[0], ab, ca});
      faces.push_back({ab, t[1], bc});
      faces.push_back({ca, bc, t[2]});
      faces.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(faces);
  }

  ManifoldData data = from_mesh(mesh, m.label()).data();
  data.label = m.label() + "/sub" + std::to_string(levels);
  data.dim_hint = m.dim_hint();
  const bool keep_sphere_points =
      project && m.has_points() && m.space() && std::holds_alternative<Sphere>(*m.space());
  if (keep_sphere_points) {
    data.space = m.space();
    data.points.reserve(data.vertex_count);
    for (const Vec3& p : data.embedding) {
      const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
      data.points.push_back(SpherePoint{{p[0] / r, p[1] / r, p[2] / r}});
    }
  }
  return DiscreteManifold(std::move(data));
}

}  // namespace meandist
