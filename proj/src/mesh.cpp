#include "meandist/mesh.hpp"

#include "meandist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace meandist {

namespace {

// Next non-empty, non-comment line.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

double length(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

long parse_obj_index(const std::string& token, std::size_t vertex_count) {
  const std::string head = token.substr(0, token.find('/'));
  std::size_t used = 0;
  long idx = 0;
  try {
    idx = std::stol(head, &used);
  } catch (const std::exception&) {
    throw MeshError("bad OBJ face index '" + token + "'");
  }
  if (used != head.size() || idx == 0) throw MeshError("bad OBJ face index '" + token + "'");
  return idx > 0 ? idx - 1 : static_cast<long>(vertex_count) + idx;
}

struct LocalUnionFind {
  std::vector<std::size_t> parent;
  explicit LocalUnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

MeshReadResult read_off(std::istream& in) {
  MeshReadResult result;
  std::string line;
  if (!next_data_line(in, line)) throw MeshError("empty OFF file");
  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "OFF") throw MeshError("missing OFF header");
  long nv = -1, nf = -1, ne = 0;
  if (!(header >> nv)) {
    if (!next_data_line(in, line)) throw MeshError("missing OFF counts");
    std::istringstream counts(line);
    counts >> nv >> nf >> ne;
  } else {
    header >> nf >> ne;
  }
  if (nv < 0 || nf < 0) throw MeshError("bad OFF counts");

  result.mesh.positions.reserve(static_cast<std::size_t>(nv));
  for (long i = 0; i < nv; ++i) {
    if (!next_data_line(in, line)) throw MeshError("OFF file ends inside the vertex list");
    std::istringstream row(line);
    Vec3 p{};
    if (!(row >> p[0] >> p[1] >> p[2])) throw MeshError("bad OFF vertex line: " + line);
    result.mesh.positions.push_back(p);
  }
  for (long i = 0; i < nf; ++i) {
    if (!next_data_line(in, line)) throw MeshError("OFF file ends inside the face list");
    std::istringstream row(line);
    long k = 0;
    row >> k;
    if (k != 3) throw MeshError("only triangular faces are supported (face with " + std::to_string(k) + " vertices)");
    long a = 0, b = 0, c = 0;
    if (!(row >> a >> b >> c)) throw MeshError("bad OFF face line: " + line);
    for (long idx : {a, b, c}) {
      if (idx < 0 || idx >= nv) throw MeshError("OFF face index out of range");
    }
    result.mesh.faces.push_back(
        {static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
  }
  return result;
}

MeshReadResult read_obj(std::istream& in) {
  MeshReadResult result;
  std::map<std::string, std::size_t> ignored;
  std::string line;
  std::vector<std::array<long, 3>> raw_faces;
  while (next_data_line(in, line)) {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "v") {
      Vec3 p{};
      if (!(row >> p[0] >> p[1] >> p[2])) throw MeshError("bad OBJ vertex line: " + line);
      result.mesh.positions.push_back(p);
    } else if (tag == "f") {
      std::vector<std::string> tokens;
      for (std::string t; row >> t;) tokens.push_back(t);
      if (tokens.size() != 3) {
        throw MeshError("only triangular faces are supported (face with " +
                        std::to_string(tokens.size()) + " vertices)");
      }
      std::array<long, 3> f{};
      for (std::size_t i = 0; i < 3; ++i) f[i] = parse_obj_index(tokens[i], result.mesh.positions.size());
      raw_faces.push_back(f);
    } else {
      ++ignored[tag];
    }
  }
  const auto nv = static_cast<long>(result.mesh.positions.size());
  for (const auto& f : raw_faces) {
    for (long idx : f) {
      if (idx < 0 || idx >= nv) throw MeshError("OBJ face index out of range");
    }
    result.mesh.faces.push_back(
        {static_cast<VertexId>(f[0]), static_cast<VertexId>(f[1]), static_cast<VertexId>(f[2])});
  }
  for (const auto& [tag, count] : ignored) {
    result.warnings.push_back("ignored " + std::to_string(count) + " OBJ '" + tag + "' record(s)");
  }
  return result;
}

MeshReadResult read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file " + path.string());
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".off") return read_off(in);
  if (ext == ".obj") return read_obj(in);
  throw MeshError("unsupported mesh extension '" + ext + "' (expected .off or .obj)");
}

void write_off(std::ostream& out, const TriangleMesh& mesh) {
  out.precision(17);
  out << "OFF\n" << mesh.positions.size() << ' ' << mesh.faces.size() << " 0\n";
  for (const Vec3& p : mesh.positions) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const Triangle& t : mesh.faces) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 u = sub(b, a);
  const Vec3 v = sub(c, a);
  const Vec3 n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  return 0.5 * length(n);
}

DiscreteManifold from_mesh(const TriangleMesh& mesh, std::string label) {
  const std::size_t nv = mesh.positions.size();
  if (nv == 0 || mesh.faces.empty()) throw MeshError("mesh has no triangles");

  std::vector<double> weights(nv, 0.0);
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> edge_faces;
  std::vector<std::vector<std::size_t>> vertex_faces(nv);

  for (std::size_t fi = 0; fi < mesh.faces.size(); ++fi) {
    const Triangle& t = mesh.faces[fi];
    for (VertexId v : t) {
      if (v >= nv) throw MeshError("face " + std::to_string(fi) + " references a missing vertex");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[0]) {
      throw MeshError("face " + std::to_string(fi) + " repeats a vertex");
    }
    const Vec3& a = mesh.positions[t[0]];
    const Vec3& b = mesh.positions[t[1]];
    const Vec3& c = mesh.positions[t[2]];
    const double longest = std::max({length(sub(a, b)), length(sub(b, c)), length(sub(c, a))});
    const double area = triangle_area(a, b, c);
    if (!(area > 1e-14 * longest * longest)) {
      throw MeshError("face " + std::to_string(fi) + " is degenerate (zero area)");
    }
    for (VertexId v : t) {
      weights[v] += area / 3.0;
      vertex_faces[v].push_back(fi);
    }
    for (int k = 0; k < 3; ++k) {
      const auto key = std::minmax(t[k], t[(k + 1) % 3]);
      auto& faces = edge_faces[{key.first, key.second}];
      faces.push_back(fi);
      if (faces.size() > 2) {
        throw MeshError("non-manifold edge " + std::to_string(key.first) + "-" +
                        std::to_string(key.second) + " shared by more than two faces");
      }
    }
  }

  // Faces around each vertex must form a single fan.
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& around = vertex_faces[v];
    if (around.empty()) throw MeshError("vertex " + std::to_string(v) + " belongs to no face");
    LocalUnionFind uf(around.size());
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        const Triangle& a = mesh.faces[around[i]];
        const Triangle& b = mesh.faces[around[j]];
        int shared = 0;
        for (VertexId x : a) shared += static_cast<int>(std::count(b.begin(), b.end(), x));
        if (shared >= 2) uf.unite(i, j);
      }
    }
    for (std::size_t i = 1; i < around.size(); ++i) {
      if (uf.find(i) != uf.find(0)) {
        throw MeshError("non-manifold vertex " + std::to_string(v) +
                        " (incident faces form more than one fan)");
      }
    }
  }

  ManifoldData data;
  data.vertex_count = nv;
  data.weights = std::move(weights);
  data.dim_hint = 2;
  data.label = std::move(label);
  data.embedding = mesh.positions;
  data.faces = mesh.faces;
  data.edges.reserve(edge_faces.size());
  for (const auto& [key, faces] : edge_faces) {
    data.edges.push_back({key.first, key.second,
                          length(sub(mesh.positions[key.first], mesh.positions[key.second]))});
  }
  return DiscreteManifold(std::move(data));
}

TriangleMesh to_mesh(const DiscreteManifold& m) {
  if (!m.has_embedding() || m.faces().empty()) throw InputError("manifold has no embedded faces");
  return {{m.embedding().begin(), m.embedding().end()}, {m.faces().begin(), m.faces().end()}};
}

long euler_characteristic(const DiscreteManifold& m) {
  return static_cast<long>(m.vertex_count()) - static_cast<long>(m.edges().size()) +
         static_cast<long>(m.faces().size());
}

}  // namespace meandist
