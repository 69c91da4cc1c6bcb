#include "meandist/commands.hpp"

#include "meandist/errors.hpp"
#include "meandist/generators.hpp"
#include "meandist/mesh.hpp"
#include "meandist/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>

namespace meandist {

namespace {

// "name:a,b" -> ("name", [a, b])
std::pair<std::string, std::vector<double>> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, {}};
  return {spec.substr(0, colon), parse_list(spec.substr(colon + 1))};
}

void expect_args(const std::string& spec, const std::vector<double>& args, std::size_t count) {
  if (args.size() != count) {
    throw InputError("'" + spec + "' needs " + std::to_string(count) + " parameter(s)");
  }
}

int as_int(double x, const std::string& what) {
  if (x != std::floor(x) || x < 0 || x > 1e9) throw InputError(what + " must be a whole number");
  return static_cast<int>(x);
}

std::string verdict_text(const BoundReport& r, const std::string& out_of_hypothesis_note) {
  std::string v = to_string(r.verdict);
  if (!r.within_hypothesis) v += " (" + out_of_hypothesis_note + ")";
  return v;
}

void add_bound(Report& report, const std::string& quantity, const BoundReport& r,
               const std::string& provenance,
               const std::string& out_of_hypothesis_note = "out of hypothesis") {
  auto& e = report.add(quantity, r.ratio, provenance);
  e.theorem = theorem_id(r.spec.theorem);
  e.verdict = verdict_text(r, out_of_hypothesis_note);
  e.constant = r.threshold;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double value = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw InputError("cannot parse number '" + item + "' in '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ModelSpace parse_space(const std::string& spec) {
  const auto [name, args] = split_spec(spec);
  if (name == "circle") {
    expect_args(spec, args, 1);
    return Circle(args[0]);
  }
  if (name == "sphere") {
    expect_args(spec, args, 2);
    return Sphere(as_int(args[0], "sphere dimension"), args[1]);
  }
  if (name == "torus") {
    expect_args(spec, args, 2);
    return FlatTorus(args[0], args[1]);
  }
  if (name == "ball") {
    expect_args(spec, args, 2);
    return EuclideanBall(as_int(args[0], "ball dimension"), args[1]);
  }
  if (name == "hball") {
    expect_args(spec, args, 2);
    return HyperbolicBall(as_int(args[0], "ball dimension"), args[1]);
  }
  if (name == "dumbbell") {
    expect_args(spec, args, 2);
    return Dumbbell::from_neck(args[1], args[0]);
  }
  throw InputError("unknown space '" + spec +
                   "' (expected circle, sphere, torus, ball, hball or dumbbell)");
}

GeneratedManifold parse_generator(const std::string& spec) {
  const auto [name, args] = split_spec(spec);
  if (name == "icosphere") {
    expect_args(spec, args, 1);
    DiscreteManifold m = icosphere(as_int(args[0], "icosphere levels"));
    return {std::move(m), true, true, {{"pole", 0}, {"antipode", 11}}};
  }
  if (name == "cycle") {
    expect_args(spec, args, 2);
    return {cycle(static_cast<std::size_t>(as_int(args[0], "cycle size")), args[1]), true, true,
            {}};
  }
  if (name == "torus") {
    expect_args(spec, args, 3);
    return {torus_grid(static_cast<std::size_t>(as_int(args[0], "torus grid size")), args[1],
                       args[2]),
            true, true, {}};
  }
  if (name == "patch") {
    expect_args(spec, args, 2);
    return {grid_patch(static_cast<std::size_t>(as_int(args[0], "patch size")), args[1]), true,
            false, {}};
  }
  if (name == "dumbbell") {
    expect_args(spec, args, 2);
    DumbbellMesh dm = build_dumbbell_mesh(DumbbellParams(args[0], args[1]));
    const VertexId p = dm.p;
    const VertexId q = dm.q;
    return {std::move(dm.manifold), false, true, {{"p", p}, {"q", q}}};
  }
  throw InputError("unknown generator '" + spec +
                   "' (expected icosphere, cycle, torus, patch or dumbbell)");
}

std::vector<VertexId> parse_sources(const std::string& spec, const DiscreteManifold& m,
                                    const std::map<std::string, VertexId>& named,
                                    std::uint64_t seed) {
  const std::size_t n = m.vertex_count();
  if (spec == "all") {
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    return all;
  }
  if (auto it = named.find(spec); it != named.end()) return {it->second};
  if (spec.rfind("sample:", 0) == 0) {
    const auto args = parse_list(spec.substr(7));
    if (args.empty() || args.size() > 2) throw InputError("expected sample:k or sample:k,seed");
    const auto k = static_cast<std::size_t>(as_int(args[0], "sample size"));
    if (args.size() == 2) seed = static_cast<std::uint64_t>(as_int(args[1], "sample seed"));
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    std::vector<VertexId> picked;
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(picked), std::min(k, n), rng);
    return picked;
  }
  unsigned long long id = 0;
  const auto res = std::from_chars(spec.data(), spec.data() + spec.size(), id);
  if (spec.empty() || res.ec != std::errc() || res.ptr != spec.data() + spec.size()) {
    throw InputError("unknown source '" + spec + "'");
  }
  if (id >= n) throw InputError("source vertex " + spec + " out of range");
  return {static_cast<VertexId>(id)};
}

Report model_eval(const ModelEvalConfig& config) {
  const ModelSpace space = parse_space(config.space);
  Report report;
  report.command = "model-eval";
  report.input("space", describe(space));
  if (!config.point.empty()) report.input("point", config.point);

  if (std::holds_alternative<EuclideanBall>(space) ||
      std::holds_alternative<HyperbolicBall>(space)) {
    if (!config.point.empty()) throw UnsupportedVariant("ball evaluations use the center only");
    const bool hyperbolic = std::holds_alternative<HyperbolicBall>(space);
    const int n = dimension(space);
    const double radius = hyperbolic ? std::get<HyperbolicBall>(space).radius
                                     : std::get<EuclideanBall>(space).radius;
    const Quantity f = ball_mean_distance(space);
    const double v = ball_volume(space, radius);
    const std::string fp = to_string(f.provenance);
    report.add("f", f.value, fp);
    report.add("d", radius, "exact");
    report.add("V", v, "exact");
    report.add("ratio", f.value / (radius * v), fp);
    add_bound(report, "lower_bound",
              check_lower_bound(BoundSpec::make(Theorem::CartanHadamard, n), f.value, radius, v),
              fp);
    // Hyperbolic space has negative Ricci curvature.
    add_bound(report, "lower_bound",
              check_lower_bound(BoundSpec::make(Theorem::NoncompactRicci, n), f.value, radius, v,
                                {false, !hyperbolic || n == 1}),
              fp);
    return report;
  }

  if (const auto* db = std::get_if<Dumbbell>(&space)) {
    const auto asym = dumbbell_asymptotics(*db);
    const std::string at = config.point.empty() ? "p" : config.point;
    if (at != "p" && at != "q") throw InputError("dumbbell points are p or q");
    const double f = at == "p" ? asym.f_p : asym.f_q;
    const double d = db->length + std::numbers::pi;
    const double v = 4.0 * std::numbers::pi + db->length * asym.neck_circumference;
    report.add("f", f, "asymptotic");
    report.add("d", d, "asymptotic");
    report.add("V", v, "asymptotic");
    report.add("ratio", f / asym.dV, "asymptotic");
    add_bound(report, "lower_bound",
              check_lower_bound(BoundSpec::make(Theorem::CompactRicci, 2), f, d, v,
                                {true, false}),
              "asymptotic");
    return report;
  }

  PointRef point = ArcPoint{0.0};
  if (const auto* s = std::get_if<Sphere>(&space)) {
    if (!config.point.empty()) throw UnsupportedVariant("sphere evaluations use the north pole");
    point = sphere_north_pole(*s);
  } else if (std::holds_alternative<FlatTorus>(space)) {
    TorusPoint t{0.0, 0.0};
    if (!config.point.empty()) {
      const auto xy = parse_list(config.point);
      if (xy.size() != 2) throw InputError("torus points are given as x,y");
      t = {xy[0], xy[1]};
    }
    point = t;
  } else if (!config.point.empty()) {
    const auto s = parse_list(config.point);
    if (s.size() != 1) throw InputError("circle points are given as an arc parameter");
    point = ArcPoint{s[0]};
  }
  validate_point(space, point);

  const Quantity f = mean_distance_exact(space, point);
  const Quantity d = diameter(space);
  const Quantity v = volume(space);
  const std::string fp = to_string(f.provenance);
  const int n = dimension(space);
  report.add("f", f.value, fp);
  report.add("d", d.value, to_string(d.provenance));
  report.add("V", v.value, to_string(v.provenance));
  report.add("ratio", f.value / (d.value * v.value), fp);
  add_bound(report, "lower_bound",
            check_lower_bound(BoundSpec::make(Theorem::CompactRicci, n), f.value, d.value,
                              v.value),
            fp);
  if (const auto* s = std::get_if<Sphere>(&space)) {
    const auto r = check_upper_bound_sphere(n, s->curvature, f.value, config.tolerance);
    auto& e = report.add("upper_bound", f.value / (d.value * v.value), fp);
    e.theorem = theorem_id(Theorem::SphereUpper);
    e.verdict = r.satisfied ? (r.equality ? "equality" : "satisfied") : "violated";
    e.constant = 0.5;
  }
  return report;
}

Report mesh_eval(const MeshEvalConfig& config) {
  if (config.mesh_path.empty() == config.generator.empty()) {
    throw InputError("give exactly one of --mesh or --generator");
  }
  Report report;
  report.command = "mesh-eval";

  std::optional<GeneratedManifold> gen;
  std::optional<DiscreteManifold> loaded;
  if (!config.generator.empty()) {
    report.input("generator", config.generator);
    gen = parse_generator(config.generator);
  } else {
    report.input("mesh", config.mesh_path);
    const auto read = read_mesh(config.mesh_path);
    std::string warnings;
    for (const auto& w : read.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
    if (!warnings.empty()) report.input("warnings", warnings);
    loaded = from_mesh(read.mesh, config.mesh_path);
  }
  const DiscreteManifold& m = gen ? gen->manifold : *loaded;
  const std::map<std::string, VertexId> named = gen ? gen->named : std::map<std::string, VertexId>{};
  const GeodesicMethod method = parse_geodesic_method(config.distances);
  const int n = config.dim > 0 ? config.dim : m.dim_hint();
  report.input("source", config.source);
  report.input("distances", to_string(method));
  report.input("seed", std::to_string(config.seed));
  if (n < 1) throw InputError("manifold has no dimension hint; pass --dim");

  if (!config.write_off.empty()) {
    std::ofstream out(config.write_off);
    if (!out) throw InputError("cannot write " + config.write_off);
    write_off(out, to_mesh(m));
  }

  const auto sources = parse_sources(config.source, m, named, config.seed);
  if (method == GeodesicMethod::Oracle && !(m.has_points() && m.space())) {
    throw InputError("oracle distances need a generator with model-space coordinates");
  }

  double diam = 0.0;
  bool lower_bound_only = false;
  std::string diam_provenance = to_string(method);
  if (method == GeodesicMethod::Oracle) {
    const Quantity q = diameter(*m.space());
    diam = q.value;
    diam_provenance = to_string(q.provenance);
    lower_bound_only = q.asymptotic();
  } else {
    const DiameterMode mode = m.vertex_count() <= kExactDiameterBudget
                                  ? DiameterMode{ExactDiameter{}}
                                  : DiameterMode{SampledDiameter{8, config.seed}};
    const auto result = meandist::diameter(m, mode, method);
    diam = result.value;
    lower_bound_only = result.lower_bound_only;
  }
  const double vol = m.total_volume();

  std::vector<double> f(sources.size());
  parallel_for(sources.size(),
               [&](std::size_t i) { f[i] = f_of(m, geodesic_field(m, sources[i], method)); });

  const std::string prov = to_string(method);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    report.add("f[" + std::to_string(sources[i]) + "]", f[i], prov);
  }
  const auto [f_min, f_max] = std::minmax_element(f.begin(), f.end());
  report.add("d", diam, diam_provenance);
  if (lower_bound_only) report.add("d_lower_bound_only", 1.0, diam_provenance);
  report.add("V", vol, "exact");
  report.add("f_min", *f_min, prov);
  report.add("f_max", *f_max, prov);
  report.add("ratio_max", *f_max / (diam * vol), prov);

  if (*f_min > 0.0) {
    const bool declared = gen && gen->nonnegative_ricci && gen->closed;
    auto r = check_lower_bound(BoundSpec::make(Theorem::CompactRicci, n), *f_min, diam, vol,
                               {lower_bound_only, declared});
    // A lower-bound diameter overstates the ratio, so it cannot certify the bound.
    if (lower_bound_only && r.verdict == Verdict::Satisfied) r.verdict = Verdict::Inconclusive;
    add_bound(report, "ratio_min", r, prov,
              gen ? "out of hypothesis" : "hypothesis not declared for mesh files");
  } else {
    report.add("ratio_min", 0.0, prov);
  }

  if (config.source == "all") {
    auto& e = report.add("max f / (d V / 2)", *f_max / (0.5 * diam * vol), prov);
    e.theorem = "S2";
    e.verdict = *f_max >= 0.5 * diam * vol - 1e-9 ? "satisfied" : "violated";
    if (lower_bound_only && *e.verdict == "satisfied") e.verdict = "inconclusive";
    e.constant = 0.5;
  }
  return report;
}

Report verify_report(Suite suite, const VerifyOptions& options) {
  Report report;
  report.command = "verify";
  report.input("suite", to_string(suite));
  report.input("tolerance", format_double(options.monotone_tolerance));
  report.input("slack", format_double(options.slack));
  for (const auto& check : run_suite(suite, options)) {
    auto& e = report.add(check.suite + ": " + check.name, check.value, "derived");
    if (!check.theorem.empty()) e.theorem = check.theorem;
    e.verdict = check.passed ? "pass" : "fail";
    e.constant = check.threshold;
  }
  return report;
}

std::vector<SweepRecord> dumbbell_sweep(const SweepConfig& config) {
  NeckRule rule = InverseCubeNeck{};
  if (config.rule.rfind("fixed:", 0) == 0) {
    const auto c = parse_list(config.rule.substr(6));
    if (c.size() != 1) throw InputError("expected fixed:C");
    rule = FixedNeck{c[0]};
  } else if (config.rule != "cube") {
    throw InputError("unknown neck rule '" + config.rule + "' (expected cube or fixed:C)");
  }
  SweepMode mode = SweepMode::Asymptotic;
  if (config.mode == "mesh") {
    mode = SweepMode::Mesh;
  } else if (config.mode != "asymptotic") {
    throw InputError("unknown sweep mode '" + config.mode + "'");
  }
  return sweep(config.lengths, rule, mode);
}

std::vector<std::pair<std::string, std::string>> sweep_inputs(const SweepConfig& config) {
  std::string lengths;
  for (double l : config.lengths) lengths += (lengths.empty() ? "" : ",") + format_double(l);
  return {{"L", lengths}, {"rule", config.rule}, {"mode", config.mode}};
}

bool report_passed(const Report& report) {
  return std::none_of(report.results.begin(), report.results.end(), [](const ReportEntry& e) {
    return e.verdict && (*e.verdict == "violated" || *e.verdict == "fail");
  });
}

}  // namespace meandist
