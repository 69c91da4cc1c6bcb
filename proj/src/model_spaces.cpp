#include "meandist/model_spaces.hpp"

#include "meandist/errors.hpp"
#include "meandist/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace meandist {

using std::numbers::pi;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InputError(std::string(what) + " must be positive and finite");
  }
}

void require_dim(int n) {
  if (n < 1) throw InputError("dimension must be >= 1");
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Norms of p - q and p + q, for well-conditioned angles between unit vectors.
std::pair<double, double> diff_sum_norms(const std::vector<double>& p,
                                         const std::vector<double>& q) {
  double d = 0.0, s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d += (p[i] - q[i]) * (p[i] - q[i]);
    s += (p[i] + q[i]) * (p[i] + q[i]);
  }
  return {std::sqrt(d), std::sqrt(s)};
}

void check_unit(const std::vector<double>& v, std::size_t size, const char* what) {
  if (v.size() != size) {
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) +
                     " components, expected " + std::to_string(size));
  }
  if (std::abs(norm(v) - 1.0) > 1e-12) throw InputError(std::string(what) + " is not a unit vector");
}

template <class T>
const T& as(const PointRef& point, const char* space_name) {
  const T* p = std::get_if<T>(&point);
  if (p == nullptr) throw InputError(std::string("point does not belong to a ") + space_name);
  return *p;
}

// Central angle between directions (phi1) and (phi2) on [0, pi].
double azimuth_gap(double phi1, double phi2) {
  double g = std::fmod(std::abs(phi1 - phi2), 2.0 * pi);
  return std::min(g, 2.0 * pi - g);
}

// Profile arc length from the north pole along a meridian.
double profile_arc(const Dumbbell& db, const DumbbellPoint& x) {
  switch (x.region) {
    case DumbbellRegion::Sphere:
      return x.u;
    case DumbbellRegion::Cylinder:
      return db.cut_angle() + x.u;
    case DumbbellRegion::Disk:
      return db.cut_angle() + db.length + (db.neck_radius() - x.u);
  }
  return 0.0;
}

double dumbbell_distance(const Dumbbell& db, const DumbbellPoint& a, const DumbbellPoint& b) {
  const double gap = azimuth_gap(a.phi, b.phi);
  if (a.region == DumbbellRegion::Sphere && b.region == DumbbellRegion::Sphere) {
    // Great-circle distance on the unit sphere (haversine form).
    const double s1 = std::sin((a.u - b.u) / 2.0);
    const double s2 = std::sin(gap / 2.0);
    const double h = s1 * s1 + std::sin(a.u) * std::sin(b.u) * s2 * s2;
    return 2.0 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
  }
  if (a.region == DumbbellRegion::Disk && b.region == DumbbellRegion::Disk) {
    const double d2 = a.u * a.u + b.u * b.u - 2.0 * a.u * b.u * std::cos(gap);
    return std::sqrt(std::max(d2, 0.0));
  }
  // Along the meridians plus the detour around the neck.
  const double axial = profile_arc(db, a) - profile_arc(db, b);
  const double around = db.neck_radius() * gap;
  return std::hypot(axial, around);
}

double torus_closed_form_unit_square() {
  return (std::numbers::sqrt2 + std::log(1.0 + std::numbers::sqrt2)) / 6.0;
}

double torus_quadrature(const FlatTorus& t, const TorusPoint& p) {
  // The wrapped distance from p is smooth except on the lines through p and
  // through its antipodal point, so split the fundamental domain there.
  auto cuts = [](double origin, double side) {
    std::vector<double> c{0.0, side, origin, std::fmod(origin + side / 2.0, side)};
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  };
  const auto xs = cuts(p.x, t.side_a);
  const auto ys = cuts(p.y, t.side_b);
  const ModelSpace space = t;
  auto integrand = [&](double x, double y) {
    return distance(space, p, TorusPoint{x, y});
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      total += integrate_2d(integrand, xs[i], xs[i + 1], ys[j], ys[j + 1], 1e-11).value;
    }
  }
  return total;
}

double hyperbolic_radial(int n, double radius, bool weight_by_r) {
  auto integrand = [n, weight_by_r](double r) {
    const double s = std::pow(std::sinh(r), n - 1);
    return weight_by_r ? r * s : s;
  };
  return unit_sphere_area(n) * integrate(integrand, 0.0, radius, 1e-12).value;
}

}  // namespace

// ---- construction ---------------------------------------------------------

Circle::Circle(double length_) : length(length_) { require_positive(length, "circle length"); }

Sphere::Sphere(int dim_, double curvature_) : dim(dim_), curvature(curvature_) {
  require_dim(dim);
  require_positive(curvature, "sphere curvature");
}

double Sphere::radius() const { return 1.0 / std::sqrt(curvature); }

FlatTorus::FlatTorus(double a, double b) : side_a(a), side_b(b) {
  require_positive(side_a, "torus side a");
  require_positive(side_b, "torus side b");
}

EuclideanBall::EuclideanBall(int dim_, double radius_) : dim(dim_), radius(radius_) {
  require_dim(dim);
  require_positive(radius, "ball radius");
}

HyperbolicBall::HyperbolicBall(int dim_, double radius_) : dim(dim_), radius(radius_) {
  require_dim(dim);
  require_positive(radius, "ball radius");
}

Dumbbell::Dumbbell(double eps_, double length_) : eps(eps_), length(length_) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("dumbbell eps must lie in (0, 1)");
  require_positive(length, "dumbbell length");
}

Dumbbell Dumbbell::from_neck(double neck_circumference, double length) {
  require_positive(neck_circumference, "neck circumference");
  if (neck_circumference >= 2.0 * pi) {
    throw InputError("neck circumference must be below 2 pi");
  }
  const double s = neck_circumference / (2.0 * pi);
  // eps = 1 - sqrt(1 - s^2), written to avoid cancellation for thin necks.
  const double eps = s * s / (1.0 + std::sqrt(1.0 - s * s));
  return Dumbbell(eps, length);
}

double Dumbbell::neck_radius() const { return std::sqrt(eps * (2.0 - eps)); }
double Dumbbell::neck_circumference() const { return 2.0 * pi * neck_radius(); }
double Dumbbell::cut_angle() const { return std::acos(-1.0 + eps); }

std::string describe(const ModelSpace& space) {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const Circle& c) { os << "circle(" << c.length << ")"; },
                 [&](const Sphere& s) { os << "sphere(" << s.dim << "," << s.curvature << ")"; },
                 [&](const FlatTorus& t) { os << "torus(" << t.side_a << "," << t.side_b << ")"; },
                 [&](const EuclideanBall& b) { os << "eball(" << b.dim << "," << b.radius << ")"; },
                 [&](const HyperbolicBall& b) { os << "hball(" << b.dim << "," << b.radius << ")"; },
                 [&](const Dumbbell& d) { os << "dumbbell(" << d.eps << "," << d.length << ")"; },
             },
             space);
  return os.str();
}

int dimension(const ModelSpace& space) {
  return std::visit(Overloaded{
                        [](const Circle&) { return 1; },
                        [](const Sphere& s) { return s.dim; },
                        [](const FlatTorus&) { return 2; },
                        [](const EuclideanBall& b) { return b.dim; },
                        [](const HyperbolicBall& b) { return b.dim; },
                        [](const Dumbbell&) { return 2; },
                    },
                    space);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Exact:
      return "exact";
    case Provenance::Quadrature:
      return "quadrature";
    case Provenance::Asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

double unit_sphere_area(int n) {
  require_dim(n);
  return 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
}

double unit_ball_volume(int n) {
  require_dim(n);
  return std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

// ---- points ---------------------------------------------------------------

void validate_point(const ModelSpace& space, const PointRef& point) {
  constexpr double slack = 1e-12;
  std::visit(
      Overloaded{
          [&](const Circle& c) {
            const auto& a = as<ArcPoint>(point, "circle");
            if (!(a.s >= 0.0 && a.s < c.length)) throw InputError("arc parameter out of range");
          },
          [&](const Sphere& s) {
            check_unit(as<SpherePoint>(point, "sphere").x, s.dim + 1, "sphere point");
          },
          [&](const FlatTorus& t) {
            const auto& a = as<TorusPoint>(point, "torus");
            if (!(a.x >= 0.0 && a.x < t.side_a && a.y >= 0.0 && a.y < t.side_b)) {
              throw InputError("torus point outside the fundamental domain");
            }
          },
          [&](const EuclideanBall& b) {
            const auto& a = as<BallPoint>(point, "ball");
            if (!(a.r >= 0.0 && a.r <= b.radius * (1.0 + slack))) {
              throw InputError("ball point radius out of range");
            }
            check_unit(a.dir, b.dim, "ball direction");
          },
          [&](const HyperbolicBall& b) {
            const auto& a = as<BallPoint>(point, "ball");
            if (!(a.r >= 0.0 && a.r <= b.radius * (1.0 + slack))) {
              throw InputError("ball point radius out of range");
            }
            check_unit(a.dir, b.dim, "ball direction");
          },
          [&](const Dumbbell& d) {
            const auto& a = as<DumbbellPoint>(point, "dumbbell");
            double hi = 0.0;
            switch (a.region) {
              case DumbbellRegion::Sphere:
                hi = d.cut_angle();
                break;
              case DumbbellRegion::Cylinder:
                hi = d.length;
                break;
              case DumbbellRegion::Disk:
                hi = d.neck_radius();
                break;
            }
            if (!(a.u >= 0.0 && a.u <= hi * (1.0 + slack))) {
              throw InputError("dumbbell coordinate out of range");
            }
            if (!(a.phi >= 0.0 && a.phi < 2.0 * pi)) throw InputError("azimuth out of range");
          },
      },
      space);
}

PointRef sphere_north_pole(const Sphere& sphere) {
  std::vector<double> x(static_cast<std::size_t>(sphere.dim) + 1, 0.0);
  x.back() = 1.0;
  return SpherePoint{std::move(x)};
}

PointRef dumbbell_p() { return DumbbellPoint{DumbbellRegion::Sphere, 0.0, 0.0}; }
PointRef dumbbell_q(const Dumbbell&) { return DumbbellPoint{DumbbellRegion::Disk, 0.0, 0.0}; }

// ---- quantities -----------------------------------------------------------

Quantity diameter(const ModelSpace& space) {
  return std::visit(
      Overloaded{
          [](const Circle& c) { return Quantity{c.length / 2.0, Provenance::Exact}; },
          [](const Sphere& s) { return Quantity{pi * s.radius(), Provenance::Exact}; },
          [](const FlatTorus& t) {
            return Quantity{std::hypot(t.side_a, t.side_b) / 2.0, Provenance::Exact};
          },
          [](const EuclideanBall& b) { return Quantity{2.0 * b.radius, Provenance::Exact}; },
          [](const HyperbolicBall& b) { return Quantity{2.0 * b.radius, Provenance::Exact}; },
          [](const Dumbbell& d) { return Quantity{d.length + pi, Provenance::Asymptotic}; },
      },
      space);
}

Quantity volume(const ModelSpace& space) {
  return std::visit(
      Overloaded{
          [](const Circle& c) { return Quantity{c.length, Provenance::Exact}; },
          [](const Sphere& s) {
            return Quantity{unit_sphere_area(s.dim + 1) * std::pow(s.curvature, -s.dim / 2.0),
                            Provenance::Exact};
          },
          [](const FlatTorus& t) { return Quantity{t.side_a * t.side_b, Provenance::Exact}; },
          [](const EuclideanBall& b) {
            return Quantity{unit_ball_volume(b.dim) * std::pow(b.radius, b.dim),
                            Provenance::Exact};
          },
          [](const HyperbolicBall& b) {
            if (b.dim == 1) return Quantity{2.0 * b.radius, Provenance::Exact};
            return Quantity{hyperbolic_radial(b.dim, b.radius, false), Provenance::Quadrature};
          },
          [](const Dumbbell& d) {
            return Quantity{4.0 * pi + d.length * d.neck_circumference(), Provenance::Asymptotic};
          },
      },
      space);
}

double distance(const ModelSpace& space, const PointRef& p, const PointRef& q) {
  return std::visit(
      Overloaded{
          [&](const Circle& c) {
            const double a = as<ArcPoint>(p, "circle").s;
            const double b = as<ArcPoint>(q, "circle").s;
            const double arc = std::fmod(std::abs(a - b), c.length);
            return std::min(arc, c.length - arc);
          },
          [&](const Sphere& s) {
            const auto& a = as<SpherePoint>(p, "sphere").x;
            const auto& b = as<SpherePoint>(q, "sphere").x;
            check_unit(a, s.dim + 1, "sphere point");
            check_unit(b, s.dim + 1, "sphere point");
            const auto [dn, sn] = diff_sum_norms(a, b);
            return 2.0 * std::atan2(dn, sn) * s.radius();
          },
          [&](const FlatTorus& t) {
            const auto& a = as<TorusPoint>(p, "torus");
            const auto& b = as<TorusPoint>(q, "torus");
            double best = std::numeric_limits<double>::infinity();
            for (int i = -1; i <= 1; ++i) {
              for (int j = -1; j <= 1; ++j) {
                best = std::min(best, std::hypot(b.x + i * t.side_a - a.x, b.y + j * t.side_b - a.y));
              }
            }
            return best;
          },
          [&](const EuclideanBall&) {
            const auto& a = as<BallPoint>(p, "ball");
            const auto& b = as<BallPoint>(q, "ball");
            if (a.dir.size() != b.dir.size()) throw InputError("ball point dimensions differ");
            double s = 0.0;
            for (std::size_t i = 0; i < a.dir.size(); ++i) {
              const double d = a.r * a.dir[i] - b.r * b.dir[i];
              s += d * d;
            }
            return std::sqrt(s);
          },
          [&](const HyperbolicBall&) {
            const auto& a = as<BallPoint>(p, "ball");
            const auto& b = as<BallPoint>(q, "ball");
            if (a.dir.size() != b.dir.size()) throw InputError("ball point dimensions differ");
            // cosh d = cosh(r1 - r2) + sinh r1 sinh r2 (1 - cos theta), in asinh form.
            const auto [dn, sn] = diff_sum_norms(a.dir, b.dir);
            const double h = std::sinh((a.r - b.r) / 2.0);
            const double x = h * h + std::sinh(a.r) * std::sinh(b.r) * dn * dn / 4.0;
            return 2.0 * std::asinh(std::sqrt(std::max(x, 0.0)));
          },
          [&](const Dumbbell& d) {
            return dumbbell_distance(d, as<DumbbellPoint>(p, "dumbbell"),
                                     as<DumbbellPoint>(q, "dumbbell"));
          },
      },
      space);
}

Quantity mean_distance_exact(const ModelSpace& space, const PointRef& p) {
  validate_point(space, p);
  return std::visit(
      Overloaded{
          [](const Circle& c) { return Quantity{c.length * c.length / 4.0, Provenance::Exact}; },
          [&](const Sphere&) {
            // Homogeneous with d(p, x) + d(-p, x) = d(S), so f = d V / 2.
            return Quantity{0.5 * diameter(space).value * volume(space).value, Provenance::Exact};
          },
          [&](const FlatTorus& t) {
            if (t.side_a == t.side_b) {
              return Quantity{std::pow(t.side_a, 3) * torus_closed_form_unit_square(),
                              Provenance::Exact};
            }
            return Quantity{torus_quadrature(t, std::get<TorusPoint>(p)), Provenance::Quadrature};
          },
          [](const EuclideanBall&) -> Quantity {
            throw UnsupportedVariant("mean_distance_exact: use ball_mean_distance for balls");
          },
          [](const HyperbolicBall&) -> Quantity {
            throw UnsupportedVariant("mean_distance_exact: use ball_mean_distance for balls");
          },
          [](const Dumbbell&) -> Quantity {
            throw UnsupportedVariant("mean_distance_exact: use dumbbell_asymptotics");
          },
      },
      space);
}

Quantity ball_mean_distance(const ModelSpace& space) {
  if (const auto* b = std::get_if<EuclideanBall>(&space)) {
    // omega_{n-1} * int_0^d r * r^{n-1} dr
    return Quantity{unit_sphere_area(b->dim) * std::pow(b->radius, b->dim + 1) / (b->dim + 1),
                    Provenance::Exact};
  }
  if (const auto* b = std::get_if<HyperbolicBall>(&space)) {
    if (b->dim == 1) return Quantity{b->radius * b->radius, Provenance::Exact};
    return Quantity{hyperbolic_radial(b->dim, b->radius, true), Provenance::Quadrature};
  }
  throw UnsupportedVariant("ball_mean_distance requires a Euclidean or hyperbolic ball");
}

double ball_volume(const ModelSpace& space, double r) {
  auto check = [r](double radius) {
    if (!(r >= 0.0 && r <= radius * (1.0 + 1e-12))) throw InputError("radius outside the ball");
  };
  if (const auto* b = std::get_if<EuclideanBall>(&space)) {
    check(b->radius);
    return unit_ball_volume(b->dim) * std::pow(r, b->dim);
  }
  if (const auto* b = std::get_if<HyperbolicBall>(&space)) {
    check(b->radius);
    if (b->dim == 1) return 2.0 * r;
    return hyperbolic_radial(b->dim, r, false);
  }
  throw UnsupportedVariant("ball_volume requires a Euclidean or hyperbolic ball");
}

DumbbellAsymptotics dumbbell_asymptotics(const Dumbbell& db) {
  const double C = db.neck_circumference();
  if (C >= kMaxAsymptoticNeck) {
    std::ostringstream os;
    os << "neck circumference " << C << " is not small (need < " << kMaxAsymptoticNeck
       << "); the asymptotic formulas do not apply";
    throw PreconditionError(os.str());
  }
  const double L = db.length;
  const double a = db.neck_radius();
  const double cut = db.cut_angle();
  const double sphere_area = 4.0 * pi;

  DumbbellAsymptotics out{};
  out.neck_circumference = C;
  out.f_p = 0.5 * pi * sphere_area + C * (pi * L + L * L / 2.0);
  out.dV = (L + pi) * (sphere_area + L * C);

  // Distance from q: rho on the disk, a + (L - t) on the cylinder, and
  // a + L + (cut - theta) on the sphere part.
  constexpr double tol = 1e-10;
  const double disk =
      integrate([](double rho) { return rho * 2.0 * pi * rho; }, 0.0, a, tol).value;
  const double cylinder =
      integrate([&](double t) { return (a + L - t) * C; }, 0.0, L, tol).value;
  const double cap = integrate(
      [&](double theta) { return (a + L + cut - theta) * 2.0 * pi * std::sin(theta); }, 0.0,
      cut, tol).value;
  out.f_q = disk + cylinder + cap;
  return out;
}

DumbbellAsymptotics dumbbell_asymptotics(double eps, double length) {
  return dumbbell_asymptotics(Dumbbell(eps, length));
}

}  // namespace meandist
