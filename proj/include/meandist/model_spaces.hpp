#pragma once

// Closed-form model geometries used as ground truth for the discrete engine.
//
// Every space exposes exact distance, volume and diameter. The dumbbell is the
// one exception: its distance/volume/diameter are asymptotic approximations
// that ignore O(eps) geometry near the removed cap, and every quantity computed
// on it carries an `asymptotic` flag.

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace meandist {

struct Circle {
  explicit Circle(double length);
  double length;
};

// Round sphere S^n_k of sectional curvature k, radius 1/sqrt(k).
struct Sphere {
  Sphere(int dim, double curvature);
  int dim;
  double curvature;
  double radius() const;
};

// R^2 modulo the rectangular lattice side_a Z x side_b Z.
struct FlatTorus {
  FlatTorus(double side_a, double side_b);
  double side_a;
  double side_b;
};

struct EuclideanBall {
  EuclideanBall(int dim, double radius);
  int dim;
  double radius;
};

// Geodesic ball of the given radius in hyperbolic space of curvature -1.
struct HyperbolicBall {
  HyperbolicBall(int dim, double radius);
  int dim;
  double radius;
};

// Unit sphere with the cap z < -1 + eps removed, a cylinder of length `length`
// glued to the cut circle, and a flat disk closing the bottom.
struct Dumbbell {
  Dumbbell(double eps, double length);
  // Builds the dumbbell whose neck circumference is `neck_circumference`,
  // taking the smaller root eps of C = 2 pi sqrt(2 eps - eps^2).
  static Dumbbell from_neck(double neck_circumference, double length);

  double eps;
  double length;
  double neck_radius() const;         // sqrt(2 eps - eps^2)
  double neck_circumference() const;  // 2 pi neck_radius
  double cut_angle() const;           // polar angle of the cut circle, acos(-1 + eps)
};

using ModelSpace =
    std::variant<Circle, Sphere, FlatTorus, EuclideanBall, HyperbolicBall, Dumbbell>;

std::string describe(const ModelSpace& space);
int dimension(const ModelSpace& space);

// ---- points ---------------------------------------------------------------

struct ArcPoint {
  double s;  // arc parameter in [0, length)
};

struct SpherePoint {
  std::vector<double> x;  // unit vector in R^{n+1}
};

struct TorusPoint {
  double x;  // [0, side_a)
  double y;  // [0, side_b)
};

// Polar coordinates about the ball center.
struct BallPoint {
  double r;                  // [0, radius]
  std::vector<double> dir;   // unit vector in R^n
};

enum class DumbbellRegion { Sphere, Cylinder, Disk };

// `u` is the polar angle from the north pole on the sphere part, the depth
// below the cut circle on the cylinder, and the distance from the axis on the
// bottom disk. `phi` is the azimuth in [0, 2 pi).
struct DumbbellPoint {
  DumbbellRegion region;
  double u;
  double phi;
};

using PointRef = std::variant<ArcPoint, SpherePoint, TorusPoint, BallPoint, DumbbellPoint>;

// Throws InputError if `point` does not lie in the domain of `space`.
void validate_point(const ModelSpace& space, const PointRef& point);

// ---- quantities -----------------------------------------------------------

enum class Provenance { Exact, Quadrature, Asymptotic };
std::string to_string(Provenance p);

struct Quantity {
  double value;
  Provenance provenance;
  bool asymptotic() const { return provenance == Provenance::Asymptotic; }
};

Quantity diameter(const ModelSpace& space);
Quantity volume(const ModelSpace& space);
double distance(const ModelSpace& space, const PointRef& p, const PointRef& q);

// f(p) for spaces where it is independent of p. For squares the torus value
// is the closed form; other rectangles are integrated numerically about `p`.
Quantity mean_distance_exact(const ModelSpace& space, const PointRef& p);

// Integral of the distance from the center over a Euclidean or hyperbolic ball.
Quantity ball_mean_distance(const ModelSpace& space);

// Volume of the concentric ball of radius r <= radius in a ball variant.
double ball_volume(const ModelSpace& space, double r);

struct DumbbellAsymptotics {
  double neck_circumference;
  double f_p;  // f at the north pole
  double f_q;  // f at the disk center (numerical quadrature)
  double dV;   // asymptotic diameter times asymptotic volume
};

// Largest neck circumference for which the asymptotic formulas are used.
inline constexpr double kMaxAsymptoticNeck = 0.1;

DumbbellAsymptotics dumbbell_asymptotics(const Dumbbell& dumbbell);
DumbbellAsymptotics dumbbell_asymptotics(double eps, double length);

// Canonical points.
PointRef sphere_north_pole(const Sphere& sphere);
PointRef dumbbell_p();
PointRef dumbbell_q(const Dumbbell& dumbbell);

// Surface area of the unit sphere S^{n-1} in R^n (2 for n = 1).
double unit_sphere_area(int n);
// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

}  // namespace meandist
