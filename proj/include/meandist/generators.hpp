#pragma once

#include "meandist/discrete_manifold.hpp"
#include "meandist/mesh.hpp"

namespace meandist {

// N equally spaced vertices on a closed curve of the given length, annotated
// with arc parameters on Circle{length}.
DiscreteManifold cycle(std::size_t n, double length);

// N x N lattice on the flat torus side_a x side_b, triangulated (right, up and
// one diagonal neighbor), annotated with torus coordinates.
DiscreteManifold torus_grid(std::size_t n, double side_a, double side_b);

// Regular icosahedron inscribed in the unit sphere, vertex 0 at the north pole
// and vertex 11 at the south pole.
TriangleMesh icosahedron();

// Icosahedron subdivided `levels` times and projected onto the unit sphere,
// annotated with points of Sphere{2, 1}. Vertex 0 is the north pole.
DiscreteManifold icosphere(int levels);

// Triangulated planar square [-side/2, side/2]^2 with (n+1)^2 vertices; the
// center vertex is at index n/2 * (n+1) + n/2 when n is even.
DiscreteManifold grid_patch(std::size_t n, double side);

}  // namespace meandist
