#pragma once

#include <functional>
#include <vector>

#include "fwps/lattice.hpp"

namespace fwps {

using RatVec = std::vector<Rat>;

RatVec to_rat(const IntVec& v);

// Closed halfspace a.x >= b with integer data.
struct HalfSpace {
  IntVec a;
  Int b;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& l, const HalfSpace& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
};

// Exact membership test p in conv(points); LP feasibility with rational
// simplex pivoting (Bland's rule). Works in any dimension, including for
// lower-dimensional hulls.
bool in_convex_hull(const RatVec& p, const std::vector<IntVec>& points);
bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& points);

// Reduce a point set to the vertices of its convex hull (sorted, deduplicated).
std::vector<IntVec> hull_vertices(std::vector<IntVec> points);

// Facets of a full-dimensional polytope given by vertices. Brute force over
// n-subsets; adequate for the handful of vertices we ever see.
std::vector<HalfSpace> polytope_facets(const std::vector<IntVec>& verts);

// Visit every lattice point of the (bounded) region cut out by `ineqs`.
// A Fourier-Motzkin cascade gives exact per-coordinate bounds, so the walk
// never strays far outside the polytope even when it is thin and skewed.
void for_each_lattice_point(const std::vector<HalfSpace>& ineqs, std::size_t dim,
                            const std::function<void(const IntVec&)>& fn);
std::vector<IntVec> lattice_points_in(const std::vector<HalfSpace>& ineqs, std::size_t dim);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Rank of the affine hull of a point set.
std::size_t affine_rank(const std::vector<IntVec>& points);

// All lattice points of a full-dimensional polytope given by vertices.
std::vector<IntVec> lattice_points_of(const std::vector<IntVec>& verts);

}  // namespace fwps
