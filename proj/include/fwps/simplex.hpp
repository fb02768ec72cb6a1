#pragma once

#include <optional>
#include <vector>

#include "fwps/geometry.hpp"
#include "fwps/lattice.hpp"

namespace fwps {

// Reduced positive integer weights of a Fano simplex together with the
// multiplicity of the vertex sublattice. Weight i belongs to vertex i of
// whichever simplex produced the system.
struct WeightSystem {
  IntVec weights;
  Int multiplicity = 1;

  WeightSystem() = default;
  WeightSystem(IntVec w, Int mult = Int(1)) : weights(std::move(w)), multiplicity(std::move(mult)) {}
  WeightSystem(std::initializer_list<int> w, Int mult = Int(1)) : multiplicity(std::move(mult)) {
    for (int c : w) weights.emplace_back(c);
  }

  std::size_t n() const { return weights.empty() ? 0 : weights.size() - 1; }
  Int sum() const;
  Int product() const;
  IntVec sorted() const;
  bool reduced() const;      // gcd of all weights is 1
  bool well_formed() const;  // any n of the n+1 weights are coprime

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

// A full-dimensional lattice simplex with primitive vertices and the origin
// strictly interior. Weights, multiplicity and facet data are computed at
// validation time; instances are immutable afterwards.
class FanoSimplex {
 public:
  // Throws ValidationError with clause "wrong-vertex-count", "degenerate",
  // "origin-not-interior" or "non-primitive-vertex".
  static FanoSimplex validate(std::vector<LatticeVector> vertices);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& vertices() const { return verts_; }
  const LatticeVector& vertex(std::size_t i) const { return verts_[i]; }
  std::vector<IntVec> vertex_set() const;  // raw coordinate vectors

  const WeightSystem& weights() const { return weights_; }
  const Int& multiplicity() const { return weights_.multiplicity; }

  // Facet opposite vertex i as a.x >= -m with a primitive, m > 0.
  const std::vector<HalfSpace>& facets() const { return facets_; }
  // m_i for facet i; all equal 1 exactly when the simplex is reflexive.
  const IntVec& facet_levels() const { return levels_; }

  friend bool operator==(const FanoSimplex&, const FanoSimplex&) = default;

 private:
  FanoSimplex() = default;
  std::size_t dim_ = 0;
  std::vector<LatticeVector> verts_;
  WeightSystem weights_;
  std::vector<HalfSpace> facets_;
  IntVec levels_;
};

inline WeightSystem weights_of(const FanoSimplex& p) { return p.weights(); }
inline Int multiplicity(const FanoSimplex& p) { return p.multiplicity(); }

// Anticanonical degree (sum of weights)^n / (product * multiplicity).
Rat degree(const WeightSystem& ws);

// The simplex of the weighted projective space with these weights: the
// standard basis of Z^{n+1} pushed through an isomorphism
// Z^{n+1} / Z.(weights) = Z^n, then Hermite-canonicalised so equal inputs
// give byte-equal outputs. Requires multiplicity 1.
FanoSimplex simplex_from_weights(const WeightSystem& ws);

// Rational polytope with both vertex and halfspace descriptions; only ever
// built for duals, whose inequalities have integer data.
struct RationalPolytope {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;
  std::vector<HalfSpace> ineqs;  // a.x >= b
};

// Polar dual {u : u(v) >= -1 for all v in P}.
RationalPolytope dual_polytope(const FanoSimplex& p);
// Facet functionals of an arbitrary full-dimensional polytope with the
// origin strictly interior (the dual's vertex set).
std::vector<RatVec> dual_vertices(const std::vector<IntVec>& verts);

// |kQ ∩ M| by exact enumeration.
Int lattice_point_count(const RationalPolytope& q, const Int& k);
// |kP ∩ N| via the box points of the cone over P x {1} (Ehrhart-style).
Int lattice_point_count(const FanoSimplex& p, const Int& k);

// Lattice points of the half-open parallelepiped spanned by (v_i, 1).
// Height is the last coordinate; bary are the fractional coefficients,
// which for height-1 points are barycentric coordinates of a non-vertex
// lattice point of P.
struct BoxPoint {
  IntVec z;
  RatVec bary;
  Int height() const { return z.back(); }
};
std::vector<BoxPoint> simplex_box_points(const FanoSimplex& p);

// GL_n(Z)-equivalence, decided by exhaustive weight-respecting vertex
// matchings. Intended for desk-scale dimensions.
bool simplex_equivalent(const FanoSimplex& p, const FanoSimplex& q);

}  // namespace fwps
