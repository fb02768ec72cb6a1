#pragma once

#include <map>
#include <vector>

#include "fwps/simplex.hpp"

namespace fwps {

// Heights of a lattice polytope under a primitive w: extreme heights and,
// per height, every lattice point of P at that height. The hull of the
// points stored at height h is the slice w_h(P).
struct HeightData {
  DualVector w;
  Int h_min, h_max;
  std::map<Int, std::vector<IntVec>> slices;

  const std::vector<IntVec>* slice(const Int& h) const {
    auto it = slices.find(h);
    return it == slices.end() ? nullptr : &it->second;
  }
};

HeightData heights(const std::vector<IntVec>& polytope_vertices, const DualVector& w);

// A factor F for (P, w) together with a witness family G_h for the negative
// heights. g[h] holds lattice points whose hull is the chosen G_h; heights
// with empty G_h are omitted.
struct Factor {
  std::vector<IntVec> f;
  std::map<Int, std::vector<IntVec>> g;
};

// Checks Definition-of-factor conditions and returns the maximal lattice
// choice of the G_h (Minkowski erosion of each slice by (-h)F). Throws
// ValidationError("not-a-factor", ...) when some slice cannot absorb its
// vertices.
Factor validate_factor(const std::vector<IntVec>& polytope_vertices, const DualVector& w,
                       const std::vector<IntVec>& factor_points);

// The combinatorial mutation: hull of the G_h below height zero and of
// w_h(P) + hF above. Output is the sorted vertex list.
std::vector<IntVec> mutate(const std::vector<IntVec>& polytope_vertices, const DualVector& w,
                           const std::vector<IntVec>& factor_points);
// Same, with a caller-chosen (and re-validated) G family; the result must
// not depend on the choice.
std::vector<IntVec> mutate_with_g(const std::vector<IntVec>& polytope_vertices, const DualVector& w,
                                  const Factor& factor);

// One admissible mutation of a Fano simplex: the partition of the vertices
// into apex / minimal face / zero set, the pinned height function and the
// induced factor. min_face is ascending; its first entry anchors the factor.
struct MutationMove {
  DualVector w;
  std::size_t apex = 0;
  std::vector<std::size_t> min_face;
  std::vector<std::size_t> zero_set;
  Int h_min, h_max;
  std::vector<IntVec> factor_vertices;
  bool trivial = false;  // min-face weights sum to the apex weight

  std::size_t k() const { return min_face.size(); }
};

// All mutations of P to another simplex: one candidate w per vertex
// partition (apex, min-face of size >= 2, zero set), kept when the
// divisibility condition on the minimal face holds. Mutations over a single
// vertex are isomorphisms and are not reported.
std::vector<MutationMove> find_simplex_mutations(const FanoSimplex& p);

// Closed-form simplex mutation: keeps apex, anchor and zero-set vertices,
// sends the other min-face vertices to v_apex + (h_max/|h_min|)(v_s - v_anchor).
FanoSimplex mutate_simplex(const FanoSimplex& p, const MutationMove& move);

struct MutationLabeling {
  std::size_t apex = 0;
  std::vector<std::size_t> min_face;  // ascending, first entry plays the kept role
};

MutationLabeling labeling_of(const MutationMove& move);

// Weight transformation under a mutation, kept in output vertex positions so
// it can be compared entry-by-entry with weights_of(mutate_simplex(...)).
struct WeightPrediction {
  IntVec raw;      // (apex: l0*l1, anchor: S^2, min-face: l0*ls, zero: lz*S)
  Int d;           // gcd(raw)
  IntVec reduced;  // raw / d
  bool well_formed = false;
  Rat mult_ratio;  // mult(X)/mult(Y) forced by d
};

WeightPrediction predict_weights(const WeightSystem& ws, const MutationLabeling& lab);

// d when the mutation preserves multiplicity: lambda_0^{k-1} / S^{k-2}.
// Throws ValidationError("mutation-cannot-preserve-multiplicity") when that
// is not an integer.
Int forced_d_mult_preserving(const WeightSystem& ws, const MutationLabeling& lab);

// Necessary conditions on the three distinguished weights of an edge
// mutation between weighted projective spaces.
bool check_corollary1(const Int& l0, const Int& l1, const Int& l2);

}  // namespace fwps
