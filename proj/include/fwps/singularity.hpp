#pragma once

#include <optional>

#include "fwps/simplex.hpp"

namespace fwps {

struct SingularityReport {
  bool canonical = false;
  bool terminal = false;
  bool gorenstein = false;
  // Weight-side criterion: smallest kappa violating the canonical bound, or
  // failing that, the terminal bound.
  std::optional<Int> witness_kappa;
  // Polytope-side criterion: an offending lattice point (interior when the
  // canonical test fails, any non-vertex point otherwise).
  std::optional<IntVec> witness_point;
  // False when only a supplied list of kappas was checked, so "true" flags
  // were not actually certified.
  bool complete = true;
};

// Lattice-point classification on the spanning fan: canonical iff the origin
// is the only interior lattice point, terminal iff there are no lattice
// points besides the vertices and the origin, Gorenstein iff every facet
// functional is integral.
SingularityReport classify_polytope(const FanoSimplex& p);

// sum_i { weights_i * kappa / h } for h the weight sum; an integer in [0, n]
// whenever kappa is an integer. Requires 0 <= kappa < h.
Rat sum_of_fractional_parts(const WeightSystem& ws, const Int& kappa);

struct WeightClassifyOptions {
  Int max_h = Int(1000000);           // full kappa scans refused above this
  std::optional<IntVec> kappa_list;   // explicit witnesses for very large h
};

// Fractional-part criterion for weighted projective space (multiplicity 1):
// canonical iff the sum lies in {1,...,n-1} for every kappa in {2,...,h-2},
// terminal iff it lies in {2,...,n-1}. With h < 4 the range is empty and
// both hold vacuously. Throws ResourceLimit when h exceeds max_h and no
// kappa list is supplied.
SingularityReport classify_weights(const WeightSystem& ws, const WeightClassifyOptions& opts = {});

}  // namespace fwps
