#include "fwps/singularity.hpp"

#include <algorithm>

namespace fwps {

SingularityReport classify_polytope(const FanoSimplex& p) {
  SingularityReport rep;
  rep.gorenstein = true;
  for (const Int& m : p.facet_levels())
    if (m != 1) rep.gorenstein = false;

  // Height-1 points of the fundamental parallelepiped over P x {1} are
  // exactly the non-vertex lattice points of P, origin included, and their
  // fractional coefficients are barycentric coordinates.
  std::vector<IntVec> interior_nonzero, boundary_nonvertex;
  for (const BoxPoint& bp : simplex_box_points(p)) {
    if (bp.height() != 1) continue;
    IntVec point(bp.z.begin(), bp.z.end() - 1);
    bool is_origin = std::all_of(point.begin(), point.end(), [](const Int& c) { return c == 0; });
    if (is_origin) continue;
    bool interior = std::all_of(bp.bary.begin(), bp.bary.end(), [](const Rat& b) { return b > 0; });
    (interior ? interior_nonzero : boundary_nonvertex).push_back(std::move(point));
  }
  std::sort(interior_nonzero.begin(), interior_nonzero.end());
  std::sort(boundary_nonvertex.begin(), boundary_nonvertex.end());

  rep.canonical = interior_nonzero.empty();
  rep.terminal = interior_nonzero.empty() && boundary_nonvertex.empty();
  if (!rep.canonical)
    rep.witness_point = interior_nonzero.front();
  else if (!rep.terminal)
    rep.witness_point = boundary_nonvertex.front();
  return rep;
}

Rat sum_of_fractional_parts(const WeightSystem& ws, const Int& kappa) {
  Int h = ws.sum();
  if (kappa < 0 || kappa >= h) throw ValidationError("kappa-out-of-range");
  Int num = 0;
  for (const Int& l : ws.weights) num += mod_floor(l * kappa, h);
  return Rat(num, h);
}

SingularityReport classify_weights(const WeightSystem& ws, const WeightClassifyOptions& opts) {
  if (ws.multiplicity != 1)
    throw ValidationError("multiplicity-not-one", "weight criterion is stated for weighted projective space");
  const std::size_t n = ws.n();
  const Int h = ws.sum();

  SingularityReport rep;
  rep.gorenstein = true;
  for (const Int& l : ws.weights)
    if (h % l != 0) rep.gorenstein = false;

  rep.canonical = rep.terminal = true;
  if (h < 4) return rep;  // kappa range {2,...,h-2} empty: vacuously terminal

  IntVec kappas;
  if (h <= opts.max_h) {
    for (Int k = 2; k <= h - 2; ++k) kappas.push_back(k);
  } else if (opts.kappa_list) {
    kappas = *opts.kappa_list;
    for (const Int& k : kappas)
      if (k < 2 || k > h - 2) throw ValidationError("kappa-out-of-range");
    rep.complete = false;
  } else {
    throw ResourceLimit("weight sum " + h.str() + " exceeds the kappa scan bound " + opts.max_h.str() +
                        "; pass explicit kappas");
  }

  std::optional<Int> first_canonical_fail, first_terminal_fail;
  for (const Int& kappa : kappas) {
    Int num = 0;
    for (const Int& l : ws.weights) num += mod_floor(l * kappa, h);
    Int s = exact_div(num, h, "fractional sum");  // integral because the weights sum to h
    if (!first_canonical_fail && (s < 1 || s > Int(n - 1))) first_canonical_fail = kappa;
    if (!first_terminal_fail && (s < 2 || s > Int(n - 1))) first_terminal_fail = kappa;
    if (first_canonical_fail && first_terminal_fail) break;
  }
  rep.canonical = !first_canonical_fail;
  rep.terminal = !first_terminal_fail;
  if (first_canonical_fail)
    rep.witness_kappa = first_canonical_fail;
  else if (first_terminal_fail)
    rep.witness_kappa = first_terminal_fail;
  return rep;
}

}  // namespace fwps
