#include "fwps/mutation.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fwps {

namespace {

Int value_at(const DualVector& w, const IntVec& v) {
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
  return s;
}

}  // namespace

HeightData heights(const std::vector<IntVec>& polytope_vertices, const DualVector& w) {
  if (!w.primitive()) throw ValidationError("w-not-primitive");
  HeightData hd;
  hd.w = w;
  bool first = true;
  for (const auto& v : polytope_vertices) {
    Int h = value_at(w, v);
    if (first || h < hd.h_min) hd.h_min = h;
    if (first || h > hd.h_max) hd.h_max = h;
    first = false;
  }
  for (const auto& pt : lattice_points_of(polytope_vertices)) hd.slices[value_at(w, pt)].push_back(pt);
  for (auto& [h, pts] : hd.slices) std::sort(pts.begin(), pts.end());
  return hd;
}

namespace {

// Maximal lattice G_h: points x with x + (-h)F inside the slice hull. Since
// the slice holds every lattice point of P at height h, hull membership of
// the (integral) translates is plain set membership.
std::vector<IntVec> erosion_points(const std::vector<IntVec>& slice, const std::vector<IntVec>& fpoints,
                                   const Int& minus_h) {
  std::set<IntVec> slice_set(slice.begin(), slice.end());
  std::vector<IntVec> shifted;
  shifted.reserve(fpoints.size());
  for (const auto& f : fpoints) shifted.push_back(scaled(f, minus_h));
  std::vector<IntVec> out;
  for (const auto& s : slice) {
    IntVec x = sub(s, shifted[0]);
    bool ok = true;
    for (const auto& f : shifted)
      if (!slice_set.count(add(x, f))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Minkowski sum of two point clouds (not vertex-reduced).
std::vector<IntVec> sum_points(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  std::vector<IntVec> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(add(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_g_map(const HeightData& hd, const std::vector<IntVec>& polytope_vertices,
                 const std::vector<IntVec>& fpoints, const std::map<Int, std::vector<IntVec>>& g) {
  for (Int h = hd.h_min; h < 0; ++h) {
    const std::vector<IntVec>* slice = hd.slice(h);
    std::vector<IntVec> verts_here;
    for (const auto& v : polytope_vertices)
      if (value_at(hd.w, v) == h) verts_here.push_back(v);

    auto git = g.find(h);
    if (git == g.end() || git->second.empty()) {
      if (!verts_here.empty())
        throw ValidationError("not-a-factor", "no G at height " + h.str() + " but vertices present");
      continue;
    }
    if (!slice)
      throw ValidationError("not-a-factor", "G nonempty at lattice-point-free height " + h.str());

    std::vector<IntVec> shifted;
    for (const auto& f : fpoints) shifted.push_back(scaled(f, -h));
    std::vector<IntVec> sums = sum_points(git->second, shifted);
    // G_h + (-h)F must stay inside the slice: integral sums, so membership
    // in the slice's lattice point set is exact.
    std::set<IntVec> slice_set(slice->begin(), slice->end());
    for (const auto& s : sums)
      if (!slice_set.count(s))
        throw ValidationError("not-a-factor", "G + (-h)F leaves the slice at height " + h.str());
    for (const auto& v : verts_here)
      if (!in_convex_hull(v, sums))
        throw ValidationError("not-a-factor", "vertex uncovered at height " + h.str());
  }
}

}  // namespace

Factor validate_factor(const std::vector<IntVec>& polytope_vertices, const DualVector& w,
                       const std::vector<IntVec>& factor_points) {
  if (factor_points.empty()) throw ValidationError("not-a-factor", "empty factor");
  for (const auto& f : factor_points)
    if (value_at(w, f) != 0) throw ValidationError("not-a-factor", "factor not at height zero");

  HeightData hd = heights(polytope_vertices, w);
  Factor factor;
  factor.f = factor_points;
  for (Int h = hd.h_min; h < 0; ++h) {
    const std::vector<IntVec>* slice = hd.slice(h);
    bool has_vertex = false;
    for (const auto& v : polytope_vertices)
      if (value_at(w, v) == h) {
        has_vertex = true;
        break;
      }
    if (!slice) {
      assert(!has_vertex);
      continue;
    }
    std::vector<IntVec> g = erosion_points(*slice, factor_points, -h);
    if (g.empty() && has_vertex)
      throw ValidationError("not-a-factor", "erosion empty at height " + h.str());
    if (!g.empty()) factor.g[h] = std::move(g);
  }
  check_g_map(hd, polytope_vertices, factor.f, factor.g);
  return factor;
}

std::vector<IntVec> mutate_with_g(const std::vector<IntVec>& polytope_vertices, const DualVector& w,
                                  const Factor& factor) {
  HeightData hd = heights(polytope_vertices, w);
  check_g_map(hd, polytope_vertices, factor.f, factor.g);

  std::vector<IntVec> candidates;
  for (const auto& [h, pts] : factor.g) {
    assert(h < 0);
    candidates.insert(candidates.end(), pts.begin(), pts.end());
  }
  for (Int h = 0; h <= hd.h_max; ++h) {
    const std::vector<IntVec>* slice = hd.slice(h);
    if (!slice) continue;
    std::vector<IntVec> shifted;
    for (const auto& f : factor.f) shifted.push_back(scaled(f, h));
    for (const auto& s : sum_points(*slice, shifted)) candidates.push_back(s);
  }
  return hull_vertices(std::move(candidates));
}

std::vector<IntVec> mutate(const std::vector<IntVec>& polytope_vertices, const DualVector& w,
                           const std::vector<IntVec>& factor_points) {
  Factor factor = validate_factor(polytope_vertices, w, factor_points);
  return mutate_with_g(polytope_vertices, w, factor);
}

std::vector<MutationMove> find_simplex_mutations(const FanoSimplex& p) {
  const std::size_t n = p.dim();
  std::vector<MutationMove> moves;

  for (std::size_t apex = 0; apex <= n; ++apex) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != apex) rest.push_back(i);

    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<std::size_t> face, zero;
      for (std::size_t b = 0; b < n; ++b)
        ((mask >> b) & 1 ? face : zero).push_back(rest[b]);
      if (face.size() < 2) continue;  // a point slice gives an isomorphism

      // w is pinned (up to sign) by vanishing on the zero set and on the
      // differences within the minimal face.
      std::vector<IntVec> rows;
      for (std::size_t z : zero) rows.push_back(p.vertex(z).x);
      for (std::size_t i = 1; i < face.size(); ++i)
        rows.push_back(sub(p.vertex(face[i]).x, p.vertex(face[0]).x));
      DualVector w(primitive_kernel_vector(IntMatrix::from_rows(rows)));

      Int h_max = pair(w, p.vertex(apex));
      assert(h_max != 0);
      if (h_max < 0) {
        w = w.negated();
        h_max = -h_max;
      }
      Int h_min = pair(w, p.vertex(face[0]));
      assert(h_min < 0);

      bool divisible = true;
      Int depth = -h_min;
      std::vector<IntVec> fverts{IntVec(n, Int(0))};
      for (std::size_t i = 1; i < face.size() && divisible; ++i) {
        IntVec diff = sub(p.vertex(face[i]).x, p.vertex(face[0]).x);
        for (const Int& c : diff)
          if (c % depth != 0) {
            divisible = false;
            break;
          }
        if (divisible) fverts.push_back(divided(diff, depth));
      }
      if (!divisible) continue;

      MutationMove mv;
      mv.w = std::move(w);
      mv.apex = apex;
      mv.min_face = face;
      mv.zero_set = zero;
      mv.h_min = h_min;
      mv.h_max = h_max;
      mv.factor_vertices = std::move(fverts);
      Int face_sum = 0;
      for (std::size_t s : face) face_sum += p.weights().weights[s];
      mv.trivial = (face_sum == p.weights().weights[apex]);
      moves.push_back(std::move(mv));
    }
  }
  return moves;
}

FanoSimplex mutate_simplex(const FanoSimplex& p, const MutationMove& move) {
  // Re-derive the heights; a move that does not fit P is a usage bug.
  if (pair(move.w, p.vertex(move.apex)) != move.h_max) throw std::logic_error("mutate_simplex: stale move");
  for (std::size_t s : move.min_face)
    if (pair(move.w, p.vertex(s)) != move.h_min) throw std::logic_error("mutate_simplex: stale move");
  for (std::size_t z : move.zero_set)
    if (pair(move.w, p.vertex(z)) != 0) throw std::logic_error("mutate_simplex: stale move");

  Int depth = -move.h_min;
  std::vector<LatticeVector> out = p.vertices();
  const IntVec& anchor = p.vertex(move.min_face[0]).x;
  for (std::size_t i = 1; i < move.min_face.size(); ++i) {
    std::size_t s = move.min_face[i];
    IntVec step = divided(sub(p.vertex(s).x, anchor), depth);
    out[s] = LatticeVector(add(p.vertex(move.apex).x, scaled(step, move.h_max)));
  }
  return FanoSimplex::validate(std::move(out));
}

MutationLabeling labeling_of(const MutationMove& move) { return {move.apex, move.min_face}; }

WeightPrediction predict_weights(const WeightSystem& ws, const MutationLabeling& lab) {
  const std::size_t count = ws.weights.size();
  const std::size_t k = lab.min_face.size();
  if (k < 2 || lab.apex >= count) throw ValidationError("bad-labeling");
  std::vector<bool> in_face(count, false);
  for (std::size_t s : lab.min_face) {
    if (s >= count || s == lab.apex || in_face[s]) throw ValidationError("bad-labeling");
    in_face[s] = true;
  }

  const Int& l0 = ws.weights[lab.apex];
  Int face_sum = 0;
  for (std::size_t s : lab.min_face) face_sum += ws.weights[s];

  WeightPrediction pred;
  pred.raw.resize(count);
  pred.raw[lab.apex] = l0 * ws.weights[lab.min_face[0]];
  pred.raw[lab.min_face[0]] = face_sum * face_sum;
  for (std::size_t i = 1; i < k; ++i) pred.raw[lab.min_face[i]] = l0 * ws.weights[lab.min_face[i]];
  for (std::size_t j = 0; j < count; ++j)
    if (j != lab.apex && !in_face[j]) pred.raw[j] = ws.weights[j] * face_sum;

  pred.d = gcd_of(pred.raw);
  pred.reduced = divided(pred.raw, pred.d);
  pred.well_formed = WeightSystem(pred.reduced).well_formed();
  // d * mult(X)/mult(Y) = l0^{k-1} / S^{k-2}
  pred.mult_ratio = Rat(pow(l0, static_cast<unsigned>(k - 1)),
                        pow(face_sum, static_cast<unsigned>(k - 2)) * pred.d);
  return pred;
}

Int forced_d_mult_preserving(const WeightSystem& ws, const MutationLabeling& lab) {
  const Int& l0 = ws.weights[lab.apex];
  Int face_sum = 0;
  for (std::size_t s : lab.min_face) face_sum += ws.weights[s];
  const std::size_t k = lab.min_face.size();
  Int num = pow(l0, static_cast<unsigned>(k - 1));
  Int den = pow(face_sum, static_cast<unsigned>(k - 2));
  if (num % den != 0) throw ValidationError("mutation-cannot-preserve-multiplicity");
  return num / den;
}

bool check_corollary1(const Int& l0, const Int& l1, const Int& l2) {
  if ((l1 + l2) * (l1 + l2) % l0 != 0) return false;
  return l0 % gcd(l1, l2) == 0;
}

}  // namespace fwps
