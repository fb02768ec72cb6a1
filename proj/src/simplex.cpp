#include "fwps/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace fwps {

Int WeightSystem::sum() const {
  Int s = 0;
  for (const Int& w : weights) s += w;
  return s;
}

Int WeightSystem::product() const {
  Int p = 1;
  for (const Int& w : weights) p *= w;
  return p;
}

IntVec WeightSystem::sorted() const {
  IntVec s = weights;
  std::sort(s.begin(), s.end());
  return s;
}

bool WeightSystem::reduced() const { return gcd_of(weights) == 1; }

bool WeightSystem::well_formed() const {
  const std::size_t m = weights.size();
  if (m < 2) return false;
  IntVec prefix(m + 1, 0), suffix(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = gcd(prefix[i], weights[i]);
  for (std::size_t i = m; i-- > 0;) suffix[i] = gcd(suffix[i + 1], weights[i]);
  for (std::size_t i = 0; i < m; ++i)
    if (gcd(prefix[i], suffix[i + 1]) != 1) return false;
  return true;
}

FanoSimplex FanoSimplex::validate(std::vector<LatticeVector> vertices) {
  if (vertices.empty()) throw ValidationError("wrong-vertex-count", "no vertices");
  const std::size_t n = vertices[0].dim();
  if (n == 0) throw ValidationError("wrong-vertex-count", "zero-dimensional ambient space");
  for (const auto& v : vertices)
    if (v.dim() != n) throw ValidationError("dimension-mismatch", "ragged vertex list");
  if (vertices.size() != n + 1)
    throw ValidationError("wrong-vertex-count",
                          "need n+1 vertices in dimension n, got " + std::to_string(vertices.size()));

  // Kernel of the n x (n+1) vertex matrix from maximal minors: the unique
  // linear relation among the vertices, up to scale.
  IntVec c(n + 1);
  bool all_zero = true;
  for (std::size_t j = 0; j <= n; ++j) {
    IntMatrix minor(n, n);
    std::size_t cc = 0;
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == j) continue;
      for (std::size_t i = 0; i < n; ++i) minor(i, cc) = vertices[v][i];
      ++cc;
    }
    // columns are the other vertices; track the alternating sign
    Int d = det(minor);
    c[j] = (j % 2 == 0) ? d : -d;
    if (c[j] != 0) all_zero = false;
  }
  Int csum = 0;
  for (const Int& x : c) csum += x;
  if (all_zero || csum == 0) throw ValidationError("degenerate", "vertices are affinely dependent");

  // Origin strictly interior iff the relation has all coefficients of one
  // strict sign.
  int sign = 0;
  for (const Int& x : c) {
    if (x == 0) throw ValidationError("origin-not-interior");
    int s = x > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) throw ValidationError("origin-not-interior");
  }
  if (sign < 0) c = negated(c);

  for (std::size_t j = 0; j <= n; ++j)
    if (!is_primitive(vertices[j].x)) {
      std::string coords = "(";
      for (std::size_t i = 0; i < n; ++i) coords += vertices[j][i].str() + (i + 1 < n ? "," : ")");
      throw ValidationError("non-primitive-vertex", coords);
    }

  FanoSimplex p;
  p.dim_ = n;
  p.verts_ = std::move(vertices);
  p.weights_.weights = divided(c, gcd_of(c));
  p.weights_.multiplicity = sublattice_index(p.verts_);

  // Facet opposite vertex j: primitive normal vanishing on the differences
  // of the remaining vertices, oriented so the facet is at a negative level.
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<IntVec> diffs;
    std::size_t base = (j == 0) ? 1 : 0;
    for (std::size_t v = 0; v <= n; ++v)
      if (v != j && v != base) diffs.push_back(sub(p.verts_[v].x, p.verts_[base].x));
    IntVec a = primitive_kernel_vector(IntMatrix::from_rows(diffs));
    Int level = 0;
    for (std::size_t i = 0; i < n; ++i) level += a[i] * p.verts_[base][i];
    if (level > 0) {
      a = negated(a);
      level = -level;
    }
    assert(level < 0);  // origin interior forces every facet strictly off 0
    p.facets_.push_back({a, level});
    p.levels_.push_back(-level);
  }
  return p;
}

std::vector<IntVec> FanoSimplex::vertex_set() const {
  std::vector<IntVec> out;
  out.reserve(verts_.size());
  for (const auto& v : verts_) out.push_back(v.x);
  return out;
}

Rat degree(const WeightSystem& ws) {
  Int h = ws.sum();
  return Rat(pow(h, static_cast<unsigned>(ws.n())), ws.product() * ws.multiplicity);
}

FanoSimplex simplex_from_weights(const WeightSystem& ws) {
  const std::size_t n = ws.n();
  if (n == 0) throw ValidationError("wrong-vertex-count", "need at least two weights");
  for (const Int& w : ws.weights)
    if (w <= 0) throw ValidationError("weights-not-positive");
  if (ws.multiplicity != 1)
    throw ValidationError("multiplicity-not-one", "construction is defined for weighted projective space");
  if (!ws.reduced()) throw ValidationError("weights-not-reduced");
  if (!ws.well_formed()) throw ValidationError("weights-not-well-formed");

  // Unimodular W with W.weights = e_0; rows 1..n of W then present
  // Z^{n+1} / Z.weights = Z^n and the vertices are the images of the
  // standard basis.
  IntMatrix col(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) col(i, 0) = ws.weights[i];
  SmithResult snf = smith_normal_form(col);
  assert(snf.d(0, 0) == 1);
  IntMatrix w = snf.u;
  // u*col*v = e_0 with v = (+-1); absorb the sign into the first row of u.
  if (snf.v(0, 0) < 0)
    for (std::size_t j = 0; j <= n; ++j) w(0, j) = -w(0, j);

  IntMatrix verts(n, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) verts(i, j) = w(i + 1, j);
  verts = hermite_row_form(verts);

  std::vector<LatticeVector> vs;
  for (std::size_t j = 0; j <= n; ++j) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = verts(i, j);
    vs.emplace_back(std::move(v));
  }
  FanoSimplex p = FanoSimplex::validate(std::move(vs));
  assert(p.weights().weights == ws.weights);
  assert(p.multiplicity() == 1);
  return p;
}

RationalPolytope dual_polytope(const FanoSimplex& p) {
  RationalPolytope q;
  q.dim = p.dim();
  for (std::size_t i = 0; i <= p.dim(); ++i) {
    const HalfSpace& f = p.facets()[i];
    RatVec u(q.dim);
    for (std::size_t j = 0; j < q.dim; ++j) u[j] = Rat(f.a[j], -f.b);  // a / m, facet at level -m
    q.vertices.push_back(std::move(u));
  }
  for (const auto& v : p.vertices()) q.ineqs.push_back({v.x, Int(-1)});
  return q;
}

std::vector<RatVec> dual_vertices(const std::vector<IntVec>& verts) {
  std::vector<RatVec> out;
  for (const HalfSpace& f : polytope_facets(verts)) {
    Int level = -f.b;
    if (level <= 0) throw ValidationError("origin-not-interior", "dual vertex at infinity");
    RatVec u(f.a.size());
    for (std::size_t j = 0; j < f.a.size(); ++j) u[j] = Rat(f.a[j], level);
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int lattice_point_count(const RationalPolytope& q, const Int& k) {
  if (k == 0) return 1;
  std::vector<HalfSpace> scaled;
  scaled.reserve(q.ineqs.size());
  for (const auto& h : q.ineqs) scaled.push_back({h.a, h.b * k});
  Int count = 0;
  for_each_lattice_point(scaled, q.dim, [&](const IntVec&) { ++count; });
  return count;
}

std::vector<BoxPoint> simplex_box_points(const FanoSimplex& p) {
  const std::size_t n = p.dim();
  IntMatrix u(n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) u(i, j) = p.vertex(j)[i];
    u(n, j) = 1;
  }
  SmithResult snf = smith_normal_form(u);
  assert(snf.rank == n + 1);
  IntMatrix uinv_left = unimodular_inverse(snf.u);

  // Rational inverse of u, once.
  std::vector<RatVec> uinv(n + 1, RatVec(n + 1));
  {
    std::vector<Rat> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      std::fill(e.begin(), e.end(), Rat(0));
      e[j] = 1;
      RatVec colj = solve_rational(u, e);
      for (std::size_t i = 0; i <= n; ++i) uinv[i][j] = colj[i];
    }
  }

  std::vector<BoxPoint> out;
  IntVec residue(n + 1, Int(0));
  std::function<void(std::size_t)> walk = [&](std::size_t t) {
    if (t == n + 1) {
      // representative y = snf.u^{-1} . residue of Z^{n+1} / u Z^{n+1}
      IntVec y(n + 1, Int(0));
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) y[i] += uinv_left(i, j) * residue[j];
      // wrap into the half-open parallelepiped
      RatVec coeff(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j <= n; ++j) s += uinv[i][j] * y[j];
        coeff[i] = s;
      }
      BoxPoint bp;
      bp.bary.resize(n + 1);
      bp.z.assign(n + 1, Int(0));
      for (std::size_t i = 0; i <= n; ++i) {
        Int num = boost::multiprecision::numerator(coeff[i]);
        Int den = boost::multiprecision::denominator(coeff[i]);
        bp.bary[i] = coeff[i] - Rat(floor_div(num, den));
      }
      // z = u . frac(coeff) = y - u . floor(coeff)
      for (std::size_t r = 0; r <= n; ++r) {
        Rat s = 0;
        for (std::size_t j = 0; j <= n; ++j) s += Rat(u(r, j)) * bp.bary[j];
        Int num = boost::multiprecision::numerator(s);
        Int den = boost::multiprecision::denominator(s);
        bp.z[r] = exact_div(num, den, "box point");
      }
      out.push_back(std::move(bp));
      return;
    }
    Int d = snf.d(t, t);
    for (Int r = 0; r < d; ++r) {
      residue[t] = r;
      walk(t + 1);
    }
  };
  walk(0);
  return out;
}

Int lattice_point_count(const FanoSimplex& p, const Int& k) {
  if (k < 0) throw ValidationError("negative-dilation");
  const std::size_t n = p.dim();
  Int total = 0;
  for (const BoxPoint& bp : simplex_box_points(p)) {
    Int ht = bp.height();
    if (ht > k) continue;
    // compositions of k - ht into n+1 nonnegative parts: C(k - ht + n, n)
    Int m = k - ht, binom = 1;
    for (std::size_t i = 1; i <= n; ++i) binom = binom * (m + Int(i)) / Int(i);
    total += binom;
  }
  return total;
}

namespace {

bool try_matching(const FanoSimplex& p, const FanoSimplex& q, const std::vector<std::size_t>& sigma) {
  const std::size_t n = p.dim();
  IntMatrix at(n, n);  // transpose of the matrix with columns v_0..v_{n-1}
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) at(j, i) = p.vertex(j)[i];
  IntMatrix m(n, n);
  std::vector<Rat> rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) rhs[j] = Rat(q.vertex(sigma[j])[r]);
    std::vector<Rat> row;
    try {
      row = solve_rational(at, rhs);
    } catch (const ValidationError&) {
      return false;
    }
    for (std::size_t cidx = 0; cidx < n; ++cidx) {
      Int num = boost::multiprecision::numerator(row[cidx]);
      Int den = boost::multiprecision::denominator(row[cidx]);
      if (den != 1) return false;
      m(r, cidx) = num;
    }
  }
  Int dm = det(m);
  if (dm != 1 && dm != -1) return false;
  // the map is pinned by n vertices; the last one must follow
  for (std::size_t r = 0; r < n; ++r) {
    Int s = 0;
    for (std::size_t cidx = 0; cidx < n; ++cidx) s += m(r, cidx) * p.vertex(n)[cidx];
    if (s != q.vertex(sigma[n])[r]) return false;
  }
  return true;
}

}  // namespace

bool simplex_equivalent(const FanoSimplex& p, const FanoSimplex& q) {
  if (p.dim() != q.dim()) return false;
  if (p.multiplicity() != q.multiplicity()) return false;
  if (p.weights().sorted() != q.weights().sorted()) return false;

  const std::size_t n = p.dim();
  // Only weight-preserving matchings can extend to lattice isomorphisms.
  std::vector<std::size_t> sigma(n + 1);
  std::vector<bool> used(n + 1, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == n + 1) return try_matching(p, q, sigma);
    for (std::size_t cand = 0; cand <= n; ++cand) {
      if (used[cand]) continue;
      if (p.weights().weights[pos] != q.weights().weights[cand]) continue;
      used[cand] = true;
      sigma[pos] = cand;
      if (rec(pos + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace fwps
