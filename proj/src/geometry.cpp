#include "fwps/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace fwps {

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

namespace {

// Phase-1 simplex method: feasibility of  sum a_i s_i = p, sum a_i = 1, a >= 0.
// Rows are the n coordinate equations plus the affine one; artificial
// variables start in the basis and must be driven to zero.
bool convex_combination_exists(const RatVec& p, const std::vector<IntVec>& points) {
  if (points.empty()) return false;
  const std::size_t n = p.size();
  const std::size_t m = points.size();
  const std::size_t rows = n + 1;
  const std::size_t cols = m + rows + 1;  // alphas, artificials, rhs

  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = Rat(points[j][i]);
    t[i][cols - 1] = p[i];
  }
  for (std::size_t j = 0; j < m; ++j) t[n][j] = 1;
  t[n][cols - 1] = 1;

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (t[i][cols - 1] < 0)
      for (std::size_t j = 0; j < cols; ++j) t[i][j] = -t[i][j];
    t[i][m + i] = 1;
    basis[i] = m + i;
  }

  // Reduced cost row for minimising the sum of artificials.
  std::vector<Rat> r(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
    if (j < m)
      r[j] = -s;
    else if (j < m + rows)
      r[j] = Rat(1) - s;
    else
      r[j] = -s;  // objective value (negated) in the rhs slot
  }

  for (;;) {
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (r[j] < 0) {
        enter = j;  // Bland: smallest index
        break;
      }
    if (enter == cols - 1) break;

    std::size_t leave = rows;
    Rat best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows) return false;  // unbounded: cannot happen here

    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat f = r[enter];
    for (std::size_t j = 0; j < cols; ++j) r[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return r[cols - 1] == 0;  // optimum of phase 1 is zero
}

}  // namespace

bool in_convex_hull(const RatVec& p, const std::vector<IntVec>& points) {
  return convex_combination_exists(p, points);
}

bool in_convex_hull(const IntVec& p, const std::vector<IntVec>& points) {
  return convex_combination_exists(to_rat(p), points);
}

std::vector<IntVec> hull_vertices(std::vector<IntVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return points;
  std::vector<IntVec> out;
  std::vector<IntVec> others;
  others.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(points[i], others)) out.push_back(points[i]);
  }
  return out;
}

std::vector<HalfSpace> polytope_facets(const std::vector<IntVec>& verts) {
  assert(!verts.empty());
  const std::size_t n = verts[0].size();
  assert(verts.size() >= n + 1);
  std::set<HalfSpace> found;

  std::vector<std::size_t> idx(n);
  // iterate over n-subsets of the vertex list
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n) {
      IntMatrix diffs(n - 1, n);
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          diffs(i - 1, j) = verts[idx[i]][j] - verts[idx[0]][j];
      IntVec a;
      try {
        a = primitive_kernel_vector(diffs);
      } catch (const ValidationError&) {
        return;  // subset does not span a hyperplane
      }
      Int b = 0;
      for (std::size_t j = 0; j < n; ++j) b += a[j] * verts[idx[0]][j];
      bool above = true, below = true;
      for (const auto& v : verts) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a[j] * v[j];
        if (s < b) above = false;
        if (s > b) below = false;
      }
      if (above) found.insert({a, b});
      if (below) found.insert({negated(a), -b});
      return;
    }
    for (std::size_t i = start; i + (n - pos) <= verts.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

namespace {

// Tighten a.x >= b for integer x: divide by gcd(a), round b up.
bool normalize_halfspace(HalfSpace& h) {
  Int g = gcd_of(h.a);
  if (g == 0) return h.b <= 0;  // trivially true or an infeasibility marker
  if (g > 1) {
    h.a = divided(h.a, g);
    h.b = ceil_div(h.b, g);
  }
  return true;
}

}  // namespace

void for_each_lattice_point(const std::vector<HalfSpace>& ineqs, std::size_t dim,
                            const std::function<void(const IntVec&)>& fn) {
  // levels[d]: constraints mentioning only x_0..x_d (after elimination).
  std::vector<std::vector<HalfSpace>> levels(dim);
  {
    std::set<HalfSpace> cur;
    for (HalfSpace h : ineqs) {
      assert(h.a.size() == dim);
      if (!normalize_halfspace(h)) return;  // 0 >= positive: empty region
      if (gcd_of(h.a) == 0) continue;
      cur.insert(h);
    }
    for (std::size_t d = dim; d-- > 0;) {
      levels[d].assign(cur.begin(), cur.end());
      if (d == 0) break;
      std::set<HalfSpace> next;
      std::vector<const HalfSpace*> lower, upper;
      for (const auto& h : levels[d]) {
        if (h.a[d] > 0)
          lower.push_back(&h);
        else if (h.a[d] < 0)
          upper.push_back(&h);
        else
          next.insert(h);
      }
      for (const auto* lo : lower)
        for (const auto* up : upper) {
          // a_d^lo * up + |a_d^up| * lo eliminates x_d
          Int cl = -up->a[d], cu = lo->a[d];
          HalfSpace h;
          h.a.resize(dim);
          for (std::size_t j = 0; j < dim; ++j) h.a[j] = cl * lo->a[j] + cu * up->a[j];
          h.b = cl * lo->b + cu * up->b;
          if (!normalize_halfspace(h)) return;
          if (gcd_of(h.a) != 0) next.insert(h);
        }
      cur = std::move(next);
    }
  }

  IntVec x(dim);
  std::function<void(std::size_t)> walk = [&](std::size_t d) {
    bool has_lo = false, has_hi = false;
    Int lo, hi;
    for (const auto& h : levels[d]) {
      Int rest = h.b;
      for (std::size_t j = 0; j < d; ++j) rest -= h.a[j] * x[j];
      if (h.a[d] > 0) {
        Int bound = ceil_div(rest, h.a[d]);
        if (!has_lo || bound > lo) lo = bound, has_lo = true;
      } else if (h.a[d] < 0) {
        Int bound = floor_div(rest, h.a[d]);
        if (!has_hi || bound < hi) hi = bound, has_hi = true;
      }
    }
    assert(has_lo && has_hi);  // region must be bounded
    for (Int v = lo; v <= hi; ++v) {
      x[d] = v;
      if (d + 1 == dim)
        fn(x);
      else
        walk(d + 1);
    }
  };
  if (dim == 0) return;
  walk(0);
}

std::vector<IntVec> lattice_points_in(const std::vector<HalfSpace>& ineqs, std::size_t dim) {
  std::vector<IntVec> out;
  for_each_lattice_point(ineqs, dim, [&](const IntVec& p) { out.push_back(p); });
  return out;
}

std::size_t affine_rank(const std::vector<IntVec>& points) {
  if (points.size() <= 1) return 0;
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return smith_normal_form(IntMatrix::from_rows(diffs)).rank;
}

std::vector<IntVec> lattice_points_of(const std::vector<IntVec>& verts) {
  assert(!verts.empty());
  if (affine_rank(verts) != verts[0].size())
    throw ValidationError("degenerate", "polytope is not full-dimensional");
  return lattice_points_in(polytope_facets(verts), verts[0].size());
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  assert(m.rows == m.cols);
  const std::size_t n = m.rows;
  IntMatrix inv(n, n);
  std::vector<Rat> e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), Rat(0));
    e[j] = 1;
    std::vector<Rat> col = solve_rational(m, e);
    for (std::size_t i = 0; i < n; ++i) {
      Int num = boost::multiprecision::numerator(col[i]);
      Int den = boost::multiprecision::denominator(col[i]);
      inv(i, j) = exact_div(num, den, "unimodular_inverse");
    }
  }
  return inv;
}

}  // namespace fwps
