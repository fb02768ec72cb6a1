#include "fwps/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace fwps {

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const Int& c : v) g = gcd(g, c);
  return g;
}

bool is_primitive(const IntVec& v) { return gcd_of(v) == 1; }

IntVec add(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec negated(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec scaled(const IntVec& a, const Int& c) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

IntVec divided(const IntVec& a, const Int& c) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = exact_div(a[i], c, "divided");
  return r;
}

Int pair(const DualVector& u, const LatticeVector& v) {
  if (u.dim() != v.dim()) throw ValidationError("dimension-mismatch", "pairing");
  Int s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  IntMatrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  assert(cols == other.rows);
  IntMatrix r(rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols; ++j) r(i, j) += aik * other(k, j);
    }
  return r;
}

Int det(IntMatrix m) {
  assert(m.rows == m.cols);
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;  // exact (Bareiss)
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntVec SmithResult::diagonal() const {
  IntVec out;
  const std::size_t n = std::min(d.rows, d.cols);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}
// row[a] += c * row[b]
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < m.cols; ++j) m(a, j) += c * m(b, j);
}
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, a) += c * m(i, b);
}
void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SmithResult res;
  res.d = input;
  res.u = IntMatrix::identity(input.rows);
  res.v = IntMatrix::identity(input.cols);
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  const std::size_t nmin = std::min(d.rows, d.cols);
  for (std::size_t t = 0; t < nmin; ++t) {
    for (;;) {
      // Minimal |entry| in the trailing submatrix becomes the pivot.
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j)
          if (d(i, j) != 0 && (best == 0 || abs(d(i, j)) < best)) {
            best = abs(d(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0) {
        res.rank = t;
        return res;
      }
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) clean = false;  // remainder shrinks the pivot next pass
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      if (d(t, t) < 0) {
        negate_row(d, t);
        negate_row(u, t);
      }
      // Divisibility chain: fold any violating entry into the pivot row.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols && divides_all; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(u, t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
  }
  res.rank = 0;
  for (std::size_t t = 0; t < nmin; ++t)
    if (res.d(t, t) != 0) ++res.rank;
  return res;
}

IntMatrix hermite_row_form(IntMatrix m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    // Clear the column below `row` with gcd row combinations.
    std::size_t nz = row;
    while (nz < m.rows && m(nz, col) == 0) ++nz;
    if (nz == m.rows) continue;
    swap_rows(m, row, nz);
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      while (m(i, col) != 0) {
        Int q = floor_div(m(row, col), m(i, col));
        // row_row -= q * row_i, then swap: Euclid on the two leading entries
        add_row(m, row, i, -q);
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(i, j));
      }
    }
    if (m(row, col) < 0) negate_row(m, row);
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(m(i, col), m(row, col));
      if (q != 0) add_row(m, i, row, -q);
    }
    ++row;
  }
  return m;
}

Int sublattice_index(const std::vector<LatticeVector>& gens) {
  if (gens.empty()) throw ValidationError("degenerate-sublattice", "no generators");
  std::vector<IntVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(g.x);
  const std::size_t n = rows[0].size();
  SmithResult snf = smith_normal_form(IntMatrix::from_rows(rows));
  if (snf.rank != n) throw ValidationError("degenerate-sublattice");
  Int idx = 1;
  for (std::size_t i = 0; i < n; ++i) idx *= snf.d(i, i);
  return idx;
}

IntVec primitive_kernel_vector(const IntMatrix& m) {
  assert(m.rows + 1 == m.cols);
  const std::size_t n = m.cols;
  IntVec w(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(m.rows, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor(i, cc++) = m(i, c);
    }
    Int d = det(minor);
    w[j] = (j % 2 == 0) ? d : -d;
  }
  Int g = gcd_of(w);
  if (g == 0) throw ValidationError("degenerate-sublattice", "kernel not one-dimensional");
  return divided(w, g);
}

std::vector<Rat> solve_rational(const IntMatrix& a, const std::vector<Rat>& b) {
  assert(a.rows == a.cols && b.size() == a.rows);
  const std::size_t n = a.rows;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
    m[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw ValidationError("degenerate", "singular system");
    std::swap(m[k], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace fwps
