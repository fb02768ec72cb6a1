#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "fwps/errors.hpp"
#include "fwps/numeric.hpp"

namespace fwps {

using IntVec = std::vector<Int>;

Int gcd_of(const IntVec& v);
// gcd of coordinates is 1; the zero vector is not primitive.
bool is_primitive(const IntVec& v);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negated(const IntVec& a);
IntVec scaled(const IntVec& a, const Int& c);
// Divide every coordinate, all divisions must be exact.
IntVec divided(const IntVec& a, const Int& c);

// A point of the lattice N.
struct LatticeVector {
  IntVec x;

  LatticeVector() = default;
  explicit LatticeVector(IntVec coords) : x(std::move(coords)) {}
  LatticeVector(std::initializer_list<int> coords) {
    for (int c : coords) x.emplace_back(c);
  }

  std::size_t dim() const { return x.size(); }
  const Int& operator[](std::size_t i) const { return x[i]; }
  Int& operator[](std::size_t i) { return x[i]; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  // lexicographic; used for deterministic ordering
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.x < b.x; }
};

// An element of the dual lattice M = Hom(N, Z).
struct DualVector {
  IntVec x;

  DualVector() = default;
  explicit DualVector(IntVec coords) : x(std::move(coords)) {}
  DualVector(std::initializer_list<int> coords) {
    for (int c : coords) x.emplace_back(c);
  }

  std::size_t dim() const { return x.size(); }
  const Int& operator[](std::size_t i) const { return x[i]; }

  DualVector negated() const { return DualVector(fwps::negated(x)); }
  bool primitive() const { return is_primitive(x); }

  friend bool operator==(const DualVector& a, const DualVector& b) = default;
};

// Natural pairing <u, v>; the height of v under u.
Int pair(const DualVector& u, const LatticeVector& v);

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  IntMatrix mul(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
};

// Determinant of a square matrix (fraction-free Bareiss elimination).
Int det(IntMatrix m);

struct SmithResult {
  IntMatrix u, d, v;  // u*a*v == d, u and v unimodular
  std::size_t rank = 0;
  IntVec diagonal() const;
};

// Smith normal form: diagonal with d_1 | d_2 | ... | d_r, entries nonnegative.
SmithResult smith_normal_form(const IntMatrix& input);

// Row-style Hermite normal form: the canonical representative of a matrix
// under left multiplication by GL_n(Z). Pivots positive, entries above a
// pivot reduced into [0, pivot).
IntMatrix hermite_row_form(IntMatrix m);

// Index [N : N'] of the sublattice generated by `gens`; requires full rank.
Int sublattice_index(const std::vector<LatticeVector>& gens);

// Primitive generator of the kernel of a full-rank (n-1) x n matrix,
// computed from maximal minors.
IntVec primitive_kernel_vector(const IntMatrix& m);

// Exact solution of A x = b for square nonsingular A.
std::vector<Rat> solve_rational(const IntMatrix& a, const std::vector<Rat>& b);

}  // namespace fwps
