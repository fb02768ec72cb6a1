#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fwps/mutation.hpp"
#include "fwps/simplex.hpp"
#include "fwps/singularity.hpp"

namespace fwps {

// y_0 = 2, y_n = 1 + y_0*...*y_{n-1}; t_n = y_n - 1.
struct SylvesterCache {
  IntVec y, t;
};
SylvesterCache sylvester_numbers(std::size_t count);

enum class Variant { canonical, terminal };
std::string to_string(Variant v);

// The maximal-degree weight system: (1, 1, g*t_{n-1}/y_{n-2}, ..., g*t_{n-1}/y_0)
// with g = 2 for the canonical family (n >= 3) and g = 1 for the terminal one
// (n >= 4).
WeightSystem max_degree_wps(std::size_t n, Variant variant);

// One state of the mutation tower: the weight vector lambda^{(m,a)} with its
// sum and the Sylvester indices pinned to positions 3..n.
struct TowerState {
  std::size_t n = 0;
  Variant variant = Variant::canonical;
  std::size_t a = 0;
  std::size_t m = 0;
  IntVec lambda;
  Int h;
  std::vector<std::size_t> k;  // k[i-3] is the Sylvester index of position i

  WeightSystem weights() const { return WeightSystem(lambda, Int(1)); }
};

TowerState tower_base(std::size_t n, Variant variant, std::size_t a);
// Apply the edge-mutation recursion (apex position 0, edge positions 1 and 2)
// once; every division is checked exact and growth is asserted.
TowerState tower_step(const TowerState& s);

// The appendix witness kappa for a state with m >= 1 and its fractional sum.
struct KappaWitness {
  Int kappa;
  Rat sum;
  bool in_range = false;        // kappa in {2, ..., h-2}
  std::string verdict;          // "not canonical" | "not terminal" | "inconclusive"
};
KappaWitness kappa_witness(const TowerState& prev, const TowerState& cur);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Machine verification of the number-theoretic lemmas behind the towers:
// Sylvester identities, coprimality and divisibility patterns along the
// recursion, and the kappa witnesses. Instances are checked for every
// a in {0,...,n-2} and m <= m_max.
std::vector<CheckResult> verify_appendix_claims(std::size_t n, Variant variant, std::size_t m_max);

struct MutationGraph {
  struct Node {
    IntVec weights;  // sorted multiset
    Int multiplicity;
    std::size_t depth = 0;
  };
  struct Edge {
    std::size_t a = 0, b = 0;  // node indices, a < b
    std::size_t k = 0;         // size of the minimal face
    Int d;                     // gcd stripped from the raw weights
  };
  std::vector<Node> nodes;  // BFS discovery order; root at index 0
  std::vector<Edge> edges;
  std::vector<std::size_t> depth_counts;  // nodes per depth, depth_counts[0] == 1

  // Star-of-chains comparison against the tower recursion, performed for the
  // canonical family with n >= 4 and the terminal one with n >= 5.
  bool structure_checked = false;
  bool structure_ok = false;
  std::string structure_detail;
};

// Breadth-first closure of the maximal-degree weighted projective space
// under non-trivial multiplicity-1 mutations, nodes keyed by weight multiset.
MutationGraph build_mutation_tree(std::size_t n, Variant variant, std::size_t depth);

std::string to_dot(const MutationGraph& g);

}  // namespace fwps
