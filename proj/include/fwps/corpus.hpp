#pragma once

#include <cstdint>

#include "fwps/simplex.hpp"

namespace fwps {

// Deterministic test corpus: random Fano simplices in dimensions 3 and 4
// with small vertex coordinates, mildly filtered so that dual lattice-point
// counts and box-point classification stay desk-scale, plus a handful of
// named simplices and some of their mutation neighbours.
struct CorpusOptions {
  std::uint64_t seed = 0x5eedf00d;
  std::size_t n3_target = 160;
  std::size_t n4_target = 60;
  long coord_bound = 8;
  Int max_volume = Int(10000);  // weight sum times multiplicity
  Rat max_degree = Rat(5000);
  std::size_t max_trials = 4000000;
};

struct Corpus {
  std::vector<FanoSimplex> simplices;
  std::size_t generated_in_bounds = 0;  // random members honouring coord_bound
};

Corpus make_corpus(const CorpusOptions& opts = {});
// Cached corpus with default options, shared by the verification suites.
const Corpus& shared_corpus();

// Named simplices used across tests and suites.
FanoSimplex simplex_p1113();  // conv{e1,e2,e3,(-1,-1,-3)}
FanoSimplex simplex_p1146();  // conv{(-1,-1,-3),(0,0,1),(0,1,0),(4,3,6)}
FanoSimplex simplex_p1148();  // conv{(1,-1,0),(-2,-2,-1),(-2,-2,1),(0,1,0)}
FanoSimplex simplex_p1114();  // conv{(1,-1,0),(-2,-2,-1),(1,-1,1),(0,1,0)}
FanoSimplex projective_space(std::size_t n);

}  // namespace fwps
