#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fwps/mutation.hpp"
#include "fwps/simplex.hpp"
#include "fwps/singularity.hpp"
#include "fwps/sylvester.hpp"

namespace fwps {

// Parsers throw ParseError on malformed input. Coordinates and weights in
// input files must fit in 64 bits; emitted integers are unbounded and are
// written as plain JSON numerals.

std::vector<LatticeVector> parse_simplex_json(const std::string& text);
WeightSystem parse_weights_json(const std::string& text);

struct MoveSpec {
  DualVector w;
  std::vector<IntVec> factor_vertices;
  std::optional<std::size_t> apex;
  std::vector<std::size_t> min_face;
};
MoveSpec parse_move_json(const std::string& text);

// Emitters are byte-deterministic: keys alphabetical, weights ascending,
// vertex order as computed.
std::string simplex_to_json(const std::vector<IntVec>& vertices);
std::string simplex_to_json(const FanoSimplex& p);
std::string weights_to_json(const WeightSystem& ws);
std::string move_to_json(const MutationMove& mv);
std::string moves_to_json(const std::vector<MutationMove>& moves);
std::string report_to_json(const SingularityReport& rep);
std::string degree_to_json(const Rat& deg);

struct TowerEntry {
  TowerState state;
  std::optional<KappaWitness> witness;
};
std::string tower_to_json(const std::vector<TowerEntry>& entries);

std::string graph_to_json(const MutationGraph& g,
                          const std::vector<std::optional<SingularityReport>>& reports);

}  // namespace fwps
