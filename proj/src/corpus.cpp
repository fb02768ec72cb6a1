#include "fwps/corpus.hpp"

#include <array>
#include <random>

#include "fwps/mutation.hpp"

namespace fwps {

namespace {

// Fast screen for random candidates: the cofactor relation with 64-bit
// arithmetic (safe for the small coordinates we generate). Full validation
// runs only on survivors.
bool plausible_fano(const std::vector<std::array<long, 4>>& pts, std::size_t n) {
  std::array<long long, 5> c{};
  for (std::size_t j = 0; j <= n; ++j) {
    // det of the n x n matrix of the other points (rows = points)
    long long m[4][4];
    std::size_t r = 0;
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == j) continue;
      for (std::size_t i = 0; i < n; ++i) m[r][i] = pts[v][i];
      ++r;
    }
    long long d = 0;
    if (n == 3) {
      d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    } else {
      for (std::size_t col = 0; col < 4; ++col) {
        long long sub[3][3];
        for (std::size_t i = 1; i < 4; ++i) {
          std::size_t cc = 0;
          for (std::size_t k = 0; k < 4; ++k)
            if (k != col) sub[i - 1][cc++] = m[i][k];
        }
        long long s = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                      sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                      sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
        d += ((col % 2 == 0) ? 1 : -1) * m[0][col] * s;
      }
    }
    c[j] = (j % 2 == 0) ? d : -d;
  }
  int sign = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    if (c[j] == 0) return false;
    int s = c[j] > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

std::vector<LatticeVector> lv(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<LatticeVector> out;
  for (const auto& r : rows) {
    IntVec v;
    for (int c : r) v.emplace_back(c);
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

FanoSimplex simplex_p1113() {
  return FanoSimplex::validate(lv({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}}));
}
FanoSimplex simplex_p1146() {
  return FanoSimplex::validate(lv({{-1, -1, -3}, {0, 0, 1}, {0, 1, 0}, {4, 3, 6}}));
}
FanoSimplex simplex_p1148() {
  return FanoSimplex::validate(lv({{1, -1, 0}, {-2, -2, -1}, {-2, -2, 1}, {0, 1, 0}}));
}
FanoSimplex simplex_p1114() {
  return FanoSimplex::validate(lv({{1, -1, 0}, {-2, -2, -1}, {1, -1, 1}, {0, 1, 0}}));
}

FanoSimplex projective_space(std::size_t n) {
  std::vector<LatticeVector> verts;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    verts.emplace_back(std::move(e));
  }
  verts.emplace_back(IntVec(n, Int(-1)));
  return FanoSimplex::validate(std::move(verts));
}

Corpus make_corpus(const CorpusOptions& opts) {
  Corpus corpus;

  corpus.simplices.push_back(simplex_p1113());
  corpus.simplices.push_back(simplex_p1146());
  corpus.simplices.push_back(simplex_p1148());
  corpus.simplices.push_back(simplex_p1114());
  corpus.simplices.push_back(projective_space(3));
  corpus.simplices.push_back(projective_space(4));
  corpus.simplices.push_back(simplex_from_weights(WeightSystem{1, 1, 6, 14, 21}));
  corpus.simplices.push_back(simplex_from_weights(WeightSystem{1, 1, 12, 28, 42}));

  // A shell of mutation neighbours so the corpus is guaranteed to contain
  // moves beyond the random members.
  {
    std::size_t fixed = corpus.simplices.size();
    for (std::size_t i = 0; i < fixed; ++i) {
      const FanoSimplex p = corpus.simplices[i];
      std::size_t added = 0;
      for (const MutationMove& mv : find_simplex_mutations(p)) {
        if (mv.trivial) continue;
        if (added >= 3) break;
        corpus.simplices.push_back(mutate_simplex(p, mv));
        ++added;
      }
    }
  }

  std::mt19937_64 eng(opts.seed);
  const long span = 2 * opts.coord_bound + 1;
  auto coord = [&]() { return static_cast<long>(eng() % span) - opts.coord_bound; };

  for (std::size_t n : {std::size_t(3), std::size_t(4)}) {
    std::size_t target = (n == 3) ? opts.n3_target : opts.n4_target;
    std::size_t found = 0, trials = 0;
    while (found < target && trials < opts.max_trials) {
      ++trials;
      std::vector<std::array<long, 4>> pts(n + 1);
      for (auto& p : pts)
        for (std::size_t i = 0; i < n; ++i) p[i] = coord();
      if (!plausible_fano(pts, n)) continue;

      std::vector<LatticeVector> verts;
      for (const auto& p : pts) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = p[i];
        verts.emplace_back(std::move(v));
      }
      std::optional<FanoSimplex> s;
      try {
        s = FanoSimplex::validate(std::move(verts));
      } catch (const ValidationError&) {
        continue;  // prefilter admits some non-primitive candidates
      }
      if (s->weights().sum() * s->multiplicity() > opts.max_volume) continue;
      if (degree(s->weights()) > opts.max_degree) continue;
      corpus.simplices.push_back(std::move(*s));
      ++found;
      ++corpus.generated_in_bounds;
    }
  }
  return corpus;
}

const Corpus& shared_corpus() {
  static const Corpus corpus = make_corpus();
  return corpus;
}

}  // namespace fwps
