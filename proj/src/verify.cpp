#include "fwps/verify.hpp"

#include <algorithm>

#include "fwps/json_io.hpp"
#include "fwps/mutation.hpp"
#include "fwps/singularity.hpp"

namespace fwps {

namespace {

struct Tally {
  std::string name;
  std::size_t checked = 0;
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& where) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail = where;
    }
  }
  CheckResult result() const {
    return {name, pass, pass ? std::to_string(checked) + " instances" : detail};
  }
};

std::string describe(const FanoSimplex& p, const MutationMove& mv) {
  std::string s = "weights(";
  IntVec ws = p.weights().sorted();
  for (std::size_t i = 0; i < ws.size(); ++i) s += ws[i].str() + (i + 1 < ws.size() ? "," : "");
  s += ") apex=" + std::to_string(mv.apex) + " face={";
  for (std::size_t i = 0; i < mv.min_face.size(); ++i)
    s += std::to_string(mv.min_face[i]) + (i + 1 < mv.min_face.size() ? "," : "");
  return s + "}";
}

}  // namespace

SuiteResult run_appendix_suite(std::size_t n, std::size_t m_max) {
  SuiteResult res;
  res.suite = "appendix";
  for (Variant v : {Variant::canonical, Variant::terminal}) {
    if (v == Variant::terminal && n < 4) continue;
    for (CheckResult c : verify_appendix_claims(n, v, m_max)) {
      c.name = to_string(v) + "/" + c.name;
      res.checks.push_back(std::move(c));
    }
  }
  return res;
}

SuiteResult run_mutation_suite() {
  const Corpus& corpus = shared_corpus();

  Tally corpus_size{"corpus-size"};
  corpus_size.expect(corpus.generated_in_bounds >= 200,
                     "only " + std::to_string(corpus.generated_in_bounds) + " generated simplices");

  Tally moves_found{"moves-found"};
  Tally degree_inv{"degree-invariance"};
  Tally theorem1{"theorem1-positionwise"};
  Tally eq3{"eq3-multiplicity-constraint"};
  Tally eq2{"eq2-height-ratio"};
  Tally theorem2{"theorem2-edges-only"};
  Tally zero_heights{"zero-heights-by-construction"};
  Tally dual_counts{"dual-count-invariance"};
  Tally closed_vs_general{"closed-form-vs-general"};
  Tally g_independence{"g-independence"};
  Tally inverse{"inverse-mutation"};
  Tally corollary1{"corollary1-on-wps-moves"};

  std::size_t total_moves = 0;
  for (const FanoSimplex& p : corpus.simplices) {
    std::vector<MutationMove> moves = find_simplex_mutations(p);
    // volume bound keeps the lattice-point-enumeration checks desk-scale
    const Int vol_p = p.weights().sum() * p.multiplicity();

    for (const MutationMove& mv : moves) {
      if (mv.trivial) continue;
      ++total_moves;
      const std::string where = describe(p, mv);

      FanoSimplex q = mutate_simplex(p, mv);
      WeightPrediction pred = predict_weights(p.weights(), labeling_of(mv));

      degree_inv.expect(degree(p.weights()) == degree(q.weights()), where);
      theorem1.expect(pred.reduced == q.weights().weights, where);
      eq3.expect(Rat(pred.d) * Rat(p.multiplicity(), q.multiplicity()) ==
                     Rat(pow(p.weights().weights[mv.apex], static_cast<unsigned>(mv.k() - 1)),
                         pow([&] {
                               Int s = 0;
                               for (std::size_t f : mv.min_face) s += p.weights().weights[f];
                               return s;
                             }(),
                             static_cast<unsigned>(mv.k() - 2))),
                 where);
      {
        Int face_sum = 0;
        for (std::size_t f : mv.min_face) face_sum += p.weights().weights[f];
        eq2.expect(Rat(mv.h_max, -mv.h_min) == Rat(face_sum, p.weights().weights[mv.apex]), where);
      }
      theorem2.expect(!(p.multiplicity() == q.multiplicity()) || mv.k() == 2, where);
      for (std::size_t i = 0; i <= p.dim(); ++i) {
        Int h = pair(mv.w, p.vertex(i));
        zero_heights.expect(h == mv.h_max || h == mv.h_min || h == 0, where);
      }
      if (p.multiplicity() == 1 && q.multiplicity() == 1 && mv.k() == 2) {
        corollary1.expect(check_corollary1(p.weights().weights[mv.apex],
                                           p.weights().weights[mv.min_face[0]],
                                           p.weights().weights[mv.min_face[1]]),
                          where);
      }

      for (int k = 1; k <= 3; ++k)
        dual_counts.expect(lattice_point_count(dual_polytope(p), Int(k)) ==
                               lattice_point_count(dual_polytope(q), Int(k)),
                           where + " k=" + std::to_string(k));

      // Enumeration-heavy agreements run on the cheap part of the corpus.
      const Int vol_q = q.weights().sum() * q.multiplicity();
      if (vol_p + vol_q <= 4000) {
        std::vector<IntVec> general = mutate(p.vertex_set(), mv.w, mv.factor_vertices);
        std::vector<IntVec> closed = q.vertex_set();
        std::sort(closed.begin(), closed.end());
        closed_vs_general.expect(general == closed, where);

        Factor minimal;
        minimal.f = mv.factor_vertices;
        minimal.g[mv.h_min] = {p.vertex(mv.min_face[0]).x};
        g_independence.expect(mutate_with_g(p.vertex_set(), mv.w, minimal) == general, where);

        std::vector<IntVec> back = mutate(closed, mv.w.negated(), mv.factor_vertices);
        inverse.expect(simplex_equivalent(FanoSimplex::validate([&] {
                                            std::vector<LatticeVector> vs;
                                            for (const auto& v : back) vs.emplace_back(v);
                                            return vs;
                                          }()),
                                          p),
                       where);
      }
    }
  }
  moves_found.expect(total_moves >= 30, "only " + std::to_string(total_moves) + " nontrivial moves");

  SuiteResult res;
  res.suite = "mutation";
  for (const Tally* t : {&corpus_size, &moves_found, &degree_inv, &theorem1, &eq3, &eq2, &theorem2,
                         &zero_heights, &corollary1, &dual_counts, &closed_vs_general,
                         &g_independence, &inverse})
    res.checks.push_back(t->result());
  return res;
}

SuiteResult run_singularity_suite() {
  const Corpus& corpus = shared_corpus();

  Tally cross{"polytope-weight-cross-validation"};
  Tally gorenstein{"gorenstein-agreement"};
  Tally hierarchy{"terminal-implies-canonical"};
  Tally complementarity{"fractional-sum-complementarity"};
  Tally named{"named-classifications"};

  for (const FanoSimplex& p : corpus.simplices) {
    SingularityReport poly = classify_polytope(p);
    hierarchy.expect(!poly.terminal || poly.canonical, "polytope route");
    if (p.multiplicity() != 1 || p.weights().sum() > 10000) continue;
    SingularityReport wt = classify_weights(p.weights());
    hierarchy.expect(!wt.terminal || wt.canonical, "weight route");
    std::string where = weights_to_json(p.weights());
    cross.expect(poly.canonical == wt.canonical && poly.terminal == wt.terminal, where);
    gorenstein.expect(poly.gorenstein == wt.gorenstein, where);

    const Int h = p.weights().sum();
    for (Int kappa = 1; kappa < h && kappa <= 40; ++kappa) {
      Rat a = sum_of_fractional_parts(p.weights(), kappa);
      Rat b = sum_of_fractional_parts(p.weights(), h - kappa);
      Int nonzero = 0;
      for (const Int& l : p.weights().weights)
        if (mod_floor(l * kappa, h) != 0) ++nonzero;
      complementarity.expect(a + b == Rat(nonzero), where + " kappa=" + kappa.str());
    }
  }

  {
    SingularityReport a = classify_polytope(simplex_p1113());
    SingularityReport b = classify_weights(WeightSystem{1, 1, 1, 3});
    named.expect(a.canonical && a.gorenstein && !a.terminal, "P(1,1,1,3) polytope");
    named.expect(b.canonical && b.gorenstein && !b.terminal, "P(1,1,1,3) weights");

    SingularityReport c = classify_polytope(simplex_p1146());
    SingularityReport d = classify_weights(WeightSystem{1, 1, 4, 6});
    named.expect(c.canonical && c.gorenstein && !c.terminal, "P(1,1,4,6) polytope");
    named.expect(d.canonical && d.gorenstein && !d.terminal, "P(1,1,4,6) weights");

    SingularityReport e = classify_polytope(simplex_from_weights(WeightSystem{1, 1, 6, 14, 21}));
    SingularityReport f = classify_weights(WeightSystem{1, 1, 6, 14, 21});
    named.expect(e.terminal && !e.gorenstein, "P(1,1,6,14,21) polytope");
    named.expect(f.terminal && !f.gorenstein, "P(1,1,6,14,21) weights");

    SingularityReport g = classify_polytope(projective_space(2));
    named.expect(g.canonical && g.terminal && g.gorenstein, "P^2");
  }

  SuiteResult res;
  res.suite = "singularity";
  for (const Tally* t : {&cross, &gorenstein, &hierarchy, &complementarity, &named})
    res.checks.push_back(t->result());
  return res;
}

}  // namespace fwps
