#include "fwps/sylvester.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace fwps {

SylvesterCache sylvester_numbers(std::size_t count) {
  if (count < 1) throw ValidationError("bad-count", "need at least one Sylvester number");
  SylvesterCache c;
  Int prod = 1;
  for (std::size_t i = 0; i < count; ++i) {
    Int y = (i == 0) ? Int(2) : prod + 1;
    c.y.push_back(y);
    c.t.push_back(y - 1);
    prod *= y;
  }
  return c;
}

std::string to_string(Variant v) { return v == Variant::canonical ? "canonical" : "terminal"; }

WeightSystem max_degree_wps(std::size_t n, Variant variant) {
  const std::size_t min_n = (variant == Variant::canonical) ? 3 : 4;
  if (n < min_n)
    throw ValidationError("dimension-out-of-range",
                          to_string(variant) + " family starts at n = " + std::to_string(min_n));
  SylvesterCache c = sylvester_numbers(n);
  Int g = (variant == Variant::canonical) ? 2 : 1;
  IntVec w{Int(1), Int(1)};
  for (std::size_t i = n - 2; i + 1 > 0; --i) w.push_back(exact_div(g * c.t[n - 1], c.y[i], "t/y"));
  WeightSystem ws(std::move(w), Int(1));
  assert(ws.reduced() && ws.well_formed());
  return ws;
}

TowerState tower_base(std::size_t n, Variant variant, std::size_t a) {
  if (a > n - 2) throw ValidationError("bad-tower-index", "a must lie in {0,...,n-2}");
  const std::size_t min_n = (variant == Variant::canonical) ? 3 : 4;
  if (n < min_n) throw ValidationError("dimension-out-of-range");
  SylvesterCache c = sylvester_numbers(n);
  Int g = (variant == Variant::canonical) ? 2 : 1;
  Int t = c.t[n - 1];

  TowerState s;
  s.n = n;
  s.variant = variant;
  s.a = a;
  s.m = 0;
  s.lambda.resize(n + 1);
  s.lambda[0] = 1;
  s.lambda[1] = exact_div(g * t, c.y[a], "t/y_a");
  s.lambda[2] = 1;
  for (std::size_t idx = n - 2; idx + 1 > 0; --idx) {  // descending, a omitted
    if (idx == a) continue;
    s.k.push_back(idx);
  }
  for (std::size_t i = 3; i <= n; ++i) s.lambda[i] = exact_div(g * t, c.y[s.k[i - 3]], "t/y_k");
  s.h = 0;
  for (const Int& l : s.lambda) s.h += l;
  assert(s.h == ((variant == Variant::canonical) ? 2 * t : t + 1));
  return s;
}

TowerState tower_step(const TowerState& s) {
  TowerState next = s;
  next.m = s.m + 1;
  const Int& l0 = s.lambda[0];
  Int edge = s.lambda[1] + s.lambda[2];
  next.lambda[0] = s.lambda[2];
  next.lambda[1] = s.lambda[1];
  next.lambda[2] = exact_div(edge * edge, l0, "tower lambda_2");
  for (std::size_t i = 3; i <= s.n; ++i)
    next.lambda[i] = exact_div(s.lambda[i] * edge, l0, "tower lambda_i");
  next.h = exact_div(s.h * edge, l0, "tower h");

  Int check = 0;
  for (const Int& l : next.lambda) check += l;
  if (check != next.h) throw std::logic_error("tower_step: h recursion disagrees with the sum");
  for (std::size_t i = 0; i <= s.n; ++i)
    if (next.lambda[i] < s.lambda[i]) throw std::logic_error("tower_step: weights must be nondecreasing");
  if (next.lambda[2] <= s.lambda[2]) throw std::logic_error("tower_step: lambda_2 must grow strictly");
  if (s.variant == Variant::canonical) {
    // h^{(m,a)} = y_{k_i} * lambda_i^{(m,a)} holds along the canonical tower.
    SylvesterCache c = sylvester_numbers(s.n - 1);
    for (std::size_t i = 3; i <= s.n; ++i)
      if (next.h != c.y[next.k[i - 3]] * next.lambda[i])
        throw std::logic_error("tower_step: h identity violated");
  }
  return next;
}

KappaWitness kappa_witness(const TowerState& prev, const TowerState& cur) {
  if (cur.m != prev.m + 1 || cur.m < 1 || cur.a != prev.a || cur.variant != prev.variant)
    throw ValidationError("bad-tower-index", "witness needs consecutive states with m >= 1");
  KappaWitness w;
  w.kappa = (cur.variant == Variant::canonical) ? Int(cur.h - (prev.lambda[1] + prev.lambda[2]))
                                                : Int(cur.h - prev.h);
  w.in_range = (w.kappa >= 2 && w.kappa <= cur.h - 2);
  w.sum = sum_of_fractional_parts(cur.weights(), w.kappa);
  Int bound(cur.n - 1);
  if (cur.variant == Variant::canonical)
    w.verdict = (w.sum > bound) ? "not canonical" : "inconclusive";
  else
    w.verdict = (w.sum < 2) ? "not terminal" : "inconclusive";
  return w;
}

namespace {

struct ClaimLog {
  std::vector<CheckResult>& out;
  void record(const std::string& name, bool pass, const std::string& fail_detail) {
    for (auto& r : out)
      if (r.name == name) {
        if (!pass && r.pass) {
          r.pass = false;
          r.detail = fail_detail;
        }
        return;
      }
    out.push_back({name, pass, pass ? "" : fail_detail});
  }
};

std::string at(std::size_t a, std::size_t m) {
  return "a=" + std::to_string(a) + " m=" + std::to_string(m);
}

Rat frac(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  return x - Rat(floor_div(num, den));
}

}  // namespace

std::vector<CheckResult> verify_appendix_claims(std::size_t n, Variant variant, std::size_t m_max) {
  std::vector<CheckResult> results;
  ClaimLog log{results};
  const bool canonical = (variant == Variant::canonical);

  // Sylvester identities for a generous range of indices.
  {
    const std::size_t count = 8;
    SylvesterCache c = sylvester_numbers(count);
    bool coprime = true, product = true, unit_fractions = true, divis = true, plus_one = true;
    std::string detail;
    for (std::size_t i = 0; i < count && coprime; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        if (gcd(c.y[i], c.y[j]) != 1) {
          coprime = false;
          detail = "y_" + std::to_string(i) + ", y_" + std::to_string(j);
          break;
        }
    log.record("sylvester-pairwise-coprime", coprime, detail);

    for (std::size_t N = 1; N < count; ++N) {
      Int prod = 1;
      Rat sum = 0;
      for (std::size_t i = 0; i < N; ++i) {
        prod *= c.y[i];
        sum += Rat(1, c.y[i]);
      }
      if (c.t[N] != prod) product = false;
      if (sum != Rat(c.t[N] - 1, c.t[N])) unit_fractions = false;
      for (std::size_t i = 0; i < N; ++i) {
        Int ti = c.t[N] / c.y[i];
        if (c.t[N] % c.y[i] != 0) divis = false;
        for (std::size_t j = 0; j < N; ++j)
          if (j != i && (c.t[N] / c.y[j]) % c.y[i] != 0) divis = false;
        if (gcd(c.y[i], ti) != 1) divis = false;
        if ((ti + 1) % c.y[i] != 0) plus_one = false;
        if ((2 * ti + 1) % c.y[i] == 0) plus_one = false;
      }
    }
    log.record("sylvester-product", product, "t_n != prod y_i");
    log.record("sylvester-unit-fractions", unit_fractions, "sum 1/y_i != (t_n-1)/t_n");
    log.record("sylvester-divisibility", divis, "prime support of t_n/y_i");
    log.record("sylvester-plus-one", plus_one, "y_i | t_n/y_i + 1 pattern");
  }

  SylvesterCache cache = sylvester_numbers(n);
  const Int t = cache.t[n - 1];

  for (std::size_t a = 0; a + 1 <= n - 1; ++a) {
    std::vector<TowerState> states{tower_base(n, variant, a)};
    for (std::size_t m = 1; m <= m_max; ++m) states.push_back(tower_step(states.back()));

    for (std::size_t m = 0; m <= m_max; ++m) {
      const IntVec& l = states[m].lambda;
      const Int& h = states[m].h;

      if (m > 0) {
        bool mono = true;
        for (std::size_t i = 0; i <= n; ++i)
          if (l[i] < states[m - 1].lambda[i]) mono = false;
        log.record("tower-monotone", mono, at(a, m));
      }

      bool cop = gcd(l[0], l[1]) == 1 && gcd(l[0], l[2]) == 1 && gcd(l[1], l[2]) == 1;
      log.record("tower-coprime-head", cop, at(a, m));

      if (m >= 1) {
        Int gtail = 0;
        for (std::size_t i = 2; i <= n; ++i) gtail = gcd(gtail, l[i]);
        log.record("tower-prime-tail", coprime_part(gtail, l[0] * l[1]) > 1, at(a, m));
      }
      if (m >= 2) {
        Int ghead = l[0];
        for (std::size_t i = 3; i <= n; ++i) ghead = gcd(ghead, l[i]);
        log.record("tower-prime-head", coprime_part(ghead, l[1] * l[2]) > 1, at(a, m));
      }
      if (canonical) {
        bool parity = (l[0] % 2 != 0) && (l[2] % 2 != 0) && (l[1] % 2 == 0);
        for (std::size_t i = 3; i <= n; ++i)
          if (l[i] % 2 != 0) parity = false;
        log.record("tower-parity", parity, at(a, m));

        bool lam21 = true;
        for (std::size_t b = 0; b <= n - 2; ++b)
          if (b != a && (l[2] - 1) % cache.y[b] != 0) lam21 = false;
        log.record("tower-lambda2-minus-one", lam21, at(a, m));

        bool hid = true;
        for (std::size_t i = 3; i <= n; ++i)
          if (h != cache.y[states[m].k[i - 3]] * l[i]) hid = false;
        log.record("tower-h-identity", hid, at(a, m));

        bool l20 = true;
        for (std::size_t i = 3; i <= n; ++i)
          if ((l[2] - l[0]) % cache.y[states[m].k[i - 3]] != 0) l20 = false;
        log.record("tower-lambda2-minus-lambda0", l20, at(a, m));

        if (m >= 1)
          log.record("tower-degree-bound", Rat(l[0] * l[1], h) < Rat(1, 2 * t), at(a, m));
      }
      if (!canonical && n >= 5) {
        bool trip = true;
        for (std::size_t i = 3; i <= n && trip; ++i)
          for (std::size_t j = i + 1; j <= n && trip; ++j) {
            Int g = gcd(gcd(l[1], l[i]), l[j]);
            if (coprime_part(g, l[0] * l[2]) <= 1) trip = false;
          }
        log.record("tower-parity-triples", trip, at(a, m));
      }
    }

    // Claims quantified over all m at once.
    {
      Int avoid = 1;
      for (std::size_t m = 0; m <= m_max; ++m)
        avoid *= states[m].lambda[0] + states[m].lambda[2];
      log.record("tower-head-avoider", coprime_part(states[0].lambda[1], avoid) > 1,
                 "a=" + std::to_string(a));

      bool excl = true;
      std::string detail;
      for (std::size_t i = 3; i <= n; ++i) {
        Int g = 0, blockers = 1;
        for (std::size_t m = 0; m <= m_max; ++m) {
          const IntVec& l = states[m].lambda;
          Int gm = l[1];
          for (std::size_t j = 3; j <= n; ++j)
            if (j != i) gm = gcd(gm, l[j]);
          g = gcd(g, gm);
          blockers *= l[0] * l[2] * l[i];
        }
        if (coprime_part(g, blockers) > 1) continue;
        // the construction may fall back to k = 4 when the shared prime is 2
        bool four = true;
        for (std::size_t m = 0; m <= m_max && four; ++m) {
          const IntVec& l = states[m].lambda;
          if (l[1] % 4 != 0) four = false;
          for (std::size_t j = 3; j <= n; ++j)
            if (j != i && l[j] % 4 != 0) four = false;
          if (l[0] % 4 == 0 || l[2] % 4 == 0 || l[i] % 4 == 0) four = false;
        }
        if (!four) {
          excl = false;
          detail = "a=" + std::to_string(a) + " i=" + std::to_string(i);
          break;
        }
      }
      log.record("tower-excluded-divisor", excl, detail);
    }

    for (std::size_t m = 1; m <= m_max; ++m) {
      KappaWitness w = kappa_witness(states[m - 1], states[m]);
      std::string where = at(a, m);
      log.record("tower-kappa-in-range", w.in_range, where);
      if (canonical) {
        log.record("tower-kappa-sum-exceeds", w.sum > Int(n - 1), where);
        // the fractional part of kappa*lambda_0/h has a closed form
        Rat f = frac(Rat(mod_floor(w.kappa * states[m].lambda[0], states[m].h), states[m].h));
        Rat expect = (m % 2 == 1) ? Rat(2 * t - 1, 2 * t) : Rat(2 * t - 1, 2 * t) - Rat(1, cache.y[a]);
        log.record("tower-kappa-head-fraction", f == expect, where);
      } else {
        log.record("tower-kappa-sum-below-two", w.sum < 2, where);
        bool zeros = true;
        for (std::size_t i = 2; i <= n; ++i)
          if (mod_floor(w.kappa * states[m].lambda[i], states[m].h) != 0) zeros = false;
        log.record("tower-kappa-tail-vanishes", zeros, where);
      }
    }
  }
  return results;
}

namespace {

IntVec node_key(const WeightSystem& ws) { return ws.sorted(); }

}  // namespace

MutationGraph build_mutation_tree(std::size_t n, Variant variant, std::size_t depth) {
  if (depth > 4) throw ResourceLimit("mutation trees are explored to depth at most 4");
  MutationGraph g;
  WeightSystem root = max_degree_wps(n, variant);

  std::map<IntVec, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edge_seen;
  std::vector<std::size_t> frontier;

  index[node_key(root)] = 0;
  g.nodes.push_back({node_key(root), Int(1), 0});
  frontier.push_back(0);

  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      FanoSimplex p = simplex_from_weights(WeightSystem(g.nodes[id].weights, Int(1)));
      for (const MutationMove& mv : find_simplex_mutations(p)) {
        if (mv.trivial) continue;
        FanoSimplex q = mutate_simplex(p, mv);
        if (q.multiplicity() != 1) continue;  // only weighted projective spaces
        WeightPrediction pred = predict_weights(p.weights(), labeling_of(mv));
        IntVec key = node_key(q.weights());
        auto [it, fresh] = index.try_emplace(key, g.nodes.size());
        if (fresh) {
          g.nodes.push_back({key, q.multiplicity(), level + 1});
          next.push_back(it->second);
        }
        std::size_t other = it->second;
        if (other == id) continue;
        auto ekey = std::minmax(id, other);
        if (edge_seen.insert({ekey.first, ekey.second}).second)
          g.edges.push_back({ekey.first, ekey.second, mv.k(), pred.d});
      }
    }
    frontier = std::move(next);
  }

  g.depth_counts.assign(depth + 1, 0);
  for (const auto& node : g.nodes) ++g.depth_counts[node.depth];

  if ((variant == Variant::canonical && n >= 4) || (variant == Variant::terminal && n >= 5)) {
    g.structure_checked = true;
    g.structure_ok = true;
    std::string why;
    // Expected: n-1 chains, one per a, with depth-m node equal to the tower state.
    for (std::size_t d = 1; d <= depth && g.structure_ok; ++d)
      if (g.depth_counts[d] != n - 1) {
        g.structure_ok = false;
        why = "depth " + std::to_string(d) + " has " + std::to_string(g.depth_counts[d]) +
              " nodes, expected " + std::to_string(n - 1);
      }
    if (g.structure_ok) {
      std::set<IntVec> seen;
      for (std::size_t a = 0; a + 1 <= n - 1 && g.structure_ok; ++a) {
        TowerState s = tower_base(n, variant, a);
        for (std::size_t m = 1; m <= depth && g.structure_ok; ++m) {
          s = tower_step(s);
          IntVec key = node_key(s.weights());
          auto it = index.find(key);
          if (it == index.end() || g.nodes[it->second].depth != m) {
            g.structure_ok = false;
            why = "tower state a=" + std::to_string(a) + " m=" + std::to_string(m) +
                  " missing at its depth";
          } else {
            seen.insert(key);
          }
        }
      }
      if (g.structure_ok && seen.size() != (n - 1) * depth) {
        g.structure_ok = false;
        why = "tower states collide";
      }
    }
    if (g.structure_ok) {
      // each non-root node meets exactly its chain neighbours
      std::vector<std::size_t> degree(g.nodes.size(), 0);
      for (const auto& e : g.edges) {
        ++degree[e.a];
        ++degree[e.b];
      }
      for (std::size_t i = 1; i < g.nodes.size() && g.structure_ok; ++i) {
        std::size_t expected = (g.nodes[i].depth == depth) ? 1 : 2;
        if (degree[i] != expected) {
          g.structure_ok = false;
          why = "node " + std::to_string(i) + " has degree " + std::to_string(degree[i]);
        }
      }
      if (g.structure_ok && degree[0] != n - 1) {
        g.structure_ok = false;
        why = "root degree " + std::to_string(degree[0]);
      }
    }
    g.structure_detail = why;
  }
  return g;
}

std::string to_dot(const MutationGraph& g) {
  std::string out = "graph mutations {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"";
    const IntVec& w = g.nodes[i].weights;
    for (std::size_t j = 0; j < w.size(); ++j) out += w[j].str() + (j + 1 < w.size() ? "," : "");
    out += "\"];\n";
  }
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"k=" +
           std::to_string(e.k) + " d=" + e.d.str() + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace fwps
