#include "rirobust/structure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rirobust/bce.hpp"
#include "rirobust/lp.hpp"
#include "rirobust/separation.hpp"

namespace rir {

namespace {
constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);
}  // namespace

JeopardyResult jeopardizes(const BaseGame& g, std::size_t i, std::size_t a_i, std::size_t b_i) {
  if (i >= g.num_players() || a_i >= g.num_actions(i) || b_i >= g.num_actions(i))
    throw Error(ErrorCode::UnknownAction, "player or action index out of range");
  std::vector<Rational> coef(g.num_cells());
  for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
    std::size_t b = g.join(i, b_i, o), a = g.join(i, a_i, o);
    for (std::size_t t = 0; t < g.num_states(); ++t)
      coef[g.cell(b, t)] = g.u(i, b, t) - g.u(i, a, t);
  }
  auto opt = maximize_linear_over_bce(g, coef);
  if (sgn(opt.value) < 0) throw std::logic_error("obedience slack is negative at a BCE");
  return {sgn(opt.value) == 0, opt.value, std::move(opt.outcome)};
}

std::vector<std::size_t> jeopardization_set(const BaseGame& g, std::size_t i, std::size_t b_i) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.num_actions(i); ++a)
    if (a == b_i || jeopardizes(g, i, a, b_i).jeopardizes) out.push_back(a);
  return out;
}

std::vector<Outcome> bce_vertices(const BaseGame& g, std::optional<std::size_t> cap) {
  // Every vertex lies in the face where cells outside the maximal support are
  // zero, so enumerate over the supported cells only.
  auto poly = build_bce_polytope(g);
  auto support = max_support_point(g);
  std::vector<std::size_t> column(g.num_cells(), kNoColumn), cells;
  LinearProgram lp;
  for (std::size_t c = 0; c < g.num_cells(); ++c)
    if (sgn(support.p[c]) > 0) {
      column[c] = lp.add_variable(poly.lp.names()[c]);
      cells.push_back(c);
    }
  for (const auto& con : poly.lp.constraints()) {
    std::vector<Term> row;
    for (const auto& t : con.terms)
      if (column[t.var] != kNoColumn) row.push_back({column[t.var], t.coef});
    lp.add_constraint(std::move(row), con.relation, con.rhs);
  }
  std::vector<Outcome> out;
  for (const auto& v : enumerate_vertices(lp, cap)) {
    Outcome p = zero_outcome(g);
    for (std::size_t k = 0; k < cells.size(); ++k) p.p[cells[k]] = v[k];
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Outcome& x, const Outcome& y) { return x.p < y.p; });
  return out;
}

bool equal_beliefs_on_vertices(const BaseGame& g, const std::vector<Outcome>& vertices,
                               std::size_t i, std::size_t a_i, std::size_t b_i) {
  std::vector<std::vector<Rational>> sa, sb;
  std::vector<Rational> ma, mb;
  bool coherent_a = false, coherent_b = false;
  for (const auto& v : vertices) {
    sa.push_back(joint_slice(g, v, i, a_i));
    sb.push_back(joint_slice(g, v, i, b_i));
    ma.push_back(sum(sa.back()));
    mb.push_back(sum(sb.back()));
    coherent_a = coherent_a || sgn(ma.back()) > 0;
    coherent_b = coherent_b || sgn(mb.back()) > 0;
  }
  if (!coherent_a || !coherent_b)
    throw Error(ErrorCode::NotCoherent, "both actions must be recommended by some BCE");

  // Common belief: every nonzero belief among both actions coincides.
  bool common = true;
  const std::vector<Rational>* ref = nullptr;
  Rational ref_mass;
  auto same = [&](const std::vector<Rational>& s, const Rational& m) {
    for (std::size_t k = 0; k < s.size(); ++k)
      if (ref_mass * s[k] != m * (*ref)[k]) return false;
    return true;
  };
  for (std::size_t v = 0; v < vertices.size() && common; ++v) {
    for (int side = 0; side < 2 && common; ++side) {
      const auto& s = side == 0 ? sa[v] : sb[v];
      const auto& m = side == 0 ? ma[v] : mb[v];
      if (sgn(m) == 0) continue;
      if (!ref) {
        ref = &s;
        ref_mass = m;
      } else {
        common = same(s, m);
      }
    }
  }
  if (common) return true;

  // Constant likelihood ratio: p(a_i, .) = lambda p(b_i, .) at every vertex.
  std::optional<Rational> lambda;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if ((sgn(ma[v]) == 0) != (sgn(mb[v]) == 0)) return false;
    if (sgn(ma[v]) == 0) continue;
    if (!lambda) lambda = ma[v] / mb[v];
    for (std::size_t k = 0; k < sa[v].size(); ++k)
      if (sa[v][k] != *lambda * sb[v][k]) return false;
  }
  return true;
}

bool equal_beliefs_in_all_bce(const BaseGame& g, std::size_t i, std::size_t a_i,
                              std::size_t b_i, std::optional<std::size_t> cap) {
  return equal_beliefs_on_vertices(g, bce_vertices(g, cap), i, a_i, b_i);
}

namespace {

struct Pair {
  std::size_t player, a, b;
};

bool distinct_beliefs(const BaseGame& g, const Outcome& p, const Pair& q) {
  return is_supported(g, p, q.player, q.a) && is_supported(g, p, q.player, q.b) &&
         !beliefs_equal(g, p, q.player, q.a, q.b);
}

std::vector<Pair> all_pairs(const BaseGame& g) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t a = 0; a < g.num_actions(i); ++a)
      for (std::size_t b = a + 1; b < g.num_actions(i); ++b) out.push_back({i, a, b});
  return out;
}

class WeightSource {
 public:
  explicit WeightSource(std::uint64_t seed) : rng_(seed) {}
  // Positive integer weights in [1, 1000] from the raw engine output, which
  // is fully specified by the standard and therefore portable.
  std::vector<Rational> draw(std::size_t n) {
    std::vector<Rational> w(n);
    Rational total = 0;
    for (auto& x : w) {
      x = static_cast<unsigned long>(rng_() % 1000 + 1);
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }
  Rational draw_coefficient() {
    return Rational(static_cast<long>(rng_() % 2001) - 1000, 100);
  }

 private:
  std::mt19937_64 rng_;
};

Outcome mix(const BaseGame& g, const std::vector<const Outcome*>& points,
            const std::vector<Rational>& weights) {
  Outcome m = zero_outcome(g);
  for (std::size_t k = 0; k < points.size(); ++k)
    for (std::size_t c = 0; c < m.p.size(); ++c)
      if (sgn(points[k]->p[c]) != 0) m.p[c] += weights[k] * points[k]->p[c];
  return m;
}

bool keeps_distinct(const BaseGame& g, const Outcome& p, const std::vector<Pair>& pairs) {
  for (const auto& q : pairs)
    if (!distinct_beliefs(g, p, q)) return false;
  return true;
}

// Uniform average first, then random positive weights.
std::optional<Outcome> search_mixture(const BaseGame& g, const std::vector<const Outcome*>& pts,
                                      const std::vector<Pair>& required, std::size_t attempts,
                                      WeightSource& rng) {
  std::vector<Rational> w(pts.size(), Rational(1, static_cast<unsigned long>(pts.size())));
  for (std::size_t k = 0; k <= attempts; ++k) {
    if (k > 0) w = rng.draw(pts.size());
    Outcome m = mix(g, pts, w);
    if (keeps_distinct(g, m, required)) return m;
  }
  return std::nullopt;
}

}  // namespace

MinimallyMixed find_minimally_mixed(const BaseGame& g, const SearchOptions& options) {
  WeightSource rng(options.seed);
  MinimallyMixed out;
  out.mode = options.mode;
  std::vector<Outcome> samples;
  std::vector<Pair> required;
  if (options.mode == DensityMode::Exact) {
    samples = bce_vertices(g, options.vertex_cap);
    for (const auto& q : all_pairs(g)) {
      bool ca = false, cb = false;
      for (const auto& v : samples) {
        ca = ca || is_supported(g, v, q.player, q.a);
        cb = cb || is_supported(g, v, q.player, q.b);
      }
      if (ca && cb && !equal_beliefs_on_vertices(g, samples, q.player, q.a, q.b))
        required.push_back(q);
    }
  } else {
    samples.push_back(max_support_point(g));
    for (std::size_t k = 0; k < options.retries; ++k) {
      std::vector<Rational> c(g.num_cells());
      for (auto& x : c) x = rng.draw_coefficient();
      samples.push_back(minimize_linear_over_bce(g, c).outcome);
    }
    for (const auto& q : all_pairs(g))
      for (const auto& s : samples)
        if (distinct_beliefs(g, s, q)) {
          required.push_back(q);
          break;
        }
  }
  std::vector<const Outcome*> pts;
  for (const auto& s : samples) pts.push_back(&s);
  auto m = search_mixture(g, pts, required, options.retries, rng);
  if (!m)
    throw Error(ErrorCode::RetriesExhausted,
                "no minimally mixed candidate after " + std::to_string(options.retries) +
                    " retries");
  if (!is_bce(g, *m)) throw std::logic_error("minimally mixed candidate is not a BCE");
  out.outcome = std::move(*m);
  out.verified = options.mode == DensityMode::Exact;
  out.note = out.verified
                 ? "verified against " + std::to_string(samples.size()) + " BCE vertices"
                 : "randomized candidate (seed " + std::to_string(options.seed) + ", retries " +
                       std::to_string(options.retries) + ")";
  return out;
}

DensityVerdict classify_density(const BaseGame& g, const SearchOptions& options) {
  DensityVerdict verdict;
  verdict.options = options;
  auto mm = find_minimally_mixed(g, options);
  verdict.minimal_mixing_verified = mm.verified;

  // J[i][b] and, for every c outside J(b), a BCE in which c is strictly worse
  // than b given the recommendation b.
  std::size_t n = g.num_players();
  std::vector<std::vector<std::vector<char>>> J(n);
  std::vector<Outcome> sharpeners;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = g.num_actions(i);
    J[i].assign(k, std::vector<char>(k, 0));
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        if (c == b) {
          J[i][b][c] = 1;
          continue;
        }
        auto jr = jeopardizes(g, i, c, b);
        J[i][b][c] = jr.jeopardizes;
        if (!jr.jeopardizes) sharpeners.push_back(std::move(jr.argmax));
      }
  }
  auto shared_jeopardizer = [&](const Pair& q) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < g.num_actions(q.player); ++c)
      if (J[q.player][q.a][c] && J[q.player][q.b][c]) return c;
    return std::nullopt;
  };
  std::vector<Pair> risky;
  for (const auto& q : all_pairs(g))
    if (shared_jeopardizer(q)) risky.push_back(q);

  auto find_witness = [&](const Outcome& p) -> std::optional<DensityWitness> {
    for (const auto& q : risky)
      if (distinct_beliefs(g, p, q))
        return DensityWitness{p, q.player, q.a, q.b, *shared_jeopardizer(q)};
    return std::nullopt;
  };

  if (auto w = find_witness(mm.outcome)) {
    verdict.verdict = Density::NowhereDense;
    verdict.witness = std::move(w);
    return verdict;
  }

  // Mixing in the sharpeners shrinks every best-response set to the
  // jeopardization set while keeping the distinct-belief pattern of mm.
  std::vector<Pair> keep;
  for (const auto& q : all_pairs(g))
    if (distinct_beliefs(g, mm.outcome, q)) keep.push_back(q);
  std::vector<const Outcome*> pts{&mm.outcome};
  for (const auto& s : sharpeners) pts.push_back(&s);
  WeightSource rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  auto sharp = search_mixture(g, pts, keep, options.retries, rng);
  if (!sharp)
    throw Error(ErrorCode::RetriesExhausted, "mixing toward sharpening BCEs kept merging beliefs");
  if (auto w = find_witness(*sharp)) {
    verdict.verdict = Density::NowhereDense;
    verdict.witness = std::move(w);
    return verdict;
  }
  if (!is_sbce(g, *sharp)) throw std::logic_error("sharpened candidate is not separated");
  verdict.verdict = Density::Dense;
  verdict.dense_certificate = std::move(*sharp);
  return verdict;
}

bool verify_density_verdict(const BaseGame& g, const DensityVerdict& v) {
  if (v.verdict == Density::Dense) return v.dense_certificate && is_sbce(g, *v.dense_certificate);
  if (!v.witness) return false;
  const auto& w = *v.witness;
  if (!is_bce(g, w.outcome)) return false;
  if (!distinct_beliefs(g, w.outcome, {w.player, w.first, w.second})) return false;
  return jeopardizes(g, w.player, w.shared, w.first).jeopardizes &&
         jeopardizes(g, w.player, w.shared, w.second).jeopardizes;
}

Rational utility_distance(const BaseGame& g, const BaseGame& h) {
  if (g.num_players() != h.num_players() || g.num_cells() != h.num_cells())
    throw Error(ErrorCode::DimensionMismatch, "games have different shapes");
  Rational d = 0;
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t c = 0; c < g.num_cells(); ++c) {
      Rational diff = abs(g.utility_table(i)[c] - h.utility_table(i)[c]);
      if (diff > d) d = diff;
    }
  return d;
}

namespace {

using Vec = std::vector<Rational>;

Rational dot(const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0 && sgn(y[k]) != 0) s += x[k] * y[k];
  return s;
}

bool in_hull(const Vec& x, const std::vector<const Vec*>& pts) {
  if (pts.empty()) return false;
  LinearProgram lp;
  for (std::size_t s = 0; s < pts.size(); ++s) lp.add_variable();
  std::vector<Term> ones;
  for (std::size_t s = 0; s < pts.size(); ++s) ones.push_back({s, 1});
  lp.add_constraint(std::move(ones), Relation::Equal, 1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<Term> row;
    for (std::size_t s = 0; s < pts.size(); ++s)
      if (sgn((*pts[s])[k]) != 0) row.push_back({s, (*pts[s])[k]});
    lp.add_constraint(std::move(row), Relation::Equal, x[k]);
  }
  return solve(lp).status == LpStatus::Optimal;
}

// Orders the points so that none lies in the hull of its predecessors.
std::vector<std::size_t> extreme_order(const std::vector<Vec>& pts) {
  std::vector<std::size_t> remaining(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) remaining[k] = k;
  std::vector<std::size_t> order;
  while (!remaining.empty()) {
    std::size_t pick = remaining.size();
    for (std::size_t r = 0; r < remaining.size() && pick == remaining.size(); ++r) {
      std::vector<const Vec*> others;
      for (std::size_t s = 0; s < remaining.size(); ++s)
        if (s != r) others.push_back(&pts[remaining[s]]);
      if (!in_hull(pts[remaining[r]], others)) pick = r;
    }
    if (pick == remaining.size()) throw std::logic_error("no extreme point among distinct beliefs");
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// f with f.target > 0 >= f.q for every q in below.
Vec separating_functional(const Vec& target, const std::vector<const Vec*>& below) {
  std::size_t d = target.size();
  LinearProgram lp;
  for (std::size_t k = 0; k < d; ++k) lp.add_variable("f" + std::to_string(k), Rational(-1), Rational(1));
  std::size_t margin = lp.add_variable("margin", std::nullopt);
  for (const Vec* q : below) {
    std::vector<Term> row;
    for (std::size_t k = 0; k < d; ++k) {
      Rational diff = target[k] - (*q)[k];
      if (sgn(diff) != 0) row.push_back({k, std::move(diff)});
    }
    row.push_back({margin, -1});
    lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
  }
  lp.set_objective(Sense::Maximize, {{margin, 1}});
  auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal || sgn(sol.value) <= 0)
    throw std::logic_error("belief is not strictly separable from its predecessors");
  Vec f(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(d));
  Rational shift = dot(f, *below.front());
  for (const Vec* q : below) shift = std::max(shift, dot(f, *q));
  for (auto& x : f) x -= shift;
  return f;
}

}  // namespace

BaseGame separating_perturbation(const BaseGame& g, const Outcome& p, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  validate_outcome(g, p);
  if (auto chk = is_bce(g, p); !chk)
    throw Error(ErrorCode::NotABce, "outcome violates an obedience constraint");
  if (is_sbce(g, p)) return g;

  std::size_t S = g.num_states();
  // bonus[i][a_i] over (a_{-i}, theta); empty for unrecommended actions.
  std::vector<std::vector<Vec>> bonus(g.num_players());
  Rational largest = 0;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::size_t k = g.num_actions(i);
    std::size_t dim = g.num_opponent_profiles(i) * S;
    std::vector<Vec> beliefs;
    std::vector<std::size_t> belief_of(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      if (!is_supported(g, p, i, a)) continue;
      Vec b = conditional_belief(g, p, i, a).belief;
      auto it = std::find(beliefs.begin(), beliefs.end(), b);
      belief_of[a] = static_cast<std::size_t>(it - beliefs.begin());
      if (it == beliefs.end()) beliefs.push_back(std::move(b));
    }
    auto order = extreme_order(beliefs);
    std::size_t m = order.size();
    std::vector<std::size_t> rank(m);
    for (std::size_t r = 0; r < m; ++r) rank[order[r]] = r;
    std::vector<const Vec*> seq;
    for (auto idx : order) seq.push_back(&beliefs[idx]);

    std::vector<Vec> f(m);
    f[0] = Vec(dim, Rational(1));
    for (std::size_t r = 1; r < m; ++r)
      f[r] = separating_functional(*seq[r], std::vector<const Vec*>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r)));

    std::vector<Rational> t(m, Rational(1));
    for (std::size_t l = 0; l + 1 < m; ++l)
      for (std::size_t r = l + 1; r < m; ++r) {
        Rational lower_side = dot(f[l], *seq[r]);
        if (sgn(lower_side) <= 0) continue;
        Rational bound = dot(f[r], *seq[r]) / lower_side / 2;
        if (bound < t[l]) t[l] = bound;
      }
    std::vector<Rational> s(m);
    Rational prod = 1;
    for (std::size_t r = m; r-- > 0;) {
      prod *= t[r];
      s[r] = prod;
    }
    bonus[i].assign(k, Vec());
    for (std::size_t a = 0; a < k; ++a) {
      if (belief_of[a] == k) continue;
      std::size_t r = rank[belief_of[a]];
      Vec gv = f[r];
      for (auto& x : gv) {
        x *= s[r];
        if (abs(x) > largest) largest = abs(x);
      }
      bonus[i][a] = std::move(gv);
    }
  }

  Rational delta = 1;
  while (delta * largest > eps) delta /= 2;
  BaseGame h = g;
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      const Vec& gv = bonus[i][g.action_of(a, i)];
      if (gv.empty()) continue;
      std::size_t o = g.opponent_index(a, i);
      for (std::size_t th = 0; th < S; ++th)
        h.set_u(i, a, th, g.u(i, a, th) + delta * gv[o * S + th]);
    }
  if (utility_distance(g, h) > eps) throw std::logic_error("perturbation exceeds epsilon");
  if (!is_sbce(h, p)) throw std::logic_error("perturbed game does not separate the outcome");
  return h;
}

}  // namespace rir
