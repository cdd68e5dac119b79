#include "rirobust/vanishing.hpp"

#include <algorithm>

#include "rirobust/separation.hpp"

namespace rir {

NashCheck is_complete_info_nash(const BaseGame& g, const Outcome& p) {
  validate_outcome(g, p);
  std::size_t n = g.num_players(), S = g.num_states();
  NashProfile prof;
  prof.alpha.resize(S);
  for (std::size_t t = 0; t < S; ++t) {
    const Rational& pi = g.prior()[t];
    // marg[i][a_i] = p(a_i, theta).
    std::vector<std::vector<Rational>> marg(n);
    for (std::size_t i = 0; i < n; ++i) marg[i].assign(g.num_actions(i), 0);
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      const Rational& w = p.p[g.cell(a, t)];
      if (sgn(w) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) marg[i][g.action_of(a, i)] += w;
    }
    Rational scale = 1;
    for (std::size_t i = 1; i < n; ++i) scale *= pi;
    for (std::size_t a = 0; a < g.num_profiles(); ++a) {
      Rational prod = 1;
      for (std::size_t i = 0; i < n; ++i) prod *= marg[i][g.action_of(a, i)];
      if (p.p[g.cell(a, t)] * scale != prod) return {};
    }
    auto& alpha = prof.alpha[t];
    alpha = marg;
    for (auto& row : alpha)
      for (auto& v : row) v /= pi;
    for (std::size_t i = 0; i < n; ++i) {
      // Opponent distribution given theta, indexed by opponent profile.
      std::vector<Rational> opp(g.num_opponent_profiles(i) * S);
      for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
        Rational q = 1;
        std::size_t a = g.join(i, 0, o);
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) q *= alpha[j][g.action_of(a, j)];
        opp[o * S + t] = q;
      }
      auto br = best_responses(g, i, opp);
      for (std::size_t a = 0; a < g.num_actions(i); ++a)
        if (sgn(alpha[i][a]) > 0 && std::find(br.begin(), br.end(), a) == br.end()) return {};
    }
  }
  return {true, std::move(prof)};
}

namespace {

bool valid_partition(const BaseGame& g, const PartitionProfile& part) {
  if (part.cells.size() != g.num_players()) return false;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::vector<int> seen(g.num_actions(i), 0);
    for (const auto& cell : part.cells[i]) {
      if (cell.empty()) return false;
      for (auto a : cell) {
        if (a >= seen.size() || seen[a]++) return false;
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(seen.size())) return false;
  }
  return true;
}

}  // namespace

bool is_measurable(const BaseGame& g, const Outcome& p, const PartitionProfile& partition) {
  if (!valid_partition(g, partition)) return false;
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (const auto& cell : partition.cells[i]) {
      std::optional<std::size_t> ref;
      for (auto a : cell) {
        if (!is_supported(g, p, i, a)) continue;
        if (!ref)
          ref = a;
        else if (!beliefs_equal(g, p, i, *ref, a))
          return false;
      }
    }
  return true;
}

bool is_decomposable(const BaseGame& g, const Outcome& q, const PartitionProfile& partition,
                     const Outcome& p) {
  if (!is_measurable(g, q, partition)) return false;
  for (std::size_t i = 0; i < g.num_players(); ++i)
    for (const auto& cell : partition.cells[i])
      for (std::size_t x = 0; x < cell.size(); ++x)
        for (std::size_t y = x + 1; y < cell.size(); ++y) {
          Rational qa = action_probability(g, q, i, cell[x]), qb = action_probability(g, q, i, cell[y]);
          Rational pa = action_probability(g, p, i, cell[x]), pb = action_probability(g, p, i, cell[y]);
          if (qa * pb != pa * qb) return false;
        }
  return true;
}

std::optional<std::string> verify_vce_certificate(const BaseGame& g, const Outcome& p,
                                                  const VceCertificate& cert) {
  if (!valid_partition(g, cert.partition)) return "partition is not a partition of each action set";
  if (cert.weights.empty() || cert.weights.size() != cert.components.size())
    return "one positive weight per component is required";
  Rational total = 0;
  for (const auto& w : cert.weights) {
    if (sgn(w) <= 0) return "weights must be positive";
    total += w;
  }
  if (total != 1) return "weights sum to " + to_string(total) + ", not 1";
  Outcome mix = zero_outcome(g);
  for (std::size_t l = 0; l < cert.components.size(); ++l) {
    const auto& q = cert.components[l];
    try {
      validate_outcome(g, q);
    } catch (const Error& e) {
      return "component " + std::to_string(l) + " is not an outcome: " + e.what();
    }
    if (!is_complete_info_nash(g, q)) return "component " + std::to_string(l) + " is not a complete-information Nash equilibrium";
    if (!is_decomposable(g, q, cert.partition, p))
      return "component " + std::to_string(l) + " is not decomposable for the partition";
    for (std::size_t c = 0; c < mix.p.size(); ++c) mix.p[c] += cert.weights[l] * q.p[c];
  }
  if (!(mix == p)) return "components do not average to the outcome";
  try {
    validate_outcome(g, cert.evidence);
  } catch (const Error& e) {
    return std::string("evidence is not an outcome: ") + e.what();
  }
  if (!is_sbce(g, cert.evidence)) return "evidence is not a separated BCE";
  if (!same_partition(belief_partition(g, cert.evidence), cert.partition))
    return "evidence induces a different belief partition";
  for (std::size_t c = 0; c < p.p.size(); ++c)
    if (abs(cert.evidence.p[c] - p.p[c]) > cert.epsilon) return "evidence is farther than epsilon";
  return std::nullopt;
}

namespace {

// A BCE pair with distinct beliefs sharing a jeopardizer keeps every nearby
// BCE non-separated, so such an outcome is isolated from the sBCE set.
std::optional<DensityWitness> isolation_witness(const BaseGame& g, const Outcome& p) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::size_t k = g.num_actions(i);
    std::vector<std::optional<std::vector<std::size_t>>> J(k);
    auto jset = [&](std::size_t b) -> const std::vector<std::size_t>& {
      if (!J[b]) J[b] = jeopardization_set(g, i, b);
      return *J[b];
    };
    for (std::size_t a = 0; a < k; ++a) {
      if (!is_supported(g, p, i, a)) continue;
      for (std::size_t b = a + 1; b < k; ++b) {
        if (!is_supported(g, p, i, b) || beliefs_equal(g, p, i, a, b)) continue;
        for (auto c : jset(a))
          if (std::find(jset(b).begin(), jset(b).end(), c) != jset(b).end())
            return DensityWitness{p, i, a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<VceCertificate> self_certificate(const BaseGame& g, const Outcome& p,
                                               const Outcome& evidence, const Rational& eps) {
  VceCertificate cert{belief_partition(g, evidence), {Rational(1)}, {p}, evidence, eps};
  if (verify_vce_certificate(g, p, cert)) return std::nullopt;
  return cert;
}

}  // namespace

VceVerdict check_vce(const BaseGame& g, const Outcome& p, const VceOptions& options) {
  validate_outcome(g, p);
  VceVerdict v;
  if (options.certificate) {
    if (auto why = verify_vce_certificate(g, p, *options.certificate)) {
      v.kind = VceVerdict::Kind::Undetermined;
      v.reason = "certificate rejected: " + *why;
    } else {
      v.kind = VceVerdict::Kind::IsVce;
      v.certificate = options.certificate;
      v.reason = "certificate verified";
    }
    return v;
  }
  if (auto chk = is_bce(g, p); !chk) {
    v.kind = VceVerdict::Kind::NotVce;
    v.obedience_witness = chk.violation;
    v.reason = "not a BCE";
    return v;
  }
  bool nash = static_cast<bool>(is_complete_info_nash(g, p));
  if (nash && is_sbce(g, p)) {
    if (auto cert = self_certificate(g, p, p, 0)) {
      v.kind = VceVerdict::Kind::IsVce;
      v.certificate = std::move(cert);
      v.reason = "outcome is itself a separated BCE";
      return v;
    }
  }
  if (nash) {
    auto density = classify_density(g, options.density);
    if (density.verdict == Density::Dense) {
      const Outcome& target = *density.dense_certificate;
      Rational t = options.epsilon < Rational(1, 2) ? options.epsilon : Rational(1, 2);
      for (int attempt = 0; attempt < 64; ++attempt, t /= 2) {
        Outcome e = zero_outcome(g);
        for (std::size_t c = 0; c < e.p.size(); ++c) e.p[c] = (1 - t) * p.p[c] + t * target.p[c];
        if (!is_sbce(g, e)) continue;
        if (auto cert = self_certificate(g, p, e, options.epsilon)) {
          v.kind = VceVerdict::Kind::IsVce;
          v.certificate = std::move(cert);
          v.reason = "separated BCE within epsilon by mixing toward a minimally mixed sBCE";
          return v;
        }
      }
      v.kind = VceVerdict::Kind::IsVce;
      v.reason = "separated BCEs are dense in the BCE set";
      return v;
    }
  }
  if (auto w = isolation_witness(g, p)) {
    v.kind = VceVerdict::Kind::NotVce;
    v.density_witness = std::move(w);
    v.reason = "distinct beliefs share a jeopardizing action";
    return v;
  }
  v.kind = VceVerdict::Kind::Undetermined;
  v.reason = nash ? "no constructive path to a nearby separated BCE"
                  : "outcome is not a complete-information Nash equilibrium and no certificate was supplied";
  return v;
}

}  // namespace rir
