#include "rirobust/representation.hpp"

#include <algorithm>
#include <stdexcept>

#include "rirobust/lp.hpp"
#include "rirobust/separation.hpp"

namespace rir {

PartitionProfile belief_partition(const BaseGame& g, const Outcome& p) {
  validate_outcome(g, p);
  PartitionProfile part;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::vector<std::vector<std::size_t>> cells;
    std::vector<std::size_t> off;
    for (std::size_t a = 0; a < g.num_actions(i); ++a) {
      if (!is_supported(g, p, i, a)) {
        off.push_back(a);
        continue;
      }
      auto it = std::find_if(cells.begin(), cells.end(), [&](const auto& cell) {
        return beliefs_equal(g, p, i, cell.front(), a);
      });
      if (it == cells.end())
        cells.push_back({a});
      else
        it->push_back(a);
    }
    std::optional<std::size_t> off_index;
    if (!off.empty()) {
      off_index = cells.size();
      cells.push_back(std::move(off));
    }
    part.cells.push_back(std::move(cells));
    part.off_support.push_back(off_index);
  }
  return part;
}

bool same_partition(const PartitionProfile& a, const PartitionProfile& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    auto x = a.cells[i], y = b.cells[i];
    for (auto& c : x) std::sort(c.begin(), c.end());
    for (auto& c : y) std::sort(c.begin(), c.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

CanonicalRepresentation build_canonical(const BaseGame& g, const Outcome& p) {
  CanonicalRepresentation rep;
  rep.partition = belief_partition(g, p);
  std::size_t n = g.num_players(), S = g.num_states();
  std::vector<std::vector<std::size_t>> cell_of(n);
  std::vector<std::size_t> radix(n);
  for (std::size_t i = 0; i < n; ++i) {
    cell_of[i].assign(g.num_actions(i), 0);
    const auto& cells = rep.partition.cells[i];
    radix[i] = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (auto a : cells[c]) cell_of[i][a] = c;
  }
  std::size_t nz = 1;
  for (auto r : radix) nz *= r;
  rep.zs.assign(nz, std::vector<std::size_t>(n));
  for (std::size_t z = 0; z < nz; ++z) {
    std::size_t rest = z;
    for (std::size_t i = n; i-- > 0;) {
      rep.zs[z][i] = rest % radix[i];
      rest /= radix[i];
    }
  }
  auto z_of_profile = [&](std::size_t a) {
    std::size_t z = 0;
    for (std::size_t i = 0; i < n; ++i) z = z * radix[i] + cell_of[i][g.action_of(a, i)];
    return z;
  };
  rep.zeta.assign(S, std::vector<Rational>(nz));
  for (std::size_t a = 0; a < g.num_profiles(); ++a) {
    std::size_t z = z_of_profile(a);
    for (std::size_t t = 0; t < S; ++t) rep.zeta[t][z] += p.p[g.cell(a, t)];
  }
  for (std::size_t t = 0; t < S; ++t)
    for (auto& v : rep.zeta[t]) v /= g.prior()[t];

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = g.num_actions(i);
    std::size_t nx = std::max(k, nz * S) + 1;
    rep.num_signals.push_back(nx);
    std::vector<std::vector<std::vector<Rational>>> xi(
        nz, std::vector<std::vector<Rational>>(S, std::vector<Rational>(nx)));
    for (std::size_t z = 0; z < nz; ++z)
      for (std::size_t t = 0; t < S; ++t) xi[z][t][rep.zs[z][i]] = 1;
    rep.xi.push_back(std::move(xi));

    const auto& cells = rep.partition.cells[i];
    std::vector<std::vector<Rational>> sigma(nx, std::vector<Rational>(k));
    for (std::size_t x = 0; x < nx; ++x) {
      if (x >= cells.size()) {
        for (auto& v : sigma[x]) v = Rational(1, static_cast<unsigned long>(k));
        continue;
      }
      const auto& cell = cells[x];
      if (rep.partition.off_support[i] && *rep.partition.off_support[i] == x) {
        for (auto a : cell) sigma[x][a] = Rational(1, static_cast<unsigned long>(cell.size()));
        continue;
      }
      Rational mass = 0;
      std::vector<Rational> pa(cell.size());
      for (std::size_t c = 0; c < cell.size(); ++c) {
        pa[c] = action_probability(g, p, i, cell[c]);
        mass += pa[c];
      }
      for (std::size_t c = 0; c < cell.size(); ++c) sigma[x][cell[c]] = pa[c] / mass;
    }
    rep.sigma.push_back(std::move(sigma));
  }
  return rep;
}

namespace {

// factor[i][a_i] = sum_x sigma_i(a_i | x) xi_i(x | z, theta).
std::vector<std::vector<Rational>> action_factors(const CanonicalRepresentation& rep,
                                                  const BaseGame& g, std::size_t z,
                                                  std::size_t t) {
  std::vector<std::vector<Rational>> f(g.num_players());
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    f[i].assign(g.num_actions(i), 0);
    const auto& xs = rep.xi[i][z][t];
    for (std::size_t x = 0; x < xs.size(); ++x) {
      if (sgn(xs[x]) == 0) continue;
      for (std::size_t a = 0; a < g.num_actions(i); ++a) f[i][a] += rep.sigma[i][x][a] * xs[x];
    }
  }
  return f;
}

}  // namespace

Outcome induced_outcome(const CanonicalRepresentation& rep, const BaseGame& g) {
  Outcome p = zero_outcome(g);
  for (std::size_t t = 0; t < g.num_states(); ++t)
    for (std::size_t z = 0; z < rep.zs.size(); ++z) {
      const Rational& w = rep.zeta[t][z];
      if (sgn(w) == 0) continue;
      auto f = action_factors(rep, g, z, t);
      for (std::size_t a = 0; a < g.num_profiles(); ++a) {
        Rational prod = w * g.prior()[t];
        for (std::size_t i = 0; i < g.num_players() && sgn(prod) != 0; ++i)
          prod *= f[i][g.action_of(a, i)];
        if (sgn(prod) != 0) p.p[g.cell(a, t)] += prod;
      }
    }
  return p;
}

Rational informed_value(const CanonicalRepresentation& rep, const BaseGame& g, std::size_t i) {
  Rational total = 0;
  for (std::size_t t = 0; t < g.num_states(); ++t)
    for (std::size_t z = 0; z < rep.zs.size(); ++z) {
      const Rational& w = rep.zeta[t][z];
      if (sgn(w) == 0) continue;
      auto f = action_factors(rep, g, z, t);
      std::optional<Rational> best;
      for (std::size_t b = 0; b < g.num_actions(i); ++b) {
        Rational v = 0;
        for (std::size_t o = 0; o < g.num_opponent_profiles(i); ++o) {
          std::size_t a = g.join(i, b, o);
          Rational prod = 1;
          for (std::size_t j = 0; j < g.num_players() && sgn(prod) != 0; ++j)
            if (j != i) prod *= f[j][g.action_of(a, j)];
          if (sgn(prod) != 0) v += g.u(i, a, t) * prod;
        }
        if (!best || v > *best) best = v;
      }
      total += w * g.prior()[t] * *best;
    }
  return total;
}

CostCertificate cost_certificate(const BaseGame& g, const Outcome& p,
                                 const std::vector<Rational>& lambda) {
  validate_outcome(g, p);
  if (lambda.size() != g.num_players())
    throw Error(ErrorCode::DimensionMismatch, "one lambda per player is required");
  for (const auto& l : lambda)
    if (sgn(l) <= 0 || l > 1) throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0, 1]");
  if (!is_sbce(g, p)) throw Error(ErrorCode::NotSeparatedBce, "outcome is not a separated BCE");
  auto rep = build_canonical(g, p);
  CostCertificate cert;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    PlayerCost pc;
    pc.lambda = lambda[i];
    Rational gross = gross_value(g, p, i), blind = uninformed_value(g, p, i).value;
    pc.informed_value = informed_value(rep, g, i);
    pc.equilibrium_cost = pc.lambda * (gross - blind);
    pc.upper_bound = pc.lambda + pc.informed_value - ((1 - pc.lambda) * gross + pc.lambda * blind);
    if (sgn(pc.equilibrium_cost) < 0 || pc.equilibrium_cost > pc.upper_bound)
      throw std::logic_error("cost certificate ordering fails");
    cert.players.push_back(std::move(pc));
  }
  return cert;
}

Experiment experiment_of(const CanonicalRepresentation& rep, std::size_t i) {
  Experiment e;
  e.num_z = rep.zs.size();
  e.num_states = rep.zeta.size();
  e.num_signals = rep.num_signals[i];
  for (std::size_t z = 0; z < e.num_z; ++z)
    for (std::size_t t = 0; t < e.num_states; ++t) e.kernel.push_back(rep.xi[i][z][t]);
  return e;
}

std::optional<Garbling> find_garbling(const Experiment& xi, const Experiment& xi_prime,
                                      const std::vector<std::vector<Rational>>& zeta,
                                      const std::vector<Rational>& prior) {
  std::size_t S = xi.num_states, Z = xi.num_z;
  if (xi_prime.num_states != S || xi_prime.num_z != Z || prior.size() != S || zeta.size() != S ||
      xi.kernel.size() != Z * S || xi_prime.kernel.size() != Z * S)
    throw Error(ErrorCode::DimensionMismatch, "experiments must share states and correlation states");
  for (const auto& row : zeta)
    if (row.size() != Z) throw Error(ErrorCode::DimensionMismatch, "kernel width");
  std::size_t nx = xi.num_signals, ny = xi_prime.num_signals;
  for (std::size_t r = 0; r < Z * S; ++r)
    if (xi.kernel[r].size() != nx || xi_prime.kernel[r].size() != ny)
      throw Error(ErrorCode::DimensionMismatch, "experiment rows must match signal counts");

  LinearProgram lp;
  auto var = [&](std::size_t from, std::size_t to) { return from * ny + to; };
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) lp.add_variable();
  for (std::size_t a = 0; a < nx; ++a) {
    std::vector<Term> row;
    for (std::size_t b = 0; b < ny; ++b) row.push_back({var(a, b), 1});
    lp.add_constraint(std::move(row), Relation::Equal, 1);
  }
  for (std::size_t z = 0; z < Z; ++z)
    for (std::size_t t = 0; t < S; ++t) {
      if (sgn(zeta[t][z]) == 0 || sgn(prior[t]) == 0) continue;
      const auto& src = xi.kernel[z * S + t];
      const auto& dst = xi_prime.kernel[z * S + t];
      for (std::size_t b = 0; b < ny; ++b) {
        std::vector<Term> row;
        for (std::size_t a = 0; a < nx; ++a)
          if (sgn(src[a]) != 0) row.push_back({var(a, b), src[a]});
        lp.add_constraint(std::move(row), Relation::Equal, dst[b]);
      }
    }
  auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  Garbling gb;
  gb.kernel.assign(nx, std::vector<Rational>(ny));
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) gb.kernel[a][b] = sol.point[var(a, b)];
  return gb;
}

bool blackwell_dominates(const Experiment& xi, const Experiment& xi_prime,
                         const std::vector<std::vector<Rational>>& zeta,
                         const std::vector<Rational>& prior) {
  return find_garbling(xi, xi_prime, zeta, prior).has_value();
}

}  // namespace rir
