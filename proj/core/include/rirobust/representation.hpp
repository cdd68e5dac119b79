#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rirobust/game.hpp"

namespace rir {

/// Per player, a partition of the action set. Supported actions share a cell
/// iff they induce the same belief; unrecommended actions form one extra cell.
struct PartitionProfile {
  std::vector<std::vector<std::vector<std::size_t>>> cells;
  std::vector<std::optional<std::size_t>> off_support;
};

PartitionProfile belief_partition(const BaseGame& g, const Outcome& p);

/// Same cells per player, ignoring cell order and the off-support marker.
bool same_partition(const PartitionProfile& a, const PartitionProfile& b);

/// Dirac correlation states over cell profiles, a state kernel, signal sets
/// padded past the action and (Z x Theta) counts, and action plans.
struct CanonicalRepresentation {
  PartitionProfile partition;
  /// zs[z][i] is the cell that correlation state z assigns to player i.
  std::vector<std::vector<std::size_t>> zs;
  /// zeta[theta][z].
  std::vector<std::vector<Rational>> zeta;
  std::vector<std::size_t> num_signals;
  /// xi[i][z][theta][x].
  std::vector<std::vector<std::vector<std::vector<Rational>>>> xi;
  /// sigma[i][x][a_i].
  std::vector<std::vector<std::vector<Rational>>> sigma;
};

CanonicalRepresentation build_canonical(const BaseGame& g, const Outcome& p);
Outcome induced_outcome(const CanonicalRepresentation& rep, const BaseGame& g);

/// State-by-state best-response value of player i against the representation.
Rational informed_value(const CanonicalRepresentation& rep, const BaseGame& g, std::size_t i);

struct PlayerCost {
  Rational lambda;
  Rational equilibrium_cost;
  Rational upper_bound;
  Rational informed_value;
};

struct CostCertificate {
  std::vector<PlayerCost> players;
};

CostCertificate cost_certificate(const BaseGame& g, const Outcome& p,
                                 const std::vector<Rational>& lambda);

/// Signal distributions per row, rows indexed z * num_states + theta.
struct Experiment {
  std::size_t num_z = 0;
  std::size_t num_states = 0;
  std::size_t num_signals = 0;
  std::vector<std::vector<Rational>> kernel;
};

/// garbling[x'][x] = probability of reporting x after observing x'.
struct Garbling {
  std::vector<std::vector<Rational>> kernel;
};

/// Markov kernel turning xi into xi_prime on the rows with zeta * prior > 0, if any.
std::optional<Garbling> find_garbling(const Experiment& xi, const Experiment& xi_prime,
                                      const std::vector<std::vector<Rational>>& zeta,
                                      const std::vector<Rational>& prior);

bool blackwell_dominates(const Experiment& xi, const Experiment& xi_prime,
                         const std::vector<std::vector<Rational>>& zeta,
                         const std::vector<Rational>& prior);

/// Experiment of player i in a canonical representation.
Experiment experiment_of(const CanonicalRepresentation& rep, std::size_t i);

}  // namespace rir
