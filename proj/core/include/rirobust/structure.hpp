#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rirobust/game.hpp"

namespace rir {

struct JeopardyResult {
  bool jeopardizes = false;
  /// max over BCE of sum (u_i(b_i,.) - u_i(a_i,.)) p(b_i,.); never negative.
  Rational max_value;
  Outcome argmax;
};

/// Whether a_i belongs to J(b_i): a_i is a best response whenever any BCE
/// recommends b_i.
JeopardyResult jeopardizes(const BaseGame& g, std::size_t i, std::size_t a_i, std::size_t b_i);

std::vector<std::size_t> jeopardization_set(const BaseGame& g, std::size_t i, std::size_t b_i);

enum class DensityMode { Randomized, Exact };

struct SearchOptions {
  DensityMode mode = DensityMode::Randomized;
  std::size_t retries = 16;
  std::uint64_t seed = 0;
  std::optional<std::size_t> vertex_cap;
};

struct MinimallyMixed {
  Outcome outcome;
  DensityMode mode = DensityMode::Randomized;
  /// True when minimal mixing was certified against the full vertex set.
  bool verified = false;
  std::string note;
};

MinimallyMixed find_minimally_mixed(const BaseGame& g, const SearchOptions& options = {});

/// Equal beliefs of two coherent actions at every listed extreme point, in the
/// sense that every convex combination supporting both gives them the same
/// belief. Unrecommended actions count as the all-zeros belief.
bool equal_beliefs_on_vertices(const BaseGame& g, const std::vector<Outcome>& vertices,
                               std::size_t i, std::size_t a_i, std::size_t b_i);

/// Same test over the vertices of the BCE polytope.
bool equal_beliefs_in_all_bce(const BaseGame& g, std::size_t i, std::size_t a_i,
                              std::size_t b_i, std::optional<std::size_t> cap = {});

/// Vertices of the BCE polytope as outcomes.
std::vector<Outcome> bce_vertices(const BaseGame& g, std::optional<std::size_t> cap = {});

enum class Density { Dense, NowhereDense };

struct DensityWitness {
  Outcome outcome;
  std::size_t player = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t shared = 0;
};

struct DensityVerdict {
  Density verdict = Density::Dense;
  SearchOptions options;
  bool minimal_mixing_verified = false;
  std::optional<Outcome> dense_certificate;
  std::optional<DensityWitness> witness;
};

DensityVerdict classify_density(const BaseGame& g, const SearchOptions& options = {});

/// Re-checks a verdict's certificate from scratch.
bool verify_density_verdict(const BaseGame& g, const DensityVerdict& v);

/// Game within sup-distance eps of g in which the BCE p is separated.
BaseGame separating_perturbation(const BaseGame& g, const Outcome& p, const Rational& eps);

/// Sup-norm distance between the utility tables of two games on the same
/// players, states and actions.
Rational utility_distance(const BaseGame& g, const BaseGame& h);

}  // namespace rir
