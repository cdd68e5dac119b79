#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "rirobust/regime.hpp"
#include "rirobust/structure.hpp"
#include "rirobust/vanishing.hpp"
#include "rirobust/welfare.hpp"

namespace rir::report {

using io::Json;

Json analyze(const BaseGame& g, const SearchOptions& options);
Json welfare(const BaseGame& g);
Json density(const BaseGame& g, const SearchOptions& options);
Json check_outcome(const BaseGame& g, const Outcome& p, ValueMode mode);
/// Closed forms against the count program; with full_game, also the LP over
/// the complete game.
Json regime(const RegimeParams& params, bool full_game);
Json perturb(const BaseGame& g, const Outcome& p, const Rational& eps);
Json canonical(const BaseGame& g, const Outcome& p, const std::vector<Rational>& lambda);
Json vce(const BaseGame& g, const Outcome& p, const VceOptions& options);

/// Two aligned columns, one row per leaf of the report.
std::string render_table(const Json& report);

}  // namespace rir::report
