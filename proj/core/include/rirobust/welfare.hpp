#pragma once

#include <cstddef>
#include <vector>

#include "rirobust/game.hpp"

namespace rir {

enum class ValueMode { RationalInattention, ArbitraryTechnology };
enum class Attainability { PointOnly, HalfOpen, Closed };

struct PlayerInterval {
  Rational lower;  // uninformed value
  Rational upper;  // gross value
  Attainability kind = Attainability::PointOnly;
  std::size_t deviation_action = 0;
};

struct ValueInterval {
  ValueMode mode = ValueMode::RationalInattention;
  std::vector<PlayerInterval> players;
};

ValueInterval value_interval(const BaseGame& g, const Outcome& p,
                             ValueMode mode = ValueMode::RationalInattention);

struct WelfareMin {
  Rational value;
  Outcome outcome;
};

/// min over BCE of the sum of gross values.
WelfareMin worst_case_exogenous(const BaseGame& g);
/// min over BCE of the sum of uninformed values, via one epigraph variable per
/// player and one row per deviation action.
WelfareMin worst_case_rational_inattention(const BaseGame& g);

struct WelfareReport {
  WelfareMin w_bar;
  WelfareMin w_lower;
  Rational gap;
};

WelfareReport welfare_report(const BaseGame& g);

struct GapCondition {
  std::size_t player = 0;
  std::size_t action = 0;
  /// Smallest recommendation probability over the relaxed optimal face.
  Rational min_probability;
  /// Smallest obedience slack against the other action over that face.
  Rational min_strict_slack;
};

struct GapDiagnostic {
  Rational relaxed_value;
  Outcome relaxed_minimizer;
  std::vector<GapCondition> conditions;
  Rational w_bar;
  Rational w_lower;
  /// Whether the face test matches the direct comparison w_lower < w_bar.
  bool agrees = false;
};

struct GapTestResult {
  bool gap = false;
  GapDiagnostic diagnostic;
};

/// For symmetric binary-action games: decides w_lower < w_bar from the
/// minimizers of the uninformed welfare over all symmetric outcomes,
/// ignoring obedience.
GapTestResult binary_symmetric_gap_test(const BaseGame& g);

}  // namespace rir
