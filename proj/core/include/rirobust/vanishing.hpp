#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rirobust/bce.hpp"
#include "rirobust/game.hpp"
#include "rirobust/representation.hpp"
#include "rirobust/structure.hpp"

namespace rir {

/// alpha[theta][i][a_i]: independent mixed actions, state by state.
struct NashProfile {
  std::vector<std::vector<std::vector<Rational>>> alpha;
};

struct NashCheck {
  bool ok = false;
  std::optional<NashProfile> profile;
  explicit operator bool() const { return ok; }
};

/// Conditional on each state, play is independent across players and each
/// mixed action is a best reply to the others in that state's game.
NashCheck is_complete_info_nash(const BaseGame& g, const Outcome& p);

/// Supported actions in a common cell induce equal beliefs.
bool is_measurable(const BaseGame& g, const Outcome& p, const PartitionProfile& partition);

/// q is measurable and q(a_i) p(b_i) = p(a_i) q(b_i) within every cell.
bool is_decomposable(const BaseGame& g, const Outcome& q, const PartitionProfile& partition,
                     const Outcome& p);

struct VceCertificate {
  PartitionProfile partition;
  std::vector<Rational> weights;
  std::vector<Outcome> components;
  /// A separated BCE with the certificate's belief partition near the outcome.
  Outcome evidence;
  Rational epsilon;
};

/// Empty on success, otherwise the first failed condition.
std::optional<std::string> verify_vce_certificate(const BaseGame& g, const Outcome& p,
                                                  const VceCertificate& cert);

struct VceOptions {
  Rational epsilon = Rational(1, 100);
  SearchOptions density;
  std::optional<VceCertificate> certificate;
};

struct VceVerdict {
  enum class Kind { IsVce, NotVce, Undetermined };
  Kind kind = Kind::Undetermined;
  std::optional<VceCertificate> certificate;
  std::optional<ObedienceViolation> obedience_witness;
  std::optional<DensityWitness> density_witness;
  std::string reason;
};

VceVerdict check_vce(const BaseGame& g, const Outcome& p, const VceOptions& options = {});

}  // namespace rir
