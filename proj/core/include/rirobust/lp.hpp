#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rirobust/rational.hpp"

namespace rir {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct Term {
  std::size_t var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation;
  Rational rhs;
};

/// Exact linear program. Variables default to x >= 0; pass std::nullopt as the
/// lower bound for a free variable.
class LinearProgram {
 public:
  std::size_t add_variable(std::string name = {},
                           std::optional<Rational> lower = Rational(0),
                           std::optional<Rational> upper = std::nullopt);
  std::size_t add_constraint(std::vector<Term> terms, Relation relation, Rational rhs);
  void set_objective(Sense sense, std::vector<Term> terms, Rational constant = 0);

  std::size_t num_variables() const { return names_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<std::optional<Rational>>& lower() const { return lower_; }
  const std::vector<std::optional<Rational>>& upper() const { return upper_; }
  const std::vector<std::string>& names() const { return names_; }
  Sense sense() const { return sense_; }
  const std::vector<Term>& objective() const { return objective_; }
  const Rational& objective_constant() const { return constant_; }

  Rational evaluate(const std::vector<Rational>& x) const;
  /// True iff x meets every constraint and bound exactly.
  bool is_feasible(const std::vector<Rational>& x) const;

  /// Plain-text standard-form dump for debugging.
  std::string dump() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::optional<Rational>> lower_, upper_;
  std::vector<Constraint> constraints_;
  std::vector<Term> objective_;
  Rational constant_ = 0;
  Sense sense_ = Sense::Minimize;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Optimal basis of the internal standard form plus the dual vector that
/// certifies it: reduced costs are sign-correct and primal and dual values
/// agree. Duals are reported per constraint of the original program.
struct BasisCertificate {
  std::vector<std::size_t> basic_columns;
  std::vector<Rational> duals;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;
  Rational value = 0;
  BasisCertificate certificate;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex with Bland's rule. Every optimal answer is
/// re-verified against the original program before it is returned.
LpSolution solve(const LinearProgram& lp);

/// Maximum number of variables accepted by enumerate_vertices. Defaults to 24;
/// the RI_ROBUST_VERTEX_CAP environment variable overrides it.
std::size_t vertex_cap();

/// All vertices of the bounded polyhedron described by lp's constraints and
/// bounds (the objective is ignored), deduplicated and sorted lexicographically.
/// Every variable must have a finite lower bound.
std::vector<std::vector<Rational>> enumerate_vertices(const LinearProgram& lp,
                                                      std::optional<std::size_t> cap = {});

}  // namespace rir
