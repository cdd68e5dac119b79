#include "rirobust/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rirobust/error.hpp"

namespace rir {

std::size_t LinearProgram::add_variable(std::string name, std::optional<Rational> lower,
                                        std::optional<Rational> upper) {
  if (lower && upper && *upper < *lower)
    throw Error(ErrorCode::InvalidArgument, "variable upper bound below lower bound");
  names_.push_back(name.empty() ? "x" + std::to_string(names_.size()) : std::move(name));
  lower_.push_back(std::move(lower));
  upper_.push_back(std::move(upper));
  return names_.size() - 1;
}

std::size_t LinearProgram::add_constraint(std::vector<Term> terms, Relation relation,
                                          Rational rhs) {
  for (const auto& t : terms)
    if (t.var >= names_.size())
      throw Error(ErrorCode::InvalidArgument, "constraint references an undeclared variable");
  constraints_.push_back({std::move(terms), relation, std::move(rhs)});
  return constraints_.size() - 1;
}

void LinearProgram::set_objective(Sense sense, std::vector<Term> terms, Rational constant) {
  for (const auto& t : terms)
    if (t.var >= names_.size())
      throw Error(ErrorCode::InvalidArgument, "objective references an undeclared variable");
  sense_ = sense;
  objective_ = std::move(terms);
  constant_ = std::move(constant);
}

Rational LinearProgram::evaluate(const std::vector<Rational>& x) const {
  Rational v = constant_;
  for (const auto& t : objective_) v += t.coef * x[t.var];
  return v;
}

bool LinearProgram::is_feasible(const std::vector<Rational>& x) const {
  if (x.size() != names_.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lower_[j] && x[j] < *lower_[j]) return false;
    if (upper_[j] && x[j] > *upper_[j]) return false;
  }
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * x[t.var];
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::string LinearProgram::dump() const {
  std::ostringstream os;
  auto terms = [&](const std::vector<Term>& ts) {
    if (ts.empty()) os << "0";
    bool first = true;
    for (const auto& t : ts) {
      if (!first) os << " + ";
      os << to_string(t.coef) << " " << names_[t.var];
      first = false;
    }
  };
  os << (sense_ == Sense::Minimize ? "minimize " : "maximize ");
  terms(objective_);
  if (constant_ != 0) os << " + " << to_string(constant_);
  os << "\nsubject to\n";
  for (const auto& c : constraints_) {
    os << "  ";
    terms(c.terms);
    os << (c.relation == Relation::LessEqual ? " <= "
           : c.relation == Relation::Equal   ? " = "
                                             : " >= ")
       << to_string(c.rhs) << "\n";
  }
  os << "bounds\n";
  for (std::size_t j = 0; j < names_.size(); ++j) {
    os << "  " << (lower_[j] ? to_string(*lower_[j]) : std::string("-inf")) << " <= "
       << names_[j] << " <= " << (upper_[j] ? to_string(*upper_[j]) : std::string("+inf"))
       << "\n";
  }
  return os.str();
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

enum class VarKind { Shift, Reflect, Split };

struct VarMap {
  VarKind kind;
  std::size_t col;
  std::size_t col2 = kNone;
  Rational offset = 0;
};

// min c.x + constant  s.t.  A x = b, x >= 0, b >= 0.
struct StandardForm {
  std::size_t num_structural = 0;  // columns before artificials
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  Rational constant = 0;
  std::vector<VarMap> vars;
  std::vector<std::size_t> row_origin;  // original constraint index or kNone for bound rows
  std::vector<int> row_sign;
  std::vector<std::size_t> unit_column;  // slack column with +1 coefficient, or kNone
};

StandardForm to_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  std::size_t ncols = 0;
  std::vector<std::size_t> bounded;  // variables that need an upper-bound row
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const auto& lo = lp.lower()[j];
    const auto& hi = lp.upper()[j];
    if (lo) {
      sf.vars.push_back({VarKind::Shift, ncols++, kNone, *lo});
      if (hi) bounded.push_back(j);
    } else if (hi) {
      sf.vars.push_back({VarKind::Reflect, ncols++, kNone, *hi});
    } else {
      sf.vars.push_back({VarKind::Split, ncols, ncols + 1, 0});
      ncols += 2;
    }
  }
  std::size_t num_slacks = bounded.size();
  for (const auto& con : lp.constraints())
    if (con.relation != Relation::Equal) ++num_slacks;
  std::size_t total = ncols + num_slacks;
  std::size_t next_slack = ncols;

  auto add_row = [&](std::vector<Rational> row, Rational rhs, std::size_t slack, int slack_sign,
                     std::size_t origin) {
    int sign = 1;
    if (sgn(rhs) < 0 || (sgn(rhs) == 0 && slack != kNone && slack_sign < 0)) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
      sign = -1;
    }
    sf.unit_column.push_back(slack != kNone && slack_sign * sign > 0 ? slack : kNone);
    sf.A.push_back(std::move(row));
    sf.b.push_back(std::move(rhs));
    sf.row_origin.push_back(origin);
    sf.row_sign.push_back(sign);
  };

  for (std::size_t k = 0; k < lp.num_constraints(); ++k) {
    const auto& con = lp.constraints()[k];
    std::vector<Rational> row(total);
    Rational rhs = con.rhs;
    for (const auto& t : con.terms) {
      const auto& vm = sf.vars[t.var];
      switch (vm.kind) {
        case VarKind::Shift:
          row[vm.col] += t.coef;
          rhs -= t.coef * vm.offset;
          break;
        case VarKind::Reflect:
          row[vm.col] -= t.coef;
          rhs -= t.coef * vm.offset;
          break;
        case VarKind::Split:
          row[vm.col] += t.coef;
          row[vm.col2] -= t.coef;
          break;
      }
    }
    std::size_t slack = kNone;
    int slack_sign = 0;
    if (con.relation != Relation::Equal) {
      slack = next_slack++;
      slack_sign = con.relation == Relation::LessEqual ? 1 : -1;
      row[slack] = slack_sign;
    }
    add_row(std::move(row), std::move(rhs), slack, slack_sign, k);
  }
  for (std::size_t j : bounded) {
    std::vector<Rational> row(total);
    row[sf.vars[j].col] = 1;
    std::size_t slack = next_slack++;
    row[slack] = 1;
    add_row(std::move(row), *lp.upper()[j] - *lp.lower()[j], slack, 1, kNone);
  }

  sf.num_structural = total;
  sf.c.assign(total, 0);
  sf.constant = lp.objective_constant();
  int s = lp.sense() == Sense::Minimize ? 1 : -1;
  for (const auto& t : lp.objective()) {
    const auto& vm = sf.vars[t.var];
    Rational coef = s * t.coef;
    switch (vm.kind) {
      case VarKind::Shift:
        sf.c[vm.col] += coef;
        sf.constant += t.coef * vm.offset;
        break;
      case VarKind::Reflect:
        sf.c[vm.col] -= coef;
        sf.constant += t.coef * vm.offset;
        break;
      case VarKind::Split:
        sf.c[vm.col] += coef;
        sf.c[vm.col2] -= coef;
        break;
    }
  }
  return sf;
}

struct Tableau {
  std::vector<std::vector<Rational>> T;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::vector<Rational> d;
  Rational z = 0;
  std::vector<char> excluded;
  std::size_t pivots = 0;

  std::size_t rows() const { return T.size(); }
  std::size_t cols() const { return excluded.size(); }

  void pivot(std::size_t r, std::size_t j) {
    auto& pr = T[r];
    Rational inv = 1 / pr[j];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < pr.size(); ++c)
      if (sgn(pr[c]) != 0) {
        pr[c] *= inv;
        nz.push_back(c);
      }
    rhs[r] *= inv;
    Rational f;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (k == r || sgn(T[k][j]) == 0) continue;
      f = T[k][j];
      auto& row = T[k];
      for (std::size_t c : nz) row[c] -= f * pr[c];
      rhs[k] -= f * rhs[r];
    }
    if (sgn(d[j]) != 0) {
      f = d[j];
      for (std::size_t c : nz) d[c] -= f * pr[c];
      z += f * rhs[r];
    }
    basis[r] = j;
    ++pivots;
  }

  // Bland's rule. Returns false on unboundedness.
  bool optimize() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols(); ++j)
        if (!excluded[j] && sgn(d[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      Rational ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(T[r][enter]) <= 0) continue;
        ratio = rhs[r] / T[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void set_costs(const std::vector<Rational>& c) {
    d = c;
    z = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = c[basis[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j)
        if (sgn(T[r][j]) != 0) d[j] -= cb * T[r][j];
      z += cb * rhs[r];
    }
  }

  void remove_row(std::size_t r) {
    T.erase(T.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

// Phase one. Leaves a feasible basis free of artificial columns (redundant rows
// are dropped from both the tableau and sf), or returns nullopt if infeasible.
std::optional<Tableau> phase_one(StandardForm& sf) {
  std::size_t m = sf.A.size();
  std::size_t n0 = sf.num_structural;
  std::vector<std::size_t> art_rows;
  for (std::size_t r = 0; r < m; ++r)
    if (sf.unit_column[r] == kNone) art_rows.push_back(r);
  std::size_t n = n0 + art_rows.size();

  Tableau tab;
  tab.T.resize(m);
  tab.rhs = sf.b;
  tab.basis.resize(m);
  tab.excluded.assign(n, 0);
  for (std::size_t r = 0; r < m; ++r) {
    tab.T[r] = sf.A[r];
    tab.T[r].resize(n);
    tab.basis[r] = sf.unit_column[r];
  }
  for (std::size_t k = 0; k < art_rows.size(); ++k) {
    tab.T[art_rows[k]][n0 + k] = 1;
    tab.basis[art_rows[k]] = n0 + k;
  }
  tab.d.assign(n, 0);
  if (!art_rows.empty()) {
    std::vector<Rational> c1(n);
    for (std::size_t k = 0; k < art_rows.size(); ++k) c1[n0 + k] = 1;
    tab.set_costs(c1);
    tab.optimize();
    if (sgn(tab.z) != 0) return std::nullopt;
    std::vector<std::size_t> redundant;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (tab.basis[r] < n0) continue;
      std::size_t j = 0;
      while (j < n0 && sgn(tab.T[r][j]) == 0) ++j;
      if (j < n0)
        tab.pivot(r, j);
      else
        redundant.push_back(r);
    }
    for (std::size_t k = redundant.size(); k-- > 0;) {
      std::size_t r = redundant[k];
      tab.remove_row(r);
      sf.A.erase(sf.A.begin() + static_cast<std::ptrdiff_t>(r));
      sf.b.erase(sf.b.begin() + static_cast<std::ptrdiff_t>(r));
      sf.row_origin.erase(sf.row_origin.begin() + static_cast<std::ptrdiff_t>(r));
      sf.row_sign.erase(sf.row_sign.begin() + static_cast<std::ptrdiff_t>(r));
      sf.unit_column.erase(sf.unit_column.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }
  for (std::size_t j = n0; j < n; ++j) tab.excluded[j] = 1;
  return tab;
}

std::vector<Rational> recover_point(const StandardForm& sf, const Tableau& tab) {
  std::vector<Rational> xs(tab.cols());
  for (std::size_t r = 0; r < tab.rows(); ++r) xs[tab.basis[r]] = tab.rhs[r];
  std::vector<Rational> x(sf.vars.size());
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const auto& vm = sf.vars[j];
    switch (vm.kind) {
      case VarKind::Shift: x[j] = vm.offset + xs[vm.col]; break;
      case VarKind::Reflect: x[j] = vm.offset - xs[vm.col]; break;
      case VarKind::Split: x[j] = xs[vm.col] - xs[vm.col2]; break;
    }
  }
  return x;
}

// Solves M y = v exactly for square nonsingular M.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> M, std::vector<Rational> v) {
  std::size_t m = M.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && sgn(M[piv][col]) == 0) ++piv;
    if (piv == m) throw std::logic_error("optimal basis matrix is singular");
    std::swap(M[piv], M[col]);
    std::swap(v[piv], v[col]);
    Rational inv = 1 / M[col][col];
    for (std::size_t c = col; c < m; ++c) M[col][c] *= inv;
    v[col] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sgn(M[r][col]) == 0) continue;
      Rational f = M[r][col];
      for (std::size_t c = col; c < m; ++c)
        if (sgn(M[col][c]) != 0) M[r][c] -= f * M[col][c];
      v[r] -= f * v[col];
    }
  }
  return v;
}

// Independent check of the final basis against the standard form: primal
// feasibility, dual feasibility and equal objective values.
std::vector<Rational> certify(const StandardForm& sf, const Tableau& tab) {
  std::size_t m = tab.rows();
  std::size_t n = sf.num_structural;
  std::vector<Rational> xs(n);
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] >= n) throw std::logic_error("artificial column left in optimal basis");
    if (sgn(tab.rhs[r]) < 0) throw std::logic_error("optimal basis is primal infeasible");
    xs[tab.basis[r]] = tab.rhs[r];
  }
  Rational primal = 0;
  for (std::size_t j = 0; j < n; ++j) primal += sf.c[j] * xs[j];
  for (std::size_t r = 0; r < m; ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(sf.A[r][j]) != 0 && sgn(xs[j]) != 0) lhs += sf.A[r][j] * xs[j];
    if (lhs != sf.b[r]) throw std::logic_error("optimal point violates an equality row");
  }
  std::vector<Rational> y;
  if (m > 0) {
    std::vector<std::vector<Rational>> Bt(m, std::vector<Rational>(m));
    std::vector<Rational> cb(m);
    for (std::size_t r = 0; r < m; ++r) {
      cb[r] = sf.c[tab.basis[r]];
      for (std::size_t k = 0; k < m; ++k) Bt[r][k] = sf.A[k][tab.basis[r]];
    }
    y = solve_square(std::move(Bt), std::move(cb));
  }
  Rational dual = 0;
  for (std::size_t r = 0; r < m; ++r) dual += y[r] * sf.b[r];
  if (dual != primal) throw std::logic_error("primal and dual objective values differ");
  Rational rc;
  for (std::size_t j = 0; j < n; ++j) {
    rc = sf.c[j];
    for (std::size_t r = 0; r < m; ++r)
      if (sgn(sf.A[r][j]) != 0) rc -= y[r] * sf.A[r][j];
    if (sgn(rc) < 0) throw std::logic_error("optimal basis is dual infeasible");
  }
  return y;
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  StandardForm sf = to_standard_form(lp);
  LpSolution sol;
  auto tab = phase_one(sf);
  if (!tab) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  std::vector<Rational> c = sf.c;
  c.resize(tab->cols());
  tab->set_costs(c);
  bool bounded = tab->optimize();
  sol.pivots = tab->pivots;
  if (!bounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  auto y = certify(sf, *tab);
  sol.status = LpStatus::Optimal;
  sol.point = recover_point(sf, *tab);
  sol.value = lp.evaluate(sol.point);
  Rational expect = lp.sense() == Sense::Minimize ? Rational(sf.constant + tab->z)
                                                  : Rational(sf.constant - tab->z);
  if (expect != sol.value || !lp.is_feasible(sol.point))
    throw std::logic_error("simplex result fails re-verification");
  sol.certificate.basic_columns = tab->basis;
  sol.certificate.duals.assign(lp.num_constraints(), 0);
  int s = lp.sense() == Sense::Minimize ? 1 : -1;
  for (std::size_t r = 0; r < y.size(); ++r)
    if (sf.row_origin[r] != kNone)
      sol.certificate.duals[sf.row_origin[r]] = s * sf.row_sign[r] * y[r];
  return sol;
}

std::size_t vertex_cap() {
  if (const char* env = std::getenv("RI_ROBUST_VERTEX_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 24;
}

std::vector<std::vector<Rational>> enumerate_vertices(const LinearProgram& lp,
                                                      std::optional<std::size_t> cap) {
  std::size_t limit = cap ? *cap : vertex_cap();
  if (lp.num_variables() > limit)
    throw Error(ErrorCode::DimensionCapExceeded,
                "vertex enumeration over " + std::to_string(lp.num_variables()) +
                    " variables exceeds the cap of " + std::to_string(limit));
  for (const auto& lo : lp.lower())
    if (!lo) throw Error(ErrorCode::InvalidArgument, "vertex enumeration needs lower bounds");

  StandardForm sf = to_standard_form(lp);
  auto start = phase_one(sf);
  if (!start) return {};

  std::set<std::vector<Rational>> vertices;
  std::set<std::vector<std::size_t>> seen;
  auto key = [](std::vector<std::size_t> b) {
    std::sort(b.begin(), b.end());
    return b;
  };
  std::vector<Tableau> stack;
  seen.insert(key(start->basis));
  stack.push_back(std::move(*start));
  Rational best, ratio;
  while (!stack.empty()) {
    Tableau tab = std::move(stack.back());
    stack.pop_back();
    vertices.insert(recover_point(sf, tab));
    std::vector<char> in_basis(tab.cols(), 0);
    for (auto b : tab.basis) in_basis[b] = 1;
    for (std::size_t j = 0; j < tab.cols(); ++j) {
      if (tab.excluded[j] || in_basis[j]) continue;
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < tab.rows(); ++r) {
        if (sgn(tab.T[r][j]) <= 0) continue;
        ratio = tab.rhs[r] / tab.T[r][j];
        if (rows.empty() || ratio < best) {
          rows.assign(1, r);
          best = ratio;
        } else if (ratio == best) {
          rows.push_back(r);
        }
      }
      for (std::size_t r : rows) {
        auto next = tab.basis;
        next[r] = j;
        if (!seen.insert(key(next)).second) continue;
        Tableau t2 = tab;
        t2.pivot(r, j);
        stack.push_back(std::move(t2));
      }
    }
  }
  return {vertices.begin(), vertices.end()};
}

}  // namespace rir
