#include "report.hpp"

#include <algorithm>

#include "rirobust/bce.hpp"
#include "rirobust/representation.hpp"
#include "rirobust/separation.hpp"

namespace rir::report {

using io::rational;

namespace {

const char* mode_name(DensityMode m) { return m == DensityMode::Exact ? "exact" : "randomized"; }

Json action_names(const BaseGame& g, std::size_t i, const std::vector<std::size_t>& acts) {
  Json j = Json::array();
  for (auto a : acts) j.push_back(g.actions()[i][a]);
  return j;
}

Json witness_json(const BaseGame& g, std::size_t i, std::size_t a, std::size_t b, std::size_t c) {
  Json j;
  j["player"] = g.players()[i];
  j["first"] = g.actions()[i][a];
  j["second"] = g.actions()[i][b];
  j["shared_best_response"] = g.actions()[i][c];
  return j;
}

Json obedience_json(const BaseGame& g, const ObedienceViolation& v) {
  Json j;
  j["player"] = g.players()[v.player];
  j["recommended"] = g.actions()[v.player][v.recommended];
  j["deviation"] = g.actions()[v.player][v.deviation];
  j["slack"] = rational(v.slack);
  return j;
}

Json welfare_min_json(const BaseGame& g, const WelfareMin& m) {
  Json j;
  j["value"] = rational(m.value);
  j["minimizer"] = io::outcome_to_json(g, m.outcome);
  return j;
}

Json options_json(const SearchOptions& o) {
  Json j;
  j["mode"] = mode_name(o.mode);
  if (o.mode == DensityMode::Randomized) {
    j["seed"] = o.seed;
    j["retries"] = o.retries;
  }
  return j;
}

}  // namespace

Json welfare(const BaseGame& g) {
  auto r = welfare_report(g);
  Json j;
  j["command"] = "welfare";
  j["w_bar"] = rational(r.w_bar.value);
  j["w_lower"] = rational(r.w_lower.value);
  j["gap"] = rational(r.gap);
  j["w_bar_minimizer"] = io::outcome_to_json(g, r.w_bar.outcome);
  j["w_lower_minimizer"] = io::outcome_to_json(g, r.w_lower.outcome);
  return j;
}

Json density(const BaseGame& g, const SearchOptions& options) {
  auto v = classify_density(g, options);
  Json j;
  j["command"] = "density";
  j["verdict"] = v.verdict == Density::Dense ? "dense" : "nowhere_dense";
  j["options"] = options_json(v.options);
  j["minimal_mixing_verified"] = v.minimal_mixing_verified;
  if (v.dense_certificate) j["separated_bce"] = io::outcome_to_json(g, *v.dense_certificate);
  if (v.witness) {
    const auto& w = *v.witness;
    Json wj = witness_json(g, w.player, w.first, w.second, w.shared);
    wj["outcome"] = io::outcome_to_json(g, w.outcome);
    j["witness"] = wj;
  }
  j["reverified"] = verify_density_verdict(g, v);
  return j;
}

Json analyze(const BaseGame& g, const SearchOptions& options) {
  Json j;
  j["command"] = "analyze";
  Json shape;
  shape["players"] = g.num_players();
  shape["states"] = g.num_states();
  shape["profiles"] = g.num_profiles();
  shape["cells"] = g.num_cells();
  shape["symmetric"] = is_symmetric_game(g);
  j["game"] = shape;
  auto w = welfare(g);
  w.erase("command");
  j["welfare"] = w;
  Json jeo = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    Json per = Json::object();
    for (std::size_t b = 0; b < g.num_actions(i); ++b)
      per[g.actions()[i][b]] = action_names(g, i, jeopardization_set(g, i, b));
    jeo[g.players()[i]] = per;
  }
  j["jeopardization"] = jeo;
  auto d = density(g, options);
  d.erase("command");
  j["density"] = d;
  return j;
}

Json check_outcome(const BaseGame& g, const Outcome& p, ValueMode mode) {
  validate_outcome(g, p);
  Json j;
  j["command"] = "check-outcome";
  auto bce = is_bce(g, p);
  j["is_bce"] = bce.ok;
  if (bce.violation) j["obedience_violation"] = obedience_json(g, *bce.violation);
  auto sep = is_separated(g, p);
  j["is_separated"] = sep.ok;
  if (sep.violation) {
    const auto& v = *sep.violation;
    j["separation_violation"] = witness_json(g, v.player, v.first, v.second, v.shared);
  }
  j["is_sbce"] = bce.ok && sep.ok;
  j["is_strict_bce"] = is_strict_bce(g, p);
  j["complete_info_nash"] = is_complete_info_nash(g, p).ok;
  j["gross_welfare"] = rational(gross_welfare(g, p));
  j["uninformed_welfare"] = rational(uninformed_welfare(g, p));
  Json players = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    Json pj;
    pj["gross_value"] = rational(gross_value(g, p, i));
    auto dev = uninformed_value(g, p, i);
    pj["uninformed_value"] = rational(dev.value);
    pj["uninformed_action"] = g.actions()[i][dev.action];
    Json recs = Json::object();
    for (std::size_t a = 0; a < g.num_actions(i); ++a) {
      if (!is_supported(g, p, i, a)) continue;
      auto cb = conditional_belief(g, p, i, a);
      Json r;
      r["probability"] = rational(cb.probability);
      r["best_responses"] = action_names(g, i, cb.br_set);
      recs[g.actions()[i][a]] = r;
    }
    pj["recommendations"] = recs;
    players[g.players()[i]] = pj;
  }
  j["players"] = players;
  if (bce.ok) {
    auto vi = value_interval(g, p, mode);
    Json iv = Json::object();
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      const auto& pi = vi.players[i];
      Json e;
      e["lower"] = rational(pi.lower);
      e["upper"] = rational(pi.upper);
      e["kind"] = pi.kind == Attainability::PointOnly ? "point"
                  : pi.kind == Attainability::HalfOpen ? "half_open"
                                                        : "closed";
      iv[g.players()[i]] = e;
    }
    j["value_intervals"] = iv;
    j["value_mode"] = mode == ValueMode::RationalInattention ? "rational_inattention"
                                                             : "arbitrary_technology";
  }
  return j;
}

Json regime(const RegimeParams& params, bool full_game) {
  validate_params(params);
  Json j;
  j["command"] = "regime";
  Json pj;
  pj["n"] = params.n;
  pj["k"] = rational(params.k);
  pj["x"] = rational(params.x);
  pj["states"] = params.states;
  Json prior = Json::array();
  for (const auto& q : params.prior) prior.push_back(rational(q));
  pj["prior"] = prior;
  j["params"] = pj;
  auto lower = reduced_symmetric_lp(params, RegimeObjective::UninformedWelfare);
  auto gross = reduced_symmetric_lp(params, RegimeObjective::GrossWelfare);
  Rational closed = wlower_closed_form(params);
  j["w_lower"] = rational(lower.value);
  j["w_lower_closed_form"] = rational(closed);
  j["w_bar"] = rational(gross.value);
  bool gap = gap_closed_form(params);
  j["gap"] = gap;
  j["gap_lp"] = gross.value > lower.value;
  j["w_lower_optimality_conditions"] = check_optimality_conditions(params, lower.kernel);
  Json kernel = Json::object();
  for (std::size_t t = 0; t < params.states.size(); ++t) {
    Json row = Json::array();
    for (const auto& q : lower.kernel.Q[t]) row.push_back(rational(q));
    kernel[std::to_string(params.states[t])] = row;
  }
  j["w_lower_kernel"] = kernel;
  if (closed != lower.value || gap != (gross.value > lower.value))
    throw std::logic_error("closed forms disagree with the count program");
  if (full_game) {
    auto g = build_regime_game(params);
    auto r = welfare_report(g);
    Json fj;
    fj["w_bar"] = rational(r.w_bar.value);
    fj["w_lower"] = rational(r.w_lower.value);
    j["full_game"] = fj;
    if (r.w_lower.value != lower.value || r.w_bar.value != gross.value)
      throw std::logic_error("full game disagrees with the count program");
  }
  return j;
}

Json perturb(const BaseGame& g, const Outcome& p, const Rational& eps) {
  auto h = separating_perturbation(g, p, eps);
  Json j;
  j["command"] = "perturb";
  j["epsilon"] = rational(eps);
  j["distance"] = rational(utility_distance(g, h));
  j["is_sbce_in_perturbed"] = is_sbce(h, p);
  j["game"] = io::game_to_json(h);
  return j;
}

Json canonical(const BaseGame& g, const Outcome& p, const std::vector<Rational>& lambda) {
  auto rep = build_canonical(g, p);
  Json j;
  j["command"] = "canonical";
  j["partition"] = io::partition_to_json(g, rep.partition);
  j["correlation_states"] = rep.zs.size();
  Json zeta = Json::object();
  for (std::size_t t = 0; t < g.num_states(); ++t) {
    Json row = Json::array();
    for (const auto& q : rep.zeta[t]) row.push_back(rational(q));
    zeta[g.states()[t]] = row;
  }
  j["zeta"] = zeta;
  Json signals = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) signals[g.players()[i]] = rep.num_signals[i];
  j["signals"] = signals;
  j["round_trip"] = induced_outcome(rep, g) == p;
  if (is_sbce(g, p)) {
    std::vector<Rational> lam = lambda;
    if (lam.empty()) lam.assign(g.num_players(), 1);
    auto cert = cost_certificate(g, p, lam);
    Json costs = Json::object();
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      const auto& c = cert.players[i];
      Json cj;
      cj["lambda"] = rational(c.lambda);
      cj["equilibrium_cost"] = rational(c.equilibrium_cost);
      cj["upper_bound"] = rational(c.upper_bound);
      cj["informed_value"] = rational(c.informed_value);
      costs[g.players()[i]] = cj;
    }
    j["costs"] = costs;
  }
  return j;
}

Json vce(const BaseGame& g, const Outcome& p, const VceOptions& options) {
  auto v = check_vce(g, p, options);
  Json j;
  j["command"] = "vce";
  j["verdict"] = v.kind == VceVerdict::Kind::IsVce    ? "is_vce"
                 : v.kind == VceVerdict::Kind::NotVce ? "not_vce"
                                                      : "undetermined";
  j["reason"] = v.reason;
  if (!options.certificate) j["options"] = options_json(options.density);
  if (v.certificate) j["certificate"] = io::certificate_to_json(g, *v.certificate);
  if (v.obedience_witness) j["obedience_violation"] = obedience_json(g, *v.obedience_witness);
  if (v.density_witness) {
    const auto& w = *v.density_witness;
    j["witness"] = witness_json(g, w.player, w.first, w.second, w.shared);
  }
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
    return;
  }
  if (j.is_array() && !j.empty() && std::any_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_structured();
      })) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", rows);
    return;
  }
  if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else if (j.is_array()) {
    std::string s;
    for (const auto& e : j) {
      if (!s.empty()) s += ' ';
      s += e.is_string() ? e.get<std::string>() : e.dump();
    }
    rows.emplace_back(path, s.empty() ? "-" : s);
  } else {
    rows.emplace_back(path, j.is_object() ? "-" : j.dump());
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace rir::report
