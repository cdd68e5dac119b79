#include <algorithm>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "io.hpp"
#include "report.hpp"

namespace {

std::vector<rir::Rational> parse_list(const std::vector<std::string>& items) {
  std::vector<rir::Rational> out;
  for (const auto& s : items) out.push_back(rir::parse_rational(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact robust predictions of rational inattention in finite games", "ri-robust"};
  app.require_subcommand(1);
  bool table = false;
  app.add_flag("--table", table, "Render the report as an aligned table instead of JSON");

  std::string game_path, outcome_path, certificate_path;
  bool exact = false;
  std::uint64_t seed = 0;
  std::size_t retries = 16;
  std::string epsilon = "1/100", value_mode = "ri";
  std::vector<std::string> lambda;

  auto add_game = [&](CLI::App* c) { c->add_option("game", game_path, "Game JSON file")->required(); };
  auto add_outcome = [&](CLI::App* c) {
    c->add_option("outcome", outcome_path, "Outcome JSON file")->required();
  };
  auto add_search = [&](CLI::App* c) {
    c->add_flag("--exact", exact, "Certify minimal mixing against all BCE vertices");
    c->add_option("--seed", seed, "Seed for randomized search");
    c->add_option("--retries", retries, "Randomized search attempts");
  };

  auto* analyze = app.add_subcommand("analyze", "Welfare, jeopardization and density summary");
  add_game(analyze);
  add_search(analyze);
  auto* welfare = app.add_subcommand("welfare", "Worst-case welfare with exogenous or acquired information");
  add_game(welfare);
  auto* density = app.add_subcommand("density", "Classify the separated BCE set as dense or nowhere dense");
  add_game(density);
  add_search(density);
  auto* check = app.add_subcommand("check-outcome", "Obedience, separation and value intervals of an outcome");
  add_game(check);
  add_outcome(check);
  check->add_option("--value-mode", value_mode, "ri or arbitrary")
      ->check(CLI::IsMember({"ri", "arbitrary"}));

  rir::RegimeParams params;
  std::string k = "1/2", x = "1";
  std::vector<long> states;
  std::vector<std::string> prior;
  bool full = false;
  auto* regime = app.add_subcommand("regime", "Regime change game: closed forms against the count program");
  regime->add_option("--n", params.n, "Number of investors")->required();
  regime->add_option("--k", k, "Cost of attacking, in (0,1)");
  regime->add_option("--x", x, "Loss of non-attackers on success");
  regime->add_option("--states", states, "Thresholds, comma separated")->delimiter(',')->required();
  regime->add_option("--prior", prior, "Prior per threshold, comma separated")->delimiter(',');
  regime->add_flag("--full", full, "Also solve the full game (small n only)");

  auto* perturb = app.add_subcommand("perturb", "Nearby game in which the outcome is a separated BCE");
  add_game(perturb);
  add_outcome(perturb);
  perturb->add_option("--epsilon", epsilon, "Sup-norm budget for the utility change");

  auto* canonical = app.add_subcommand("canonical", "Canonical information structure and cost bounds");
  add_game(canonical);
  add_outcome(canonical);
  canonical->add_option("--lambda", lambda, "Cost weight per player, comma separated")->delimiter(',');

  auto* vce = app.add_subcommand("vce", "Vanishing cost equilibrium check");
  add_game(vce);
  add_outcome(vce);
  add_search(vce);
  vce->add_option("--epsilon", epsilon, "Distance for the nearby separated BCE");
  vce->add_option("--certificate", certificate_path, "Certificate JSON to verify");

  CLI11_PARSE(app, argc, argv);

  using namespace rir;
  try {
    SearchOptions search;
    search.mode = exact ? DensityMode::Exact : DensityMode::Randomized;
    search.seed = seed;
    search.retries = retries;

    io::Json out;
    auto game = [&] { return io::game_from_json(io::load_json(game_path)); };
    if (*analyze) {
      out = report::analyze(game(), search);
    } else if (*welfare) {
      out = report::welfare(game());
    } else if (*density) {
      out = report::density(game(), search);
    } else if (*check) {
      auto g = game();
      auto p = io::outcome_from_json(g, io::load_json(outcome_path));
      out = report::check_outcome(g, p, value_mode == "ri" ? ValueMode::RationalInattention
                                                           : ValueMode::ArbitraryTechnology);
    } else if (*regime) {
      params.k = parse_rational(k);
      params.x = parse_rational(x);
      params.states = states;
      if (prior.empty()) {
        params.prior.assign(states.size(), Rational(1, static_cast<unsigned long>(std::max<std::size_t>(states.size(), 1))));
      } else {
        params.prior = parse_list(prior);
      }
      out = report::regime(params, full);
    } else if (*perturb) {
      auto g = game();
      auto p = io::outcome_from_json(g, io::load_json(outcome_path));
      out = report::perturb(g, p, parse_rational(epsilon));
    } else if (*canonical) {
      auto g = game();
      auto p = io::outcome_from_json(g, io::load_json(outcome_path));
      out = report::canonical(g, p, parse_list(lambda));
    } else if (*vce) {
      auto g = game();
      auto p = io::outcome_from_json(g, io::load_json(outcome_path));
      VceOptions opts;
      opts.epsilon = parse_rational(epsilon);
      opts.density = search;
      if (!certificate_path.empty())
        opts.certificate = io::certificate_from_json(g, io::load_json(certificate_path));
      out = report::vce(g, p, opts);
    }
    std::cout << (table ? report::render_table(out) : out.dump(2) + "\n");
    return 0;
  } catch (const Error& e) {
    io::Json err;
    err["error"] = error_code_name(e.code());
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    io::Json err;
    err["error"] = "InternalInvariant";
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
