#include "io.hpp"

#include <fstream>
#include <sstream>

namespace rir::io {

namespace {

[[noreturn]] void schema(const std::string& why) { throw Error(ErrorCode::SchemaViolation, why); }

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) schema(where + ": missing \"" + name + "\"");
  return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) schema(where + ": expected a string");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Parses "a,b|s1" into (profile, state).
std::pair<std::size_t, std::size_t> parse_cell(const BaseGame& g, const std::string& key) {
  auto bar = key.rfind('|');
  if (bar == std::string::npos) schema("cell key '" + key + "' lacks '|state'");
  auto names = split(key.substr(0, bar), ',');
  if (names.size() != g.num_players())
    schema("cell key '" + key + "' needs one action per player");
  std::vector<std::size_t> a(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) a[i] = g.find_action(i, names[i]);
  return {g.encode(a), g.find_state(key.substr(bar + 1))};
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    schema("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json rational(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  schema(where + ": expected a rational as \"num/den\" or an integer");
}

std::string cell_key(const BaseGame& g, std::size_t profile, std::size_t theta) {
  std::string key;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    if (i) key += ',';
    key += g.actions()[i][g.action_of(profile, i)];
  }
  return key + '|' + g.states()[theta];
}

BaseGame game_from_json(const Json& j) {
  if (!j.is_object()) schema("game: expected an object");
  auto players = string_list(field(j, "players", "game"), "players");
  auto states = string_list(field(j, "states", "game"), "states");
  const auto& prior_j = field(j, "prior", "game");
  if (!prior_j.is_object()) schema("prior: expected an object keyed by state");
  std::vector<Rational> prior;
  for (const auto& s : states) {
    if (!prior_j.contains(s)) schema("prior: missing state '" + s + "'");
    prior.push_back(rational_from_json(prior_j.at(s), "prior." + s));
  }
  if (prior_j.size() != states.size()) schema("prior: entries for unknown states");
  const auto& actions_j = field(j, "actions", "game");
  std::vector<std::vector<std::string>> actions;
  for (const auto& p : players) actions.push_back(string_list(field(actions_j, p.c_str(), "actions"), "actions." + p));

  BaseGame g(players, states, prior, actions);
  const auto& util_j = field(j, "utilities", "game");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const auto& table = field(util_j, players[i].c_str(), "utilities");
    if (!table.is_object()) schema("utilities." + players[i] + ": expected an object");
    std::vector<char> seen(g.num_cells(), 0);
    for (const auto& [key, value] : table.items()) {
      auto [a, t] = parse_cell(g, key);
      if (seen[g.cell(a, t)]++) schema("utilities." + players[i] + ": duplicate key '" + key + "'");
      g.set_u(i, a, t, rational_from_json(value, "utilities." + players[i] + "." + key));
    }
    for (std::size_t c = 0; c < g.num_cells(); ++c)
      if (!seen[c])
        throw Error(ErrorCode::MissingUtilityEntry,
                    "utilities." + players[i] + ": missing '" +
                        cell_key(g, c / g.num_states(), c % g.num_states()) + "'");
  }
  validate_game(g);
  return g;
}

Json game_to_json(const BaseGame& g) {
  Json j;
  j["players"] = g.players();
  j["states"] = g.states();
  Json prior = Json::object();
  for (std::size_t t = 0; t < g.num_states(); ++t) prior[g.states()[t]] = rational(g.prior()[t]);
  j["prior"] = prior;
  Json actions = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) actions[g.players()[i]] = g.actions()[i];
  j["actions"] = actions;
  Json util = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    Json table = Json::object();
    for (std::size_t a = 0; a < g.num_profiles(); ++a)
      for (std::size_t t = 0; t < g.num_states(); ++t) table[cell_key(g, a, t)] = rational(g.u(i, a, t));
    util[g.players()[i]] = table;
  }
  j["utilities"] = util;
  return j;
}

Outcome outcome_from_json(const BaseGame& g, const Json& j) {
  const Json& cells = j.is_object() && j.contains("outcome") ? j.at("outcome") : j;
  if (!cells.is_object()) schema("outcome: expected an object keyed by cell");
  Outcome p = zero_outcome(g);
  std::vector<char> seen(g.num_cells(), 0);
  for (const auto& [key, value] : cells.items()) {
    auto [a, t] = parse_cell(g, key);
    if (seen[g.cell(a, t)]++) schema("outcome: duplicate key '" + key + "'");
    p.p[g.cell(a, t)] = rational_from_json(value, "outcome." + key);
  }
  validate_outcome(g, p);
  return p;
}

Json outcome_to_json(const BaseGame& g, const Outcome& p) {
  Json j = Json::object();
  for (std::size_t a = 0; a < g.num_profiles(); ++a)
    for (std::size_t t = 0; t < g.num_states(); ++t) {
      const auto& q = p.p[g.cell(a, t)];
      if (sgn(q) != 0) j[cell_key(g, a, t)] = rational(q);
    }
  return j;
}

Json partition_to_json(const BaseGame& g, const PartitionProfile& part) {
  Json j = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    Json cells = Json::array();
    for (const auto& cell : part.cells[i]) {
      Json names = Json::array();
      for (auto a : cell) names.push_back(g.actions()[i][a]);
      cells.push_back(names);
    }
    j[g.players()[i]] = cells;
  }
  return j;
}

PartitionProfile partition_from_json(const BaseGame& g, const Json& j) {
  if (!j.is_object()) schema("partition: expected an object keyed by player");
  PartitionProfile part;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const auto& cells = field(j, g.players()[i].c_str(), "partition");
    if (!cells.is_array()) schema("partition." + g.players()[i] + ": expected an array of cells");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& cell : cells) {
      std::vector<std::size_t> acts;
      for (const auto& name : string_list(cell, "partition." + g.players()[i]))
        acts.push_back(g.find_action(i, name));
      out.push_back(std::move(acts));
    }
    part.cells.push_back(std::move(out));
    part.off_support.push_back(std::nullopt);
  }
  return part;
}

Json certificate_to_json(const BaseGame& g, const VceCertificate& c) {
  Json j;
  j["partition"] = partition_to_json(g, c.partition);
  Json comps = Json::array();
  for (std::size_t l = 0; l < c.components.size(); ++l) {
    Json e;
    e["weight"] = rational(c.weights[l]);
    e["outcome"] = outcome_to_json(g, c.components[l]);
    comps.push_back(e);
  }
  j["components"] = comps;
  j["evidence"] = outcome_to_json(g, c.evidence);
  j["epsilon"] = rational(c.epsilon);
  return j;
}

VceCertificate certificate_from_json(const BaseGame& g, const Json& j) {
  VceCertificate c;
  c.partition = partition_from_json(g, field(j, "partition", "certificate"));
  const auto& comps = field(j, "components", "certificate");
  if (!comps.is_array()) schema("certificate.components: expected an array");
  for (const auto& e : comps) {
    c.weights.push_back(rational_from_json(field(e, "weight", "component"), "component.weight"));
    c.components.push_back(outcome_from_json(g, field(e, "outcome", "component")));
  }
  c.evidence = outcome_from_json(g, field(j, "evidence", "certificate"));
  c.epsilon = rational_from_json(field(j, "epsilon", "certificate"), "certificate.epsilon");
  return c;
}

}  // namespace rir::io
