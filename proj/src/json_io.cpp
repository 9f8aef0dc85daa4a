#include "chordtim/json_io.hpp"

#include "chordtim/errors.hpp"

namespace chordtim {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_value(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer()) throw ValidationError(std::string(what) + " must be nonnegative");
  throw ParseError(std::string(what) + " must be an integer");
}

std::pair<std::size_t, std::size_t> index_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be a [source, destination] pair");
  return {index_value(j[0], "source index"), index_value(j[1], "destination index")};
}

Rational rational_value(const Json& j) {
  if (!j.is_string()) throw ParseError("rationals must be strings of the form \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(index_value(v, what));
  return out;
}

Json message_list(const MessageSet& ms, const Clique& members) {
  Json out = Json::array();
  for (std::size_t k : members) out.push_back(to_json(ms[k]));
  return out;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

TopologyGraph topology_from_json(const Json& j) {
  const std::size_t m = index_value(field(j, "sources"), "\"sources\"");
  const std::size_t n = index_value(field(j, "destinations"), "\"destinations\"");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<TopologyGraph::Edge> list;
  list.reserve(edges.size());
  for (const auto& e : edges) list.push_back(index_pair(e, "edge"));
  return TopologyGraph(m, n, list);
}

TopologyGraph parse_topology(std::string_view text) { return topology_from_json(parse_json_text(text)); }

MessageSet message_set_from_json(const Json& j, const TopologyGraph& g) {
  if (!j.is_array()) throw ParseError("message set must be an array of [source, destination] pairs");
  std::vector<Message> out;
  for (const auto& e : j) {
    const auto [s, d] = index_pair(e, "message");
    out.push_back({s, d});
  }
  MessageSet ms(std::move(out));
  validate_messages(g, ms);
  return ms;
}

RateTuple rates_from_json(const Json& j, const MessageSet& ms) {
  if (!j.is_array()) throw ParseError("rates must be an array");
  RateTuple r;
  const bool positional = j.empty() || j.front().is_string();
  if (positional) {
    if (j.size() != ms.size()) {
      throw ValidationError("expected " + std::to_string(ms.size()) + " rates, got " + std::to_string(j.size()));
    }
    for (std::size_t k = 0; k < ms.size(); ++k) r.emplace(ms[k], rational_value(j[k]));
    return r;
  }
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) throw ParseError("rate entries must be [[source, destination], \"p/q\"]");
    const auto [s, d] = index_pair(entry[0], "message");
    const Message m{s, d};
    if (!ms.contains(m)) throw ValidationError("rate given for " + to_string(m) + ", which is not in the message set");
    if (!r.emplace(m, rational_value(entry[1])).second) throw ValidationError("duplicate rate for " + to_string(m));
  }
  return r;
}

LineLayout layout_from_json(const Json& j) {
  return {index_list(field(j, "source_order"), "source_order"),
          index_list(field(j, "destination_order"), "destination_order")};
}

Schedule schedule_from_json(const Json& j) {
  Schedule s;
  const Json& slots = field(j, "slots");
  if (!slots.is_array()) throw ParseError("\"slots\" must be an array");
  for (const auto& slot : slots) {
    ScheduleSlot out;
    const Json& msgs = field(slot, "messages");
    if (!msgs.is_array()) throw ParseError("slot \"messages\" must be an array");
    for (const auto& e : msgs) {
      const auto [src, dst] = index_pair(e, "message");
      out.messages.push_back({src, dst});
    }
    out.weight = rational_value(field(slot, "weight"));
    s.slots.push_back(std::move(out));
  }
  s.total_weight = rational_value(field(j, "total_weight"));
  return s;
}

Json to_json(const TopologyGraph& g) {
  Json edges = Json::array();
  for (const auto& [s, d] : g.edges()) edges.push_back(Json::array({s, d}));
  Json out;
  out["sources"] = g.num_sources();
  out["destinations"] = g.num_destinations();
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const Message& m) { return Json::array({m.source, m.destination}); }

Json to_json(const MessageSet& ms) {
  Json out = Json::array();
  for (const Message& m : ms) out.push_back(to_json(m));
  return out;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const ChordlessCycleWitness& w) {
  Json out;
  out["sources"] = w.sources;
  out["destinations"] = w.destinations;
  return out;
}

Json to_json(const LineLayout& layout) {
  Json out;
  out["source_order"] = layout.source_order;
  out["destination_order"] = layout.destination_order;
  return out;
}

Json to_json(const RegionPolytope& rp) {
  Json ineqs = Json::array();
  for (const auto& ineq : rp.inequalities) {
    Json row;
    row["clique"] = message_list(rp.messages, ineq.members);
    row["bound"] = to_json(ineq.bound);
    ineqs.push_back(std::move(row));
  }
  Json out;
  out["messages"] = to_json(rp.messages);
  out["inequalities"] = std::move(ineqs);
  out["chordal"] = rp.chordal;
  return out;
}

Json to_json(const std::vector<PolytopeVertex>& vertices) {
  Json out = Json::array();
  for (const auto& v : vertices) {
    Json coords = Json::array();
    for (const auto& x : v.coordinates) coords.push_back(to_json(x));
    out.push_back(std::move(coords));
  }
  return out;
}

Json to_json(const Schedule& s) {
  Json slots = Json::array();
  for (const auto& slot : s.slots) {
    Json msgs = Json::array();
    for (const Message& m : slot.messages) msgs.push_back(to_json(m));
    Json row;
    row["messages"] = std::move(msgs);
    row["weight"] = to_json(slot.weight);
    slots.push_back(std::move(row));
  }
  Json out;
  out["slots"] = std::move(slots);
  out["total_weight"] = to_json(s.total_weight);
  return out;
}

Json rates_to_json(const RateTuple& r, const MessageSet& ms) {
  Json out = Json::array();
  for (const Message& m : ms) {
    const auto it = r.find(m);
    out.push_back(to_json(it == r.end() ? Rational(0) : it->second));
  }
  return out;
}

Json to_json(const SuboptimalityCertificate& c) {
  Json out;
  out["cycle"] = to_json(c.cycle);
  out["n"] = c.n();
  out["parity"] = c.n() % 2 == 1 ? "odd" : "even";
  out["messages"] = to_json(c.messages);
  out["claimed_tuple"] = rates_to_json(c.claimed_tuple, c.messages);
  out["claimed_source"] = to_string(c.claimed_source);
  out["claimed_sum"] = to_json(c.claimed_sum);
  out["orthogonal_max_sum"] = to_json(c.orthogonal_max_sum);
  out["gap"] = to_json(c.gap);
  if (c.coherence_claimed_sum) out["coherence_claimed_sum"] = to_json(*c.coherence_claimed_sum);
  out["claimed_in_clique_region"] = c.claimed_in_clique_region;
  return out;
}

Json to_json(const CliqueAcyclicityReport& r) {
  Json out;
  out["status"] = r.passed ? "pass" : "fail";
  out["checked_cliques"] = r.checked_cliques;
  if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
  return out;
}

Json to_json(const ConvexityReport& r) {
  Json out;
  out["status"] = to_string(r.status);
  out["source_convex"] = r.source_convex;
  out["destination_convex"] = r.destination_convex;
  out["chordal"] = r.chordal;
  return out;
}

std::string serialize_topology(const TopologyGraph& g) { return to_json(g).dump(); }

}  // namespace chordtim
