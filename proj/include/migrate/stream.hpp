#ifndef MIGRATE_STREAM_HPP
#define MIGRATE_STREAM_HPP

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "migrate/error.hpp"
#include "migrate/model.hpp"
#include "migrate/problems.hpp"
#include "migrate/rational.hpp"
#include "migrate/variants.hpp"

namespace migrate {

/// A choosing-problem event stream. Strict streams start empty at t=0 with
/// events from t=1; lax streams present `initial` at t=1 and continue at t=2.
struct ChoosingStream {
  ProblemKind problem;
  Metric metric = Metric::Profit;
  bool lax = false;
  std::vector<ChoosingObject> initial;
  std::vector<Event> events;

  bool operator==(ChoosingStream const&) const = default;

  std::int64_t first_event_time() const { return lax ? 2 : 1; }

  InstanceState initial_state() const {
    InstanceState state;
    state.time = lax ? 1 : 0;
    for (auto const& obj : initial) state.objects.emplace(obj.id, obj);
    return state;
  }

  std::int64_t next_time() const { return events.empty() ? first_event_time() : events.back().t + 1; }

  void add(ChoosingObject object) { events.push_back(make_arrival(next_time(), std::move(object))); }
  void remove(ObjectId id) { events.push_back(make_departure(next_time(), std::move(id))); }
};

struct EdgeEvent {
  std::int64_t t = 0;
  ObjectId u;
  ObjectId v;
  bool operator==(EdgeEvent const&) const = default;
};

struct EdgeStream {
  std::map<ObjectId, Amount> vertices;
  std::vector<EdgeEvent> events;

  bool operator==(EdgeStream const&) const = default;

  EdgeArrivalInstance initial_state() const { return {vertices, {}, 0}; }
  void add(ObjectId u, ObjectId v) {
    events.push_back({static_cast<std::int64_t>(events.size()) + 1, std::move(u), std::move(v)});
  }
};

using Stream = std::variant<ChoosingStream, EdgeStream>;

/// Replays the stream, checking payloads against the problem and that a
/// re-arriving object keeps its profit and attributes (graph nodes restate
/// their neighbour list, which may differ).
inline void validate_stream(ChoosingStream const& stream) {
  validate_kind(stream.problem);
  InstanceState state;
  std::map<ObjectId, ChoosingObject> seen;
  auto admit = [&](ChoosingObject const& obj) {
    validate_object(stream.problem, obj, state);
    auto [it, fresh] = seen.emplace(obj.id, obj);
    if (fresh) return;
    bool graph = std::holds_alternative<NeighborPayload>(obj.payload);
    if (it->second.profit != obj.profit || (!graph && it->second.payload != obj.payload)) {
      throw Error(ErrorCode::PayloadMismatch, "'" + obj.id + "' re-arrived with different attributes");
    }
  };
  for (auto const& obj : stream.initial) {
    if (state.contains(obj.id)) throw Error(ErrorCode::DuplicateArrival, "'" + obj.id + "' listed twice");
    admit(obj);
    state.objects.emplace(obj.id, obj);
  }
  if (!stream.lax && !stream.initial.empty()) {
    throw Error(ErrorCode::ParseError, "strict streams have no initial instance");
  }
  state.time = stream.lax ? 1 : 0;
  for (auto const& event : stream.events) {
    if (auto const* a = std::get_if<Arrival>(&event.kind)) admit(a->object);
    state.apply(event);
  }
}

// JSON encoding ------------------------------------------------------------------

inline nlohmann::ordered_json payload_to_json(Payload const& payload) {
  using J = nlohmann::ordered_json;
  return std::visit(
      [](auto const& p) -> J {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, std::monostate>) return J::object();
        if constexpr (std::is_same_v<P, SizePayload>) return {{"size", p.size}};
        if constexpr (std::is_same_v<P, WeightPayload>) return {{"weight", p.weight}};
        if constexpr (std::is_same_v<P, VectorPayload>) return {{"weights", p.weights}};
        if constexpr (std::is_same_v<P, NeighborPayload>) return {{"neighbors", p.neighbors}};
        if constexpr (std::is_same_v<P, DiskPayload>) return {{"x", to_string(p.x)}, {"y", to_string(p.y)}};
      },
      payload);
}

template <typename Json>
Payload payload_from_json(Json const& j) {
  if (j.is_null() || j.empty()) return std::monostate{};
  if (j.contains("size")) return SizePayload{j.at("size").template get<Amount>()};
  if (j.contains("weights")) return VectorPayload{j.at("weights").template get<std::vector<Amount>>()};
  if (j.contains("weight")) return WeightPayload{j.at("weight").template get<Amount>()};
  if (j.contains("neighbors")) return NeighborPayload{j.at("neighbors").template get<std::vector<ObjectId>>()};
  if (j.contains("x")) {
    auto coord = [&](char const* key) {
      auto const& v = j.at(key);
      return v.is_string() ? parse_rational(v.template get<std::string>()) : Rational(v.template get<Amount>());
    };
    return DiskPayload{coord("x"), coord("y")};
  }
  throw Error(ErrorCode::ParseError, "unrecognised payload " + j.dump());
}

inline nlohmann::ordered_json object_to_json(ChoosingObject const& obj) {
  nlohmann::ordered_json j;
  j["id"] = obj.id;
  j["profit"] = obj.profit;
  j["payload"] = payload_to_json(obj.payload);
  return j;
}

template <typename Json>
ChoosingObject object_from_json(Json const& j) {
  ChoosingObject obj;
  obj.id = j.at("id").template get<std::string>();
  obj.profit = j.at("profit").template get<Amount>();
  obj.payload = j.contains("payload") ? payload_from_json(j.at("payload")) : Payload{};
  return obj;
}

inline nlohmann::ordered_json event_to_json(Event const& event) {
  nlohmann::ordered_json j;
  j["t"] = event.t;
  if (auto const* a = std::get_if<Arrival>(&event.kind)) {
    j["op"] = "add";
    j["id"] = a->object.id;
    j["profit"] = a->object.profit;
    j["payload"] = payload_to_json(a->object.payload);
  } else {
    j["op"] = "remove";
    j["id"] = event.id();
  }
  return j;
}

inline Metric metric_from_string(std::string const& name) {
  if (name == "profit") return Metric::Profit;
  if (name == "weight") return Metric::Weight;
  throw Error(ErrorCode::ParseError, "unknown metric '" + name + "'");
}

inline void write_stream(std::ostream& out, Stream const& stream) {
  if (auto const* cs = std::get_if<ChoosingStream>(&stream)) {
    nlohmann::ordered_json header;
    header["stream"] = "choosing";
    header["problem"] = kind_to_json(cs->problem);
    header["metric"] = to_string(cs->metric);
    header["lax"] = cs->lax;
    header["initial"] = nlohmann::ordered_json::array();
    for (auto const& obj : cs->initial) header["initial"].push_back(object_to_json(obj));
    out << header.dump() << '\n';
    for (auto const& e : cs->events) out << event_to_json(e).dump() << '\n';
    return;
  }
  auto const& es = std::get<EdgeStream>(stream);
  nlohmann::ordered_json header;
  header["stream"] = "edges";
  header["problem"] = {{"kind", "mis"}, {"weighted", true}};
  header["vertices"] = nlohmann::ordered_json::array();
  for (auto const& [id, w] : es.vertices) header["vertices"].push_back({{"id", id}, {"weight", w}});
  out << header.dump() << '\n';
  for (auto const& e : es.events) {
    nlohmann::ordered_json j;
    j["t"] = e.t;
    j["op"] = "edge";
    j["u"] = e.u;
    j["v"] = e.v;
    out << j.dump() << '\n';
  }
}

inline std::string stream_to_string(Stream const& stream) {
  std::ostringstream out;
  write_stream(out, stream);
  return out.str();
}

inline Stream read_stream(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> std::optional<nlohmann::json> {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        return nlohmann::json::parse(line);
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    return std::nullopt;
  };
  auto header = next();
  if (!header) throw Error(ErrorCode::ParseError, "empty stream");
  try {
    auto kind = header->value("stream", std::string("choosing"));
    if (kind == "edges") {
      EdgeStream es;
      for (auto const& v : header->at("vertices")) {
        es.vertices[v.at("id").get<std::string>()] = v.at("weight").get<Amount>();
      }
      while (auto j = next()) {
        if (j->at("op").get<std::string>() != "edge") {
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": edge streams carry edge events");
        }
        es.events.push_back({j->at("t").get<std::int64_t>(), j->at("u").get<std::string>(),
                             j->at("v").get<std::string>()});
      }
      return es;
    }
    if (kind != "choosing") throw Error(ErrorCode::ParseError, "unknown stream type '" + kind + "'");
    ChoosingStream cs;
    cs.problem = kind_from_json(header->at("problem"));
    cs.metric = metric_from_string(header->value("metric", std::string("profit")));
    if (header->contains("initial")) {
      for (auto const& obj : header->at("initial")) cs.initial.push_back(object_from_json(obj));
    }
    cs.lax = header->value("lax", !cs.initial.empty());
    while (auto j = next()) {
      auto op = j->at("op").get<std::string>();
      auto t = j->at("t").get<std::int64_t>();
      if (op == "add") {
        cs.events.push_back(make_arrival(t, object_from_json(*j)));
      } else if (op == "remove") {
        cs.events.push_back(make_departure(t, j->at("id").get<std::string>()));
      } else {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown op '" + op + "'");
      }
    }
    return cs;
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

inline Stream read_stream_string(std::string const& text) {
  std::istringstream in(text);
  return read_stream(in);
}

inline Stream load_stream(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open '" + path + "'");
  return read_stream(in);
}

inline void save_stream(std::string const& path, Stream const& stream) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IOError, "cannot write '" + path + "'");
  write_stream(out, stream);
  if (!out) throw Error(ErrorCode::IOError, "write to '" + path + "' failed");
}

}  // namespace migrate

#endif  // MIGRATE_STREAM_HPP
