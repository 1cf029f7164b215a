#ifndef MIGRATE_MODEL_HPP
#define MIGRATE_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "migrate/error.hpp"
#include "migrate/rational.hpp"

namespace migrate {

using ObjectId = std::string;
using Amount = std::int64_t;

/// What the migration ledger measures: object profit (choosing problems) or
/// object weight (the weight-migration model).
enum class Metric { Profit, Weight };

inline std::string to_string(Metric metric) {
  return metric == Metric::Profit ? "profit" : "weight";
}

// Payloads ------------------------------------------------------------------

/// SubsetSum item: weight and profit coincide.
struct SizePayload {
  Amount size = 0;
  bool operator==(SizePayload const&) const = default;
};

struct WeightPayload {
  Amount weight = 0;
  bool operator==(WeightPayload const&) const = default;
};

struct VectorPayload {
  std::vector<Amount> weights;
  bool operator==(VectorPayload const&) const = default;
};

/// Graph node; edges go to the listed nodes while both endpoints are present.
struct NeighborPayload {
  std::vector<ObjectId> neighbors;
  bool operator==(NeighborPayload const&) const = default;
};

/// Unit disk centred at (x, y).
struct DiskPayload {
  Rational x;
  Rational y;
  bool operator==(DiskPayload const&) const = default;
};

using Payload =
    std::variant<std::monostate, SizePayload, WeightPayload, VectorPayload, NeighborPayload, DiskPayload>;

struct ChoosingObject {
  ObjectId id;
  Amount profit = 0;
  Payload payload;
  bool operator==(ChoosingObject const&) const = default;
};

/// Scalar weight of an object, if its payload carries one.
inline std::optional<Amount> weight_of(ChoosingObject const& object) {
  if (auto const* s = std::get_if<SizePayload>(&object.payload)) return s->size;
  if (auto const* w = std::get_if<WeightPayload>(&object.payload)) return w->weight;
  return std::nullopt;
}

inline Amount metric_value(ChoosingObject const& object, Metric metric) {
  if (metric == Metric::Profit) return object.profit;
  auto w = weight_of(object);
  if (!w) throw Error(ErrorCode::MissingWeight, "object '" + object.id + "' carries no weight");
  return *w;
}

// Events --------------------------------------------------------------------

struct Arrival {
  ChoosingObject object;
  bool operator==(Arrival const&) const = default;
};

struct Departure {
  ObjectId id;
  bool operator==(Departure const&) const = default;
};

struct Event {
  std::int64_t t = 0;
  std::variant<Arrival, Departure> kind;
  bool operator==(Event const&) const = default;

  bool is_arrival() const { return std::holds_alternative<Arrival>(kind); }
  ObjectId const& id() const {
    if (auto const* a = std::get_if<Arrival>(&kind)) return a->object.id;
    return std::get<Departure>(kind).id;
  }
};

inline Event make_arrival(std::int64_t t, ChoosingObject object) {
  return Event{t, Arrival{std::move(object)}};
}

inline Event make_departure(std::int64_t t, ObjectId id) {
  return Event{t, Departure{std::move(id)}};
}

// Instance ------------------------------------------------------------------

using ObjectTable = std::map<ObjectId, ChoosingObject>;
using SolutionSet = std::set<ObjectId>;

/// The objects present at `time`. Strict streams start from the empty
/// instance at time 0; lax streams start from a declared instance at time 1.
struct InstanceState {
  ObjectTable objects;
  std::int64_t time = 0;

  bool operator==(InstanceState const&) const = default;

  bool contains(ObjectId const& id) const { return objects.contains(id); }

  ChoosingObject const& at(ObjectId const& id) const {
    auto it = objects.find(id);
    if (it == objects.end()) throw Error(ErrorCode::UnknownId, "no object '" + id + "'");
    return it->second;
  }

  void apply(Event const& event) {
    if (event.t != time + 1) {
      throw Error(ErrorCode::TimeSkew,
                  "event at t=" + std::to_string(event.t) + " after t=" + std::to_string(time));
    }
    if (auto const* a = std::get_if<Arrival>(&event.kind)) {
      if (a->object.profit < 0) {
        throw Error(ErrorCode::PayloadMismatch, "negative profit for '" + a->object.id + "'");
      }
      if (!objects.emplace(a->object.id, a->object).second) {
        throw Error(ErrorCode::DuplicateArrival, "'" + a->object.id + "' is already present");
      }
    } else {
      auto const& id = std::get<Departure>(event.kind).id;
      if (objects.erase(id) == 0) {
        throw Error(ErrorCode::UnknownDeparture, "'" + id + "' is not present");
      }
    }
    time = event.t;
  }
};

inline InstanceState apply_event(InstanceState state, Event const& event) {
  state.apply(event);
  return state;
}

/// Potential of an event: the metric value of the object added or removed.
/// Departures are resolved against the instance before the event.
inline Amount event_potential(Event const& event, InstanceState const& before, Metric metric) {
  if (auto const* a = std::get_if<Arrival>(&event.kind)) return metric_value(a->object, metric);
  auto const& id = std::get<Departure>(event.kind).id;
  auto it = before.objects.find(id);
  if (it == before.objects.end()) throw Error(ErrorCode::UnknownDeparture, "'" + id + "' is not present");
  return metric_value(it->second, metric);
}

inline Amount profit_of(SolutionSet const& s, ObjectTable const& objects) {
  Amount total = 0;
  for (auto const& id : s) {
    auto it = objects.find(id);
    if (it == objects.end()) throw Error(ErrorCode::UnknownId, "no object '" + id + "'");
    total += it->second.profit;
  }
  return total;
}

/// Migration cost of switching from `from` to `to`: the metric value of the
/// symmetric difference.
inline Amount phi_cost(SolutionSet const& from, SolutionSet const& to, ObjectTable const& lookup, Metric metric) {
  Amount total = 0;
  auto charge = [&](ObjectId const& id) {
    auto it = lookup.find(id);
    if (it == lookup.end()) throw Error(ErrorCode::UnknownId, "no object '" + id + "'");
    total += metric_value(it->second, metric);
  };
  for (auto const& id : from)
    if (!to.contains(id)) charge(id);
  for (auto const& id : to)
    if (!from.contains(id)) charge(id);
  return total;
}

/// phi_cost without the charge for `exempt` entering the solution. Used for
/// an object's initial assignment, which is free.
inline Amount migration_cost(SolutionSet const& from, SolutionSet const& to, ObjectTable const& lookup,
                             Metric metric, std::optional<ObjectId> const& exempt) {
  Amount cost = phi_cost(from, to, lookup, metric);
  if (exempt && to.contains(*exempt) && !from.contains(*exempt)) {
    cost -= metric_value(lookup.at(*exempt), metric);
  }
  return cost;
}

// Ledger --------------------------------------------------------------------

struct PhaseRecord {
  std::int64_t start = 0;
  std::int64_t end = 0;
  Amount potential = 0;
  Amount cost = 0;
  bool operator==(PhaseRecord const&) const = default;
};

/// cost / potential; zero potential yields 0 with `undefined` set.
struct AmortizedFactor {
  Rational value;
  bool undefined = false;
  bool operator==(AmortizedFactor const&) const = default;
};

inline AmortizedFactor amortized(Amount cost, Amount potential) {
  if (potential == 0) return {Rational(0), true};
  return {Rational(cost, potential), false};
}

class MigrationLedger {
 public:
  explicit MigrationLedger(Metric metric = Metric::Profit, std::int64_t start = 0)
      : metric_(metric), open_start_(start) {}

  Metric metric() const { return metric_; }
  Amount potential_cum() const { return potential_cum_; }
  Amount cost_cum() const { return cost_cum_; }
  std::vector<PhaseRecord> const& phases() const { return phases_; }
  std::int64_t open_phase_start() const { return open_start_; }
  Amount open_phase_potential() const { return open_potential_; }

  AmortizedFactor gamma() const { return amortized(cost_cum_, potential_cum_); }

  void record(Amount potential, Amount cost) {
    potential_cum_ += potential;
    cost_cum_ += cost;
    open_potential_ += potential;
    open_cost_ += cost;
  }

  /// Ends the running phase at a repacking time and opens the next one there.
  void close_phase(std::int64_t end) {
    phases_.push_back(PhaseRecord{open_start_, end, open_potential_, open_cost_});
    open_start_ = end;
    open_potential_ = 0;
    open_cost_ = 0;
  }

  bool operator==(MigrationLedger const&) const = default;

 private:
  Metric metric_;
  Amount potential_cum_ = 0;
  Amount cost_cum_ = 0;
  std::vector<PhaseRecord> phases_;
  std::int64_t open_start_ = 0;
  Amount open_potential_ = 0;
  Amount open_cost_ = 0;
};

inline MigrationLedger ledger_record(MigrationLedger ledger, Amount potential, Amount cost) {
  ledger.record(potential, cost);
  return ledger;
}

}  // namespace migrate

#endif  // MIGRATE_MODEL_HPP
