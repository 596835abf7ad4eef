#include "darp/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace darp {

double euclidean(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

const char* to_string(Direction d) {
  switch (d) {
    case Direction::outbound: return "outbound";
    case Direction::inbound: return "inbound";
    case Direction::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "outbound") return Direction::outbound;
  if (text == "inbound") return Direction::inbound;
  if (text == "unclassified") return Direction::unclassified;
  return std::nullopt;
}

const char* to_string(InstanceErrorKind kind) {
  switch (kind) {
    case InstanceErrorKind::incompatible_request: return "IncompatibleRequest";
    case InstanceErrorKind::malformed_matrix: return "MalformedMatrix";
    case InstanceErrorKind::window_inverted: return "WindowInverted";
    case InstanceErrorKind::ride_time_unattainable: return "RideTimeUnattainable";
    case InstanceErrorKind::invalid_demand: return "InvalidDemand";
    case InstanceErrorKind::invalid_vehicle: return "InvalidVehicle";
    case InstanceErrorKind::invalid_seat_types: return "InvalidSeatTypes";
  }
  return "InstanceError";
}

TimeWindow Instance::window(int node) const {
  if (is_pickup(node)) return requests[node].pickup_window;
  if (is_delivery(node)) return requests[node - n()].delivery_window;
  // Depot windows live on the vehicles; report the widest one.
  TimeWindow w{0.0, horizon_end()};
  bool first = true;
  for (const auto& v : vehicles) {
    if (depot_node(v.depot) != node) continue;
    if (first) {
      w = v.depot_window;
      first = false;
    } else {
      w.early = std::min(w.early, v.depot_window.early);
      w.late = std::max(w.late, v.depot_window.late);
    }
  }
  return w;
}

double Instance::service_time(int node) const {
  if (is_pickup(node)) return requests[node].pickup_service;
  if (is_delivery(node)) return requests[node - n()].delivery_service;
  return 0.0;
}

int Instance::load_delta(int node, int seat) const {
  if (is_pickup(node)) return requests[node].demand[seat];
  if (is_delivery(node)) return -requests[node - n()].demand[seat];
  return 0;
}

bool Instance::compatible(int request, int vehicle) const {
  const auto& types = requests[request].compatible_types;
  return std::find(types.begin(), types.end(), vehicles[vehicle].type) != types.end();
}

double Instance::horizon_end() const {
  double end = 0.0;
  for (const auto& v : vehicles) end = std::max(end, v.depot_window.late);
  return end;
}

namespace {

[[noreturn]] void fail(InstanceErrorKind kind, const std::string& msg) {
  throw InstanceError(kind, std::string(to_string(kind)) + ": " + msg);
}

void check_matrix(const Matrix& mat, int side, const char* what) {
  if (static_cast<int>(mat.side()) != side) {
    std::ostringstream os;
    os << what << " matrix has side " << mat.side() << ", expected " << side;
    fail(InstanceErrorKind::malformed_matrix, os.str());
  }
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double v = mat(i, j);
      if (!std::isfinite(v) || v < 0.0 || (i == j && v != 0.0)) {
        std::ostringstream os;
        os << what << "(" << i << "," << j << ") = " << v;
        fail(InstanceErrorKind::malformed_matrix, os.str());
      }
    }
  }
}

}  // namespace

Instance validate_instance(Instance raw) {
  const int seats = raw.seat_count();
  std::set<std::string> names;
  for (int r = 0; r < seats; ++r) {
    if (raw.seat_types[r].id != r || !names.insert(raw.seat_types[r].name).second) {
      fail(InstanceErrorKind::invalid_seat_types, "seat type ids must be dense and names unique");
    }
  }
  if (raw.depot_count < 1) fail(InstanceErrorKind::invalid_vehicle, "at least one depot is required");

  const int side = raw.node_count();
  if (!raw.coords.empty() && static_cast<int>(raw.coords.size()) != side) {
    fail(InstanceErrorKind::malformed_matrix, "coordinate count does not match node count");
  }
  check_matrix(raw.travel_time, side, "travel_time");
  check_matrix(raw.distance, side, "distance");

  for (int i = 0; i < raw.n(); ++i) {
    const auto& req = raw.requests[i];
    const std::string who = "request " + std::to_string(i);
    if (req.id != i) fail(InstanceErrorKind::invalid_demand, who + " has id " + std::to_string(req.id));
    if (req.pickup_window.early > req.pickup_window.late ||
        req.delivery_window.early > req.delivery_window.late) {
      fail(InstanceErrorKind::window_inverted, who + " has e > l");
    }
    if (req.pickup_service < 0.0 || req.delivery_service < 0.0) {
      fail(InstanceErrorKind::invalid_demand, who + " has negative service time");
    }
    if (static_cast<int>(req.demand.size()) != seats ||
        std::any_of(req.demand.begin(), req.demand.end(), [](int q) { return q < 0; }) ||
        std::none_of(req.demand.begin(), req.demand.end(), [](int q) { return q > 0; })) {
      fail(InstanceErrorKind::invalid_demand, who + " needs one nonnegative entry per seat type, one positive");
    }
    const double direct = raw.t(raw.pickup_node(i), raw.delivery_node(i)) + req.delivery_service;
    if (req.max_ride_time + kTolerance < direct) {
      std::ostringstream os;
      os << who << " max ride time " << req.max_ride_time << " < direct ride " << direct;
      fail(InstanceErrorKind::ride_time_unattainable, os.str());
    }
  }

  for (int v = 0; v < raw.m(); ++v) {
    const auto& veh = raw.vehicles[v];
    const std::string who = "vehicle " + std::to_string(v);
    if (veh.id != v || veh.depot < 0 || veh.depot >= raw.depot_count) {
      fail(InstanceErrorKind::invalid_vehicle, who + " has a bad id or depot index");
    }
    if (static_cast<int>(veh.capacity.size()) != seats ||
        std::any_of(veh.capacity.begin(), veh.capacity.end(), [](int c) { return c < 0; })) {
      fail(InstanceErrorKind::invalid_vehicle, who + " needs one nonnegative capacity per seat type");
    }
    if (veh.depot_window.early > veh.depot_window.late) {
      fail(InstanceErrorKind::window_inverted, who + " depot window has e > l");
    }
    if (veh.max_route_duration < 0.0) fail(InstanceErrorKind::invalid_vehicle, who + " has negative RD");
  }

  for (int i = 0; i < raw.n(); ++i) {
    bool served = false;
    for (int v = 0; v < raw.m() && !served; ++v) served = raw.compatible(i, v);
    if (!served) {
      fail(InstanceErrorKind::incompatible_request,
           "no vehicle in the fleet can serve request " + std::to_string(i));
    }
  }
  return raw;
}

void fill_euclidean_matrices(Instance& instance) {
  const std::size_t side = instance.coords.size();
  instance.travel_time = Matrix(side);
  instance.distance = Matrix(side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const double d = i == j ? 0.0 : euclidean(instance.coords[i], instance.coords[j]);
      instance.travel_time(i, j) = d;
      instance.distance(i, j) = d;
    }
  }
}

Direction classify_direction(const Instance& instance, const Request& request) {
  const double end = instance.horizon_end();
  auto tightened = [end](const TimeWindow& w) {
    return w.early > kTolerance || w.late < end - kTolerance;
  };
  const bool pickup_tight = tightened(request.pickup_window);
  const bool delivery_tight = tightened(request.delivery_window);
  if (delivery_tight && !pickup_tight) return Direction::outbound;
  if (pickup_tight && !delivery_tight) return Direction::inbound;
  return Direction::unclassified;
}

void classify_directions(Instance& instance) {
  for (auto& req : instance.requests) req.direction = classify_direction(instance, req);
}

std::vector<int> requests_on(const Instance& instance, std::span<const int> nodes) {
  std::vector<int> out;
  for (int node : nodes) {
    if (instance.is_depot(node)) continue;
    const int r = instance.request_of(node);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

void erase_request(const Instance& instance, std::vector<int>& nodes, int request) {
  const int pu = instance.pickup_node(request);
  const int de = instance.delivery_node(request);
  std::erase_if(nodes, [pu, de](int node) { return node == pu || node == de; });
}

void insert_request(const Instance& instance, std::vector<int>& nodes, int request,
                    int pickup_pos, int delivery_pos) {
  nodes.insert(nodes.begin() + pickup_pos, instance.pickup_node(request));
  nodes.insert(nodes.begin() + delivery_pos, instance.delivery_node(request));
}

Solution::Solution(int vehicle_count) : routes_(vehicle_count), cache_(vehicle_count) {
  for (int v = 0; v < vehicle_count; ++v) routes_[v].vehicle = v;
}

void Solution::set_nodes(int v, std::vector<int> nodes) {
  routes_[v].nodes = std::move(nodes);
  cache_[v].reset();
}

void Solution::set_nodes(int v, std::vector<int> nodes, const RouteCost& cost) {
  routes_[v].nodes = std::move(nodes);
  cache_[v] = cost;
}

std::vector<int> Solution::assignment(int request_count) const {
  std::vector<int> owner(request_count, -1);
  for (const auto& route : routes_) {
    for (int node : route.nodes) {
      if (node < request_count) owner[node] = route.vehicle;
    }
  }
  return owner;
}

}  // namespace darp
