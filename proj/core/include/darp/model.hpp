#pragma once

// Problem-domain types for the multi-depot dial-a-ride problem with
// heterogeneous vehicles and users.
//
// Node numbering is 0-based and fixed by the request count n and the depot
// count p:
//   pickups    0 .. n-1        (request r picks up at node r)
//   deliveries n .. 2n-1       (request r delivers at node n + r)
//   depots     2n .. 2n+p-1

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace darp {

/// Comparison tolerance for times and violation amounts (minutes / seats).
inline constexpr double kTolerance = 1e-6;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

double euclidean(const Point& a, const Point& b);

struct TimeWindow {
  double early = 0.0;
  double late = 0.0;
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct SeatType {
  int id = 0;
  std::string name;
  friend bool operator==(const SeatType&, const SeatType&) = default;
};

enum class Direction { outbound, inbound, unclassified };

const char* to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

struct Request {
  int id = 0;
  TimeWindow pickup_window;
  TimeWindow delivery_window;
  double pickup_service = 0.0;
  double delivery_service = 0.0;
  double max_ride_time = 0.0;
  std::vector<int> demand;            // seats per seat type
  std::vector<int> compatible_types;  // vehicle types allowed to serve it
  Direction direction = Direction::unclassified;
  friend bool operator==(const Request&, const Request&) = default;
};

struct Vehicle {
  int id = 0;
  int type = 0;
  int depot = 0;  // depot index in 0..p-1, not a node index
  std::vector<int> capacity;  // seats per seat type
  TimeWindow depot_window;
  double max_route_duration = 0.0;
  friend bool operator==(const Vehicle&, const Vehicle&) = default;
};

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t side, double fill = 0.0)
      : side_(side), data_(side * side, fill) {}

  std::size_t side() const { return side_; }
  bool empty() const { return side_ == 0; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * side_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * side_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t side_ = 0;
  std::vector<double> data_;
};

/// Immutable problem data once validated.
struct Instance {
  std::string name;
  std::string label;  // provenance tag, e.g. "synthetic-third-set"
  int depot_count = 1;
  std::vector<Point> coords;  // one per node
  Matrix travel_time;
  Matrix distance;
  std::vector<Request> requests;
  std::vector<Vehicle> vehicles;
  std::vector<SeatType> seat_types;
  std::vector<std::string> vehicle_type_names;

  int n() const { return static_cast<int>(requests.size()); }
  int m() const { return static_cast<int>(vehicles.size()); }
  int p() const { return depot_count; }
  int node_count() const { return 2 * n() + depot_count; }
  int seat_count() const { return static_cast<int>(seat_types.size()); }

  int pickup_node(int request) const { return request; }
  int delivery_node(int request) const { return request + n(); }
  int depot_node(int depot) const { return 2 * n() + depot; }
  int vehicle_depot_node(int vehicle) const { return depot_node(vehicles[vehicle].depot); }

  bool is_pickup(int node) const { return node >= 0 && node < n(); }
  bool is_delivery(int node) const { return node >= n() && node < 2 * n(); }
  bool is_depot(int node) const { return node >= 2 * n(); }
  int request_of(int node) const { return node < n() ? node : node - n(); }
  int partner(int node) const { return node < n() ? node + n() : node - n(); }

  TimeWindow window(int node) const;
  double service_time(int node) const;
  /// Seats of `seat` taken (positive) or freed (negative) when serving `node`.
  int load_delta(int node, int seat) const;

  bool compatible(int request, int vehicle) const;

  double t(int i, int j) const { return travel_time(i, j); }
  double d(int i, int j) const { return distance(i, j); }

  /// Planning horizon end: the latest depot closing time over the fleet.
  double horizon_end() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class InstanceErrorKind {
  incompatible_request,
  malformed_matrix,
  window_inverted,
  ride_time_unattainable,
  invalid_demand,
  invalid_vehicle,
  invalid_seat_types,
};

const char* to_string(InstanceErrorKind kind);

class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  InstanceErrorKind kind() const { return kind_; }

 private:
  InstanceErrorKind kind_;
};

/// Returns `raw` unchanged if every structural rule holds; throws
/// InstanceError naming the first rule that fails otherwise.
Instance validate_instance(Instance raw);

/// Fills `travel_time` and `distance` with Euclidean distances between
/// `coords` (t = d).
void fill_euclidean_matrices(Instance& instance);

/// Direction policy: a window is tightened when it is strictly narrower than
/// [0, horizon_end()]. Only-delivery-tightened -> outbound, only-pickup ->
/// inbound, otherwise unclassified.
Direction classify_direction(const Instance& instance, const Request& request);
void classify_directions(Instance& instance);

struct Route {
  int vehicle = 0;
  std::vector<int> nodes;  // pickups and deliveries; depots implicit
  friend bool operator==(const Route&, const Route&) = default;
};

/// Requests on a node sequence in order of their first appearance.
std::vector<int> requests_on(const Instance& instance, std::span<const int> nodes);

/// Removes both nodes of `request` from `nodes`.
void erase_request(const Instance& instance, std::vector<int>& nodes, int request);

/// Inserts the pair so that afterwards the pickup sits at `pickup_pos` and
/// the delivery at `delivery_pos` (> pickup_pos) of the resulting sequence.
void insert_request(const Instance& instance, std::vector<int>& nodes, int request,
                    int pickup_pos, int delivery_pos);

struct ViolationVector {
  double ride_time = 0.0;
  double window = 0.0;
  double capacity = 0.0;
  double duration = 0.0;

  bool zero() const {
    return ride_time <= 0.0 && window <= 0.0 && capacity <= 0.0 && duration <= 0.0;
  }
  ViolationVector& operator+=(const ViolationVector& o) {
    ride_time += o.ride_time;
    window += o.window;
    capacity += o.capacity;
    duration += o.duration;
    return *this;
  }
  friend bool operator==(const ViolationVector&, const ViolationVector&) = default;
};

/// Distance and violations of one route under the eight-step schedule.
struct RouteCost {
  double distance = 0.0;
  ViolationVector violations;
};

/// One route per vehicle, route i served by vehicle i. Per-route costs are
/// memoized; any edit through set_nodes() drops the memo for that route.
class Solution {
 public:
  Solution() = default;
  explicit Solution(int vehicle_count);

  int size() const { return static_cast<int>(routes_.size()); }
  const Route& route(int v) const { return routes_[v]; }
  const std::vector<Route>& routes() const { return routes_; }
  const std::vector<int>& nodes(int v) const { return routes_[v].nodes; }

  void set_nodes(int v, std::vector<int> nodes);
  void set_nodes(int v, std::vector<int> nodes, const RouteCost& cost);

  const std::optional<RouteCost>& cached(int v) const { return cache_[v]; }
  void store(int v, const RouteCost& cost) const { cache_[v] = cost; }

  /// Vehicle serving each request, -1 where unassigned.
  std::vector<int> assignment(int request_count) const;

  friend bool operator==(const Solution& a, const Solution& b) { return a.routes_ == b.routes_; }

 private:
  std::vector<Route> routes_;
  mutable std::vector<std::optional<RouteCost>> cache_;
};

}  // namespace darp
