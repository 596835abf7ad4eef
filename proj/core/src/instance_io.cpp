#include "darp/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace darp {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double to_number(std::string_view token, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

int to_int(std::string_view token, int line) {
  const double value = to_number(token, line);
  if (value != std::floor(value)) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return static_cast<int>(value);
}

}  // namespace

Instance parse_classic(std::string_view text, std::string name) {
  struct Line {
    int number;
    std::vector<std::string_view> tokens;
  };
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(start, end - start));
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "empty input");

  const Line& header = lines.front();
  if (header.tokens.size() < 5) throw ParseError(header.number, "header needs 'm n RD Q L'");
  const int m = to_int(header.tokens[0], header.number);
  const int n = to_int(header.tokens[1], header.number);
  const double route_duration = to_number(header.tokens[2], header.number);
  const int capacity = to_int(header.tokens[3], header.number);
  const double ride_limit = to_number(header.tokens[4], header.number);
  if (m < 1 || n < 0) throw ParseError(header.number, "header needs m >= 1 and n >= 0");

  const int node_lines = static_cast<int>(lines.size()) - 1;
  if (node_lines != 2 * n + 1 && node_lines != 2 * n + 2) {
    throw ContradictoryHeader("ContradictoryHeader: header announces n=" + std::to_string(n) +
                              " requests but the file has " + std::to_string(node_lines) +
                              " node lines (expected " + std::to_string(2 * n + 1) + " or " +
                              std::to_string(2 * n + 2) + ")");
  }

  struct Node {
    Point p;
    double service;
    int load;
    TimeWindow window;
  };
  std::vector<Node> nodes;
  for (int i = 0; i < node_lines; ++i) {
    const Line& line = lines[i + 1];
    if (line.tokens.size() < 7) throw ParseError(line.number, "node line needs 'id x y st load e l'");
    if (to_int(line.tokens[0], line.number) != i) {
      throw ParseError(line.number, "node id out of sequence, expected " + std::to_string(i));
    }
    Node node{{to_number(line.tokens[1], line.number), to_number(line.tokens[2], line.number)},
              to_number(line.tokens[3], line.number),
              to_int(line.tokens[4], line.number),
              {to_number(line.tokens[5], line.number), to_number(line.tokens[6], line.number)}};
    if (i >= 1 && i <= n && node.load <= 0) {
      throw ParseError(line.number, "pickup node needs a positive load");
    }
    nodes.push_back(node);
  }

  Instance inst;
  inst.name = std::move(name);
  inst.label = "classic";
  inst.depot_count = 1;
  inst.seat_types = {{0, "seat"}};
  inst.vehicle_type_names = {"vehicle"};
  for (int r = 0; r < n; ++r) inst.coords.push_back(nodes[1 + r].p);
  for (int r = 0; r < n; ++r) inst.coords.push_back(nodes[1 + n + r].p);
  inst.coords.push_back(nodes[0].p);
  for (int r = 0; r < n; ++r) {
    const Node& p = nodes[1 + r];
    const Node& d = nodes[1 + n + r];
    Request req;
    req.id = r;
    req.pickup_window = p.window;
    req.delivery_window = d.window;
    req.pickup_service = p.service;
    req.delivery_service = d.service;
    req.max_ride_time = ride_limit;
    req.demand = {p.load};
    req.compatible_types = {0};
    inst.requests.push_back(std::move(req));
  }
  for (int v = 0; v < m; ++v) {
    inst.vehicles.push_back({v, 0, 0, {capacity}, nodes[0].window, route_duration});
  }
  fill_euclidean_matrices(inst);
  classify_directions(inst);
  return validate_instance(std::move(inst));
}

// Canonical JSON ----------------------------------------------------------

namespace {

json window_json(const TimeWindow& w) { return json::array({w.early, w.late}); }

json matrix_json(const Matrix& mat) {
  json rows = json::array();
  for (std::size_t i = 0; i < mat.side(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mat.side(); ++j) row.push_back(mat(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

class Reader {
 public:
  const json& at(const json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path + "/" + key, "missing");
    return *it;
  }

  double number(const json& j, const std::string& path) const {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    return j.get<double>();
  }

  int integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<int>();
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
  }

  std::vector<int> ints(const json& j, const std::string& path) const {
    std::vector<int> out;
    const json& arr = array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(integer(arr[i], path + "/" + std::to_string(i)));
    return out;
  }

  TimeWindow window(const json& j, const std::string& path) const {
    const json& arr = array(j, path);
    if (arr.size() != 2) throw SchemaError(path, "expected [early, late]");
    return {number(arr[0], path + "/0"), number(arr[1], path + "/1")};
  }

  Matrix matrix(const json& j, const std::string& path) const {
    const json& rows = array(j, path);
    Matrix mat(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_path = path + "/" + std::to_string(i);
      const json& row = array(rows[i], row_path);
      if (row.size() != rows.size()) throw SchemaError(row_path, "matrix must be square");
      for (std::size_t k = 0; k < row.size(); ++k) {
        mat(i, k) = number(row[k], row_path + "/" + std::to_string(k));
      }
    }
    return mat;
  }
};

}  // namespace

std::string write_canonical(const Instance& inst) {
  json doc;
  doc["format"] = kCanonicalFormat;
  doc["version"] = kCanonicalVersion;
  doc["name"] = inst.name;
  doc["label"] = inst.label;
  doc["units"] = {{"time", "minutes"}, {"distance", "abstract"}};
  doc["depot_count"] = inst.depot_count;
  json seats = json::array();
  for (const auto& s : inst.seat_types) seats.push_back({{"id", s.id}, {"name", s.name}});
  doc["seat_types"] = seats;
  doc["vehicle_types"] = inst.vehicle_type_names;
  json coords = json::array();
  for (const auto& p : inst.coords) coords.push_back(json::array({p.x, p.y}));
  doc["coords"] = coords;
  doc["travel_time"] = matrix_json(inst.travel_time);
  doc["distance"] = matrix_json(inst.distance);
  json requests = json::array();
  for (const auto& r : inst.requests) {
    requests.push_back({{"id", r.id},
                        {"pickup_window", window_json(r.pickup_window)},
                        {"delivery_window", window_json(r.delivery_window)},
                        {"pickup_service", r.pickup_service},
                        {"delivery_service", r.delivery_service},
                        {"max_ride_time", r.max_ride_time},
                        {"demand", r.demand},
                        {"compatible_types", r.compatible_types},
                        {"direction", to_string(r.direction)}});
  }
  doc["requests"] = requests;
  json vehicles = json::array();
  for (const auto& v : inst.vehicles) {
    vehicles.push_back({{"id", v.id},
                        {"type", v.type},
                        {"depot", v.depot},
                        {"capacity", v.capacity},
                        {"depot_window", window_json(v.depot_window)},
                        {"max_route_duration", v.max_route_duration}});
  }
  doc["vehicles"] = vehicles;
  return doc.dump(1) + "\n";
}

Instance parse_canonical(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  const Reader rd;
  if (rd.string(rd.at(doc, "", "format"), "/format") != kCanonicalFormat) {
    throw SchemaError("/format", "expected \"" + std::string(kCanonicalFormat) + "\"");
  }
  if (rd.integer(rd.at(doc, "", "version"), "/version") != kCanonicalVersion) {
    throw SchemaError("/version", "unsupported version");
  }

  Instance inst;
  inst.name = rd.string(rd.at(doc, "", "name"), "/name");
  if (doc.contains("label")) inst.label = rd.string(doc["label"], "/label");
  inst.depot_count = rd.integer(rd.at(doc, "", "depot_count"), "/depot_count");

  const json& seats = rd.array(rd.at(doc, "", "seat_types"), "/seat_types");
  for (std::size_t i = 0; i < seats.size(); ++i) {
    const std::string path = "/seat_types/" + std::to_string(i);
    inst.seat_types.push_back({rd.integer(rd.at(seats[i], path, "id"), path + "/id"),
                               rd.string(rd.at(seats[i], path, "name"), path + "/name")});
  }
  const json& types = rd.array(rd.at(doc, "", "vehicle_types"), "/vehicle_types");
  for (std::size_t i = 0; i < types.size(); ++i) {
    inst.vehicle_type_names.push_back(rd.string(types[i], "/vehicle_types/" + std::to_string(i)));
  }
  if (doc.contains("coords")) {
    const json& coords = rd.array(doc["coords"], "/coords");
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const std::string path = "/coords/" + std::to_string(i);
      const json& pair = rd.array(coords[i], path);
      if (pair.size() != 2) throw SchemaError(path, "expected [x, y]");
      inst.coords.push_back({rd.number(pair[0], path + "/0"), rd.number(pair[1], path + "/1")});
    }
  }

  const json& requests = rd.array(rd.at(doc, "", "requests"), "/requests");
  for (std::size_t i = 0; i < requests.size(); ++i) {
    const std::string path = "/requests/" + std::to_string(i);
    const json& r = requests[i];
    Request req;
    req.id = rd.integer(rd.at(r, path, "id"), path + "/id");
    req.pickup_window = rd.window(rd.at(r, path, "pickup_window"), path + "/pickup_window");
    req.delivery_window = rd.window(rd.at(r, path, "delivery_window"), path + "/delivery_window");
    req.pickup_service = rd.number(rd.at(r, path, "pickup_service"), path + "/pickup_service");
    req.delivery_service = rd.number(rd.at(r, path, "delivery_service"), path + "/delivery_service");
    req.max_ride_time = rd.number(rd.at(r, path, "max_ride_time"), path + "/max_ride_time");
    req.demand = rd.ints(rd.at(r, path, "demand"), path + "/demand");
    req.compatible_types = rd.ints(rd.at(r, path, "compatible_types"), path + "/compatible_types");
    if (r.contains("direction")) {
      const auto dir = parse_direction(rd.string(r["direction"], path + "/direction"));
      if (!dir) throw SchemaError(path + "/direction", "expected outbound, inbound or unclassified");
      req.direction = *dir;
    }
    inst.requests.push_back(std::move(req));
  }

  const json& vehicles = rd.array(rd.at(doc, "", "vehicles"), "/vehicles");
  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    const std::string path = "/vehicles/" + std::to_string(i);
    const json& v = vehicles[i];
    Vehicle veh;
    veh.id = rd.integer(rd.at(v, path, "id"), path + "/id");
    veh.type = rd.integer(rd.at(v, path, "type"), path + "/type");
    veh.depot = rd.integer(rd.at(v, path, "depot"), path + "/depot");
    veh.capacity = rd.ints(rd.at(v, path, "capacity"), path + "/capacity");
    veh.depot_window = rd.window(rd.at(v, path, "depot_window"), path + "/depot_window");
    veh.max_route_duration =
        rd.number(rd.at(v, path, "max_route_duration"), path + "/max_route_duration");
    inst.vehicles.push_back(std::move(veh));
  }

  if (doc.contains("travel_time")) {
    inst.travel_time = rd.matrix(doc["travel_time"], "/travel_time");
    inst.distance = doc.contains("distance") ? rd.matrix(doc["distance"], "/distance")
                                             : inst.travel_time;
  } else if (!inst.coords.empty()) {
    fill_euclidean_matrices(inst);
  } else {
    throw SchemaError("/travel_time", "missing, and no coords to derive it from");
  }
  return validate_instance(std::move(inst));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Instance read_instance_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_canonical(text);
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return parse_classic(text, stem);
}

// Multi-depot extension ---------------------------------------------------

Instance extend_multidepot(const Instance& instance, const std::vector<Point>& depots) {
  if (depots.empty()) throw std::invalid_argument("extend_multidepot: no depots given");
  if (static_cast<int>(instance.coords.size()) != instance.node_count()) {
    throw std::invalid_argument("extend_multidepot: instance has no coordinates");
  }
  const int n = instance.n();
  const int requests_nodes = 2 * n;
  Instance out = instance;
  out.depot_count = static_cast<int>(depots.size());
  out.coords.resize(requests_nodes);
  out.coords.insert(out.coords.end(), depots.begin(), depots.end());
  const std::size_t side = out.coords.size();
  out.travel_time = Matrix(side);
  out.distance = Matrix(side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const bool both_requests = static_cast<int>(i) < requests_nodes &&
                                 static_cast<int>(j) < requests_nodes;
      if (both_requests) {
        out.travel_time(i, j) = instance.travel_time(i, j);
        out.distance(i, j) = instance.distance(i, j);
      } else {
        const double d = i == j ? 0.0 : euclidean(out.coords[i], out.coords[j]);
        out.travel_time(i, j) = d;
        out.distance(i, j) = d;
      }
    }
  }
  for (auto& v : out.vehicles) v.depot = v.id % out.depot_count;
  return validate_instance(std::move(out));
}

// Heterogeneous users and fleet --------------------------------------------

const char* to_string(PassengerType type) {
  switch (type) {
    case PassengerType::staff: return "staff";
    case PassengerType::seated: return "seated";
    case PassengerType::stretcher: return "stretcher";
    case PassengerType::wheelchair: return "wheelchair";
  }
  return "?";
}

// The three seat kinds a staff member may use are nested (stretcher is
// usable by everyone who can sit, patient seats by staff and seated
// patients), so capacity per cumulative class is exact:
//   0: stretchers, 1: patient seats + stretchers, 2: all seats, 3: wheelchair places.
std::array<int, 4> passenger_demand(PassengerType type) {
  switch (type) {
    case PassengerType::staff: return {0, 0, 1, 0};
    case PassengerType::seated: return {0, 1, 1, 0};
    case PassengerType::stretcher: return {1, 1, 1, 0};
    case PassengerType::wheelchair: return {0, 0, 0, 1};
  }
  return {0, 0, 0, 0};
}

std::array<int, 4> layout_capacity(const VehicleLayout& l) {
  return {l.stretchers, l.patient_seats + l.stretchers,
          l.staff_seats + l.patient_seats + l.stretchers, l.wheelchair_places};
}

HeterogenizeScheme named_scheme(std::string_view name) {
  HeterogenizeScheme s;
  s.name = std::string(name);
  if (name == "U") {
    s.passenger_weights = {1.0, 0.0, 0.0, 0.0};
  } else if (name == "E") {
    s.layouts = {{"standard", 2, 1, 1, 1}};
  } else if (name == "I") {
    s.layouts = {{"T0", 2, 1, 1, 1}, {"T1", 1, 2, 0, 2}};
  } else {
    throw std::invalid_argument("unknown heterogenize scheme '" + std::string(name) +
                                "' (expected U, E or I)");
  }
  return s;
}

Instance heterogenize(const Instance& instance, const HeterogenizeScheme& scheme, Rng& rng,
                      std::vector<PassengerType>* realized) {
  const int n = instance.n();
  std::vector<VehicleLayout> layouts = scheme.layouts;
  if (layouts.empty()) {
    // Keep the fleet's own size: every seat becomes a staff seat.
    const int seats = instance.m() > 0 ? instance.vehicles[0].capacity.at(0) : 0;
    layouts.push_back({"vehicle", seats, 0, 0, 0});
  }

  const auto& w = scheme.passenger_weights;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0)) throw InfeasibleScheme("InfeasibleScheme: passenger weights sum to zero");
  std::array<int, 4> counts{};
  std::array<double, 4> remainder{};
  int assigned = 0;
  for (int k = 0; k < 4; ++k) {
    const double exact = w[k] / total * n;
    counts[k] = static_cast<int>(std::floor(exact));
    remainder[k] = exact - counts[k];
    assigned += counts[k];
  }
  std::array<int, 4> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return remainder[a] > remainder[b]; });
  for (int i = 0; assigned < n; ++i, ++assigned) ++counts[order[i % 4]];

  std::vector<PassengerType> types;
  for (int k = 0; k < 4; ++k) types.insert(types.end(), counts[k], static_cast<PassengerType>(k));
  rng.shuffle(types);

  Instance out = instance;
  out.seat_types = {{0, "stretcher"}, {1, "patient_or_stretcher"}, {2, "any_seat"}, {3, "wheelchair"}};
  out.vehicle_type_names.clear();
  std::vector<std::array<int, 4>> caps;
  for (const auto& l : layouts) {
    out.vehicle_type_names.push_back(l.name);
    caps.push_back(layout_capacity(l));
  }
  const int layout_count = static_cast<int>(layouts.size());
  for (auto& v : out.vehicles) {
    v.type = v.id % layout_count;
    v.capacity.assign(caps[v.type].begin(), caps[v.type].end());
  }
  std::vector<bool> present(layout_count, false);
  for (const auto& v : out.vehicles) present[v.type] = true;

  for (int r = 0; r < n; ++r) {
    auto& req = out.requests[r];
    const int passengers = std::accumulate(req.demand.begin(), req.demand.end(), 0);
    const auto unit = passenger_demand(types[r]);
    req.demand.assign(4, 0);
    for (int k = 0; k < 4; ++k) req.demand[k] = unit[k] * passengers;
    req.compatible_types.clear();
    for (int t = 0; t < layout_count; ++t) {
      bool fits = true;
      for (int k = 0; k < 4; ++k) fits = fits && req.demand[k] <= caps[t][k];
      if (fits) req.compatible_types.push_back(t);
    }
    const bool served = std::any_of(req.compatible_types.begin(), req.compatible_types.end(),
                                    [&](int t) { return present[t]; });
    if (!served) {
      throw InfeasibleScheme(std::string("InfeasibleScheme: no vehicle can carry request ") +
                             std::to_string(r) + " (" + to_string(types[r]) + ")");
    }
  }
  if (realized) *realized = types;
  return validate_instance(std::move(out));
}

// Generators -----------------------------------------------------------------

Instance random_instance(const RandomInstanceSpec& spec, Rng& rng) {
  const int n = spec.n;
  Instance inst;
  inst.name = "random-n" + std::to_string(n) + "-m" + std::to_string(spec.m);
  inst.label = "random";
  inst.depot_count = spec.depots;
  inst.seat_types = {{0, "seat"}};
  inst.vehicle_type_names = {"vehicle"};
  auto point = [&] {
    return Point{rng.uniform_real(-spec.area, spec.area), rng.uniform_real(-spec.area, spec.area)};
  };
  inst.coords.resize(2 * n + spec.depots);
  for (auto& p : inst.coords) p = point();
  const double H = spec.horizon;
  for (int r = 0; r < n; ++r) {
    Request req;
    req.id = r;
    req.pickup_service = spec.service;
    req.delivery_service = spec.service;
    const double direct = euclidean(inst.coords[r], inst.coords[n + r]);
    req.max_ride_time = direct + spec.service + rng.uniform_real(5.0, 25.0);
    const double e = rng.uniform_real(0.0, H * 0.25);
    const double width = rng.uniform_real(15.0, 45.0);
    const double de = e + spec.service + direct;
    switch (rng.uniform_int(0, 2)) {
      case 0:
        req.pickup_window = {e, e + width};
        req.delivery_window = {de, de + width + rng.uniform_real(10.0, 30.0)};
        break;
      case 1:  // only the delivery is constrained
        req.pickup_window = {0.0, H};
        req.delivery_window = {de, de + width};
        break;
      default:  // only the pickup is constrained
        req.pickup_window = {e, e + width};
        req.delivery_window = {0.0, H};
        break;
    }
    req.demand = {1};
    req.compatible_types = {0};
    inst.requests.push_back(std::move(req));
  }
  for (int v = 0; v < spec.m; ++v) {
    inst.vehicles.push_back({v, 0, v % spec.depots, {spec.capacity}, {0.0, H}, H});
  }
  fill_euclidean_matrices(inst);
  classify_directions(inst);
  inst = validate_instance(std::move(inst));
  if (spec.heterogeneous) {
    Rng stream = rng.split(0x4e7e40ULL);
    inst = heterogenize(inst, named_scheme("I"), stream);
    inst.label = "random-heterogeneous";
  }
  return inst;
}

Instance synthetic_third_set(const ThirdSetSpec& spec, Rng& rng) {
  const int n = spec.n;
  const double service = spec.large ? 15.0 : 10.0;
  const double H = spec.horizon;
  Instance inst;
  inst.name = "synthetic-third-set-n" + std::to_string(n) + "-m" + std::to_string(spec.m);
  inst.label = "synthetic-third-set";
  inst.depot_count = spec.depots;
  inst.seat_types = {{0, "patient"}};
  inst.vehicle_type_names = {"ambulance", "bus", "car", "equipped"};
  const int capacities[] = {1, 8, 3, 1};

  auto point = [&] {
    return Point{rng.uniform_real(0.0, spec.area), rng.uniform_real(0.0, spec.area)};
  };
  inst.coords.resize(2 * n + spec.depots);
  for (int r = 0; r < n; ++r) {
    // Twice the direct time must cover the direct time plus the drop-off.
    do {
      inst.coords[r] = point();
      inst.coords[n + r] = point();
    } while (euclidean(inst.coords[r], inst.coords[n + r]) < service);
  }
  for (int k = 0; k < spec.depots; ++k) inst.coords[2 * n + k] = point();

  for (int r = 0; r < n; ++r) {
    Request req;
    req.id = r;
    req.pickup_service = service;
    req.delivery_service = service;
    const double direct = euclidean(inst.coords[r], inst.coords[n + r]);
    req.max_ride_time = 2.0 * direct;
    const double appointment = rng.uniform_real(direct + 2 * service + 30.0, H - 90.0);
    if (rng.uniform_int(0, 1) == 0) {
      req.pickup_window = {0.0, H};
      req.delivery_window = {appointment - 30.0, appointment};
    } else {
      req.pickup_window = {appointment, appointment + 30.0};
      req.delivery_window = {0.0, H};
    }
    req.demand = {1};
    const double u = rng.uniform_real(0.0, 1.0);
    if (u < 0.15) {
      req.compatible_types = {0};  // stretcher
    } else if (u < 0.30) {
      req.compatible_types = {0, 3};  // wheelchair
    } else {
      req.compatible_types = {0, 1, 2, 3};
    }
    inst.requests.push_back(std::move(req));
  }
  for (int v = 0; v < spec.m; ++v) {
    const int type = v % 4;
    inst.vehicles.push_back(
        {v, type, v % spec.depots, {capacities[type]}, {0.0, H}, spec.route_duration});
  }
  fill_euclidean_matrices(inst);
  classify_directions(inst);
  return validate_instance(std::move(inst));
}

}  // namespace darp
