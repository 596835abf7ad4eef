#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "darp/model.hpp"
#include "darp/rng.hpp"

namespace darp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ContradictoryHeader : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class InfeasibleScheme : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cordeau-style text: header "m n RD Q L", then node lines
/// "id x y st load e l" for nodes 0..2n, optionally followed by the depot
/// copy 2n+1.
Instance parse_classic(std::string_view text, std::string name = "classic");

inline constexpr std::string_view kCanonicalFormat = "darp-canonical";
inline constexpr int kCanonicalVersion = 1;

Instance parse_canonical(std::string_view json_text);
std::string write_canonical(const Instance& instance);

Instance read_instance_file(const std::string& path);  // by extension: .json or classic
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

inline const std::vector<Point>& default_depot_coords() {
  static const std::vector<Point> coords = {{-5, -5}, {5, 5}, {-5, 5}, {5, -5}};
  return coords;
}

/// Replaces the single depot by `depots`; vehicle v goes to depot
/// v mod depots.size(). Request nodes and their matrix entries are kept
/// bit-for-bit; depot rows and columns are Euclidean.
Instance extend_multidepot(const Instance& instance,
                           const std::vector<Point>& depots = default_depot_coords());

/// Passenger types and the places they may occupy:
///   staff: staff seat, patient seat or stretcher
///   seated: patient seat or stretcher
///   stretcher: stretcher only
///   wheelchair: wheelchair place only
enum class PassengerType { staff, seated, stretcher, wheelchair };
const char* to_string(PassengerType type);

struct VehicleLayout {
  std::string name;
  int staff_seats = 0;
  int patient_seats = 0;
  int stretchers = 0;
  int wheelchair_places = 0;
};

struct HeterogenizeScheme {
  std::string name = "custom";
  std::array<double, 4> passenger_weights = {0.25, 0.25, 0.25, 0.25};
  std::vector<VehicleLayout> layouts;  // vehicle v gets layouts[v mod size]
};

/// "U": one seat type, homogeneous fleet; "E": four passenger types on a
/// homogeneous fleet; "I": four passenger types on two vehicle layouts.
HeterogenizeScheme named_scheme(std::string_view name);

/// Seat demand of one passenger of `type` over the four nested resources
/// (stretcher, patient-or-stretcher, any seat, wheelchair).
std::array<int, 4> passenger_demand(PassengerType type);
std::array<int, 4> layout_capacity(const VehicleLayout& layout);

/// Realized type counts are the largest-remainder apportionment of the
/// weights, assigned to a shuffled request order. Each request keeps its
/// original passenger count. Throws InfeasibleScheme when some request fits
/// no vehicle layout.
Instance heterogenize(const Instance& instance, const HeterogenizeScheme& scheme, Rng& rng,
                      std::vector<PassengerType>* realized = nullptr);

struct RandomInstanceSpec {
  int n = 3;
  int m = 2;
  int depots = 1;
  bool heterogeneous = false;
  double area = 10.0;     // coordinates in [-area, area]^2
  double horizon = 480.0;
  double service = 1.0;
  int capacity = 3;
};

/// Small random instance with windows loose enough that most draws are
/// feasible. Heterogeneous draws go through heterogenize(named_scheme("I")).
Instance random_instance(const RandomInstanceSpec& spec, Rng& rng);

struct ThirdSetSpec {
  int n = 20;
  int m = 8;
  int depots = 4;
  bool large = false;  // 15 minute service if large, 10 otherwise
  double area = 60.0;
  double horizon = 720.0;
  double route_duration = 480.0;
};

/// Synthetic instance within the parameter envelope of the real-world
/// healthcare set: ambulance/bus/car/equipped vehicles with capacities
/// 1/8/3/1, seated/stretcher/wheelchair patients, maximum ride time twice
/// the direct travel time. Labeled "synthetic-third-set".
Instance synthetic_third_set(const ThirdSetSpec& spec, Rng& rng);

}  // namespace darp
