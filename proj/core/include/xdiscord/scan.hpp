#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xdiscord/boundaries.hpp"
#include "xdiscord/discord.hpp"
#include "xdiscord/xstate.hpp"

namespace xdiscord {

enum class Unit { Bits, Nats };

inline double to_unit(double nats, Unit unit);

struct Axis {
  std::string name;
  double lo{}, hi{};
  int steps{2};  // number of grid points, >= 2
};

struct SweepSpec {
  std::string family;  // horodecki | phase-flip | xyz | dipolar | bell
  std::map<std::string, double> fixed;
  std::vector<Axis> axes;             // one (sweep) or two (phase diagram)
  std::vector<std::string> columns;   // empty -> all columns
  Unit unit{Unit::Bits};
};

// Everything the sweep engine knows about one grid point.
struct PointRecord {
  double q{}, q0{}, q_pi2{}, false_q{};
  std::optional<double> q_theta;
  double theta_opt{};
  Branch branch{Branch::Q0};
  int n_interior_minima{};
  double d2_0{}, d2_pi2{};  // +-inf when divergent
};

struct SweepResult {
  SweepSpec spec;
  std::vector<std::array<double, 2>> coords;  // [x] or [x, y] per row
  std::vector<PointRecord> records;
};

struct BoundarySearchResult {
  std::optional<double> t_pi2, t_cross, t_0;
  std::vector<std::string> errors;  // which roots were not bracketed, and why
};

enum class SampleSpace { Hypercube5, Tetrahedron3 };

struct VolumeReport {
  SampleSpace space{SampleSpace::Hypercube5};
  std::uint64_t samples{}, hits{};
  double fraction{}, stderr_{};
  // Tetrahedron mode only: per-subdomain split of the hits.
  std::uint64_t q0_hits{}, qpi2_hits{};
  std::uint64_t seed{};
};

PointRecord evaluate_point(const RealXState& state);

// Instantiates a state of the named family from its parameter map.
// Throws std::invalid_argument on unknown family / missing parameters.
RealXState make_state(const std::string& family,
                      const std::map<std::string, double>& params);

FamilyCurve make_curve(const std::string& family,
                       std::map<std::string, double> fixed, const Axis& axis);

// Row order is always the deterministic grid order (outer axis slowest),
// regardless of how many workers evaluate the grid.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

void write_sweep_csv(std::ostream& os, const SweepResult& result);

BoundarySearchResult find_boundaries(const std::string& family,
                                     const std::map<std::string, double>& fixed,
                                     const Axis& axis);

// Seeded Monte-Carlo volume estimate; byte-identical for a fixed seed
// independently of the worker count.
VolumeReport estimate_volume(SampleSpace space, std::uint64_t samples,
                             std::uint64_t seed, int jobs = 1);

// JSON state schema shared with the CLI: matrix form
// {"a","b","c","d","u_re","u_im","v_re","v_im"} or Bloch form
// {"s1","s2","c1","c2","c3"}; exactly one form per document.
RealXState parse_state_json(const std::string& text);
std::string state_to_json(const RealXState& state);

std::string volume_report_json(const VolumeReport& report);
std::string boundary_result_json(const BoundarySearchResult& result);
std::string discord_result_json(const DiscordResult& result, Unit unit);

inline double to_unit(double nats, Unit unit) {
  return unit == Unit::Bits ? nats / 0.69314718055994530942 : nats;
}

}  // namespace xdiscord
