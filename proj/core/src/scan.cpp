#include "xdiscord/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "math_util.hpp"
#include "xdiscord/entropy.hpp"
#include "xdiscord/models.hpp"

namespace xdiscord {

using detail::sq;
using json = nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
      fn(i);
  };
  std::vector<std::thread> pool;
  const int count = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

double need(const std::map<std::string, double>& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument(std::string("missing parameter: ") + key);
  return it->second;
}

double get_or(const std::map<std::string, double>& params, const char* key,
              double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const char* space_name(SampleSpace space) {
  return space == SampleSpace::Hypercube5 ? "hypercube5" : "tetrahedron3";
}

const std::vector<std::string>& all_columns() {
  static const std::vector<std::string> cols = {
      "q",     "q0",   "q_pi2", "q_theta",       "theta_opt",
      "branch", "d2_0", "d2_pi2", "false_discord"};
  return cols;
}

}  // namespace

PointRecord evaluate_point(const RealXState& s) {
  const DiscordResult r = discord(s);
  PointRecord p;
  p.q = r.q;
  p.q0 = r.q0;
  p.q_pi2 = r.q_pi2;
  p.false_q = std::min(r.q0, r.q_pi2);
  p.q_theta = r.q_theta;
  p.theta_opt = r.theta_opt;
  p.branch = r.branch;
  p.n_interior_minima = r.n_interior_minima;
  p.d2_0 = cond_entropy_d2_at_0(s).value;
  p.d2_pi2 = cond_entropy_d2_at_pi2(s).value;
  return p;
}

RealXState make_state(const std::string& family,
                      const std::map<std::string, double>& params) {
  if (family == "horodecki")
    return horodecki(need(params, "epsilon"), need(params, "m"));
  if (family == "phase-flip")
    return phase_flip(need(params, "s1"), need(params, "s2"),
                      need(params, "c1"), need(params, "c2"),
                      need(params, "c3"), need(params, "p"));
  if (family == "xyz")
    return xyz_thermal(XYZParams{need(params, "Jx"), need(params, "Jy"),
                                 need(params, "Jz"), need(params, "B1"),
                                 need(params, "B2"), need(params, "T")});
  if (family == "dipolar") {
    const double D = need(params, "D");
    const double T = need(params, "T");
    // Fields either directly (B1, B2) or via (B0, gamma1, gamma2).
    if (params.count("B1") || params.count("B2")) {
      return xyz_thermal(XYZParams{-D, -D, 2.0 * D, get_or(params, "B1", 0.0),
                                   get_or(params, "B2", 0.0), T});
    }
    return dipolar(DipolarParams{D, get_or(params, "B0", 0.0),
                                 get_or(params, "gamma1", 1.0),
                                 get_or(params, "gamma2", 1.0), T});
  }
  if (family == "bell")
    return bell_diagonal(need(params, "c1"), need(params, "c2"),
                         need(params, "c3"));
  throw std::invalid_argument("unknown model family: " + family);
}

FamilyCurve make_curve(const std::string& family,
                       std::map<std::string, double> fixed, const Axis& axis) {
  FamilyCurve curve;
  curve.t_lo = axis.lo;
  curve.t_hi = axis.hi;
  curve.label = family + " along " + axis.name;
  curve.evaluate = [family, fixed, name = axis.name](double t) mutable {
    fixed[name] = t;
    return make_state(family, fixed);
  };
  return curve;
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw std::invalid_argument("run_sweep: expected one or two axes");
  for (const auto& ax : spec.axes)
    if (ax.steps < 2 || !(ax.lo < ax.hi))
      throw std::invalid_argument("run_sweep: axis needs steps >= 2, lo < hi");

  SweepResult out;
  out.spec = spec;
  const Axis& ax = spec.axes[0];
  const bool two_d = spec.axes.size() == 2;
  const Axis ay = two_d ? spec.axes[1] : Axis{};
  const std::size_t nx = ax.steps;
  const std::size_t ny = two_d ? static_cast<std::size_t>(ay.steps) : 1;
  out.coords.resize(nx * ny);
  out.records.resize(nx * ny);

  std::atomic<bool> failed{false};
  std::string error;
  std::mutex err_mutex;
  parallel_for(nx * ny, jobs, [&](std::size_t idx) {
    if (failed.load()) return;
    const std::size_t i = idx % nx;
    const std::size_t j = idx / nx;
    const double x = ax.lo + (ax.hi - ax.lo) * i / (nx - 1);
    std::map<std::string, double> params = spec.fixed;
    params[ax.name] = x;
    double y = 0.0;
    if (two_d) {
      y = ay.lo + (ay.hi - ay.lo) * j / (ny - 1);
      params[ay.name] = y;
    }
    out.coords[idx] = {x, y};
    try {
      out.records[idx] = evaluate_point(make_state(spec.family, params));
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(err_mutex);
      failed = true;
      error = "at " + ax.name + "=" + format12(x) +
              (two_d ? ", " + ay.name + "=" + format12(y) : std::string()) +
              ": " + e.what();
    }
  });
  if (failed) throw std::runtime_error("run_sweep aborted " + error);
  return out;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  os << "# family=" << spec.family;
  for (const auto& [k, v] : spec.fixed) os << " " << k << "=" << format12(v);
  os << "\n";
  for (const auto& ax : spec.axes)
    os << "# axis " << ax.name << "=" << format12(ax.lo) << ":"
       << format12(ax.hi) << ":" << ax.steps << "\n";
  os << "# unit=" << (spec.unit == Unit::Bits ? "bits" : "nats") << "\n";

  const auto& cols = spec.columns.empty() ? all_columns() : spec.columns;
  os << spec.axes[0].name;
  if (spec.axes.size() == 2) os << "," << spec.axes[1].name;
  for (const auto& c : cols) os << "," << c;
  os << "\n";

  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const PointRecord& p = result.records[i];
    os << format12(result.coords[i][0]);
    if (spec.axes.size() == 2) os << "," << format12(result.coords[i][1]);
    for (const auto& c : cols) {
      os << ",";
      if (c == "q")
        os << format12(to_unit(p.q, spec.unit));
      else if (c == "q0")
        os << format12(to_unit(p.q0, spec.unit));
      else if (c == "q_pi2")
        os << format12(to_unit(p.q_pi2, spec.unit));
      else if (c == "q_theta")
        os << (p.q_theta ? format12(to_unit(*p.q_theta, spec.unit)) : "");
      else if (c == "theta_opt")
        os << format12(p.theta_opt);
      else if (c == "branch")
        os << branch_name(p.branch);
      else if (c == "d2_0")
        os << format12(p.d2_0);
      else if (c == "d2_pi2")
        os << format12(p.d2_pi2);
      else if (c == "false_discord")
        os << format12(to_unit(p.false_q, spec.unit));
      else if (c == "n_interior_minima")
        os << p.n_interior_minima;
      else
        throw std::invalid_argument("unknown column: " + c);
    }
    os << "\n";
  }
}

BoundarySearchResult find_boundaries(const std::string& family,
                                     const std::map<std::string, double>& fixed,
                                     const Axis& axis) {
  const FamilyCurve curve = make_curve(family, fixed, axis);
  BoundarySearchResult out;
  try {
    out.t_pi2 = bifurcation_pi2(curve);
  } catch (const BracketError& e) {
    out.errors.emplace_back(e.what());
  }
  try {
    out.t_cross = crossing_point(curve);
  } catch (const BracketError& e) {
    out.errors.emplace_back(e.what());
  }
  try {
    out.t_0 = bifurcation_0(curve);
  } catch (const BracketError& e) {
    out.errors.emplace_back(e.what());
  }
  return out;
}

VolumeReport estimate_volume(SampleSpace space, std::uint64_t samples,
                             std::uint64_t seed, int jobs) {
  if (samples < 1)
    throw std::invalid_argument("estimate_volume: samples must be >= 1");

  constexpr std::uint64_t kChunk = 1 << 16;
  const std::uint64_t n_chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::array<std::uint64_t, 3>> per_chunk(n_chunks);

  // Each chunk owns an independently seeded generator, so the tally is
  // identical for any worker count.
  parallel_for(n_chunks, jobs, [&](std::size_t chunk) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(chunk + 1)));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const std::uint64_t count =
        std::min<std::uint64_t>(kChunk, samples - chunk * kChunk);
    std::uint64_t hits = 0, q0_hits = 0, qpi2_hits = 0;
    if (space == SampleSpace::Hypercube5) {
      for (std::uint64_t i = 0; i < count; ++i) {
        const double s1 = unif(rng), s2 = unif(rng);
        const double c1 = unif(rng), c2 = unif(rng), c3 = unif(rng);
        if (sq(1.0 - c3) >= sq(s1 - s2) + sq(c1 + c2) &&
            sq(1.0 + c3) >= sq(s1 + s2) + sq(c1 - c2))
          ++hits;
      }
    } else {
      for (std::uint64_t i = 0; i < count; ++i) {
        const double c1 = unif(rng), c2 = unif(rng), c3 = unif(rng);
        if (std::abs(c1 + c2) > 1.0 - c3 || std::abs(c1 - c2) > 1.0 + c3)
          continue;
        ++hits;
        if (std::abs(c3) >= std::max(std::abs(c1), std::abs(c2)))
          ++q0_hits;
        else
          ++qpi2_hits;
      }
    }
    per_chunk[chunk] = {hits, q0_hits, qpi2_hits};
  });

  VolumeReport report;
  report.space = space;
  report.samples = samples;
  report.seed = seed;
  for (const auto& c : per_chunk) {
    report.hits += c[0];
    report.q0_hits += c[1];
    report.qpi2_hits += c[2];
  }
  report.fraction = static_cast<double>(report.hits) / samples;
  report.stderr_ =
      std::sqrt(report.fraction * (1.0 - report.fraction) / samples);
  return report;
}

RealXState parse_state_json(const std::string& text) {
  const json j = json::parse(text);
  const bool matrix_form = j.contains("a");
  const bool bloch_form = j.contains("s1");
  if (matrix_form == bloch_form)
    throw std::invalid_argument(
        "state document must carry exactly one of the matrix and Bloch forms");
  if (bloch_form) {
    return from_bloch(BlochXState{j.at("s1").get<double>(),
                                  j.at("s2").get<double>(),
                                  j.at("c1").get<double>(),
                                  j.at("c2").get<double>(),
                                  j.at("c3").get<double>()});
  }
  ComplexXState s;
  s.a = j.at("a").get<double>();
  s.b = j.at("b").get<double>();
  s.c = j.at("c").get<double>();
  s.d = j.at("d").get<double>();
  s.u_re = j.value("u_re", 0.0);
  s.u_im = j.value("u_im", 0.0);
  s.v_re = j.value("v_re", 0.0);
  s.v_im = j.value("v_im", 0.0);
  return canonicalize(s);
}

std::string state_to_json(const RealXState& s) {
  json j;
  j["a"] = s.a;
  j["b"] = s.b;
  j["c"] = s.c;
  j["d"] = s.d;
  j["u_re"] = s.u;
  j["u_im"] = 0.0;
  j["v_re"] = s.v;
  j["v_im"] = 0.0;
  return j.dump();
}

std::string volume_report_json(const VolumeReport& r) {
  json j;
  j["space"] = space_name(r.space);
  j["samples"] = r.samples;
  j["hits"] = r.hits;
  j["fraction"] = r.fraction;
  j["stderr"] = r.stderr_;
  j["seed"] = r.seed;
  if (r.space == SampleSpace::Tetrahedron3) {
    j["q0_fraction"] = static_cast<double>(r.q0_hits) / r.samples;
    j["qpi2_fraction"] = static_cast<double>(r.qpi2_hits) / r.samples;
  }
  return j.dump(2);
}

std::string boundary_result_json(const BoundarySearchResult& r) {
  json j;
  if (r.t_pi2) j["t_pi2"] = *r.t_pi2;
  if (r.t_cross) j["t_cross"] = *r.t_cross;
  if (r.t_0) j["t_0"] = *r.t_0;
  if (!r.errors.empty()) j["errors"] = r.errors;
  return j.dump(2);
}

std::string discord_result_json(const DiscordResult& r, Unit unit) {
  json j;
  j["unit"] = unit == Unit::Bits ? "bits" : "nats";
  j["q"] = to_unit(r.q, unit);
  j["branch"] = branch_name(r.branch);
  j["theta_opt"] = r.theta_opt;
  j["q0"] = to_unit(r.q0, unit);
  j["q_pi2"] = to_unit(r.q_pi2, unit);
  if (r.q_theta) j["q_theta"] = to_unit(*r.q_theta, unit);
  j["n_interior_minima"] = r.n_interior_minima;
  return j.dump(2);
}

}  // namespace xdiscord
