// Command-line front end: discord of single states, family sweeps, phase
// diagrams, subdomain boundaries, and Monte-Carlo volume estimates.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xdiscord/entropy.hpp"
#include "xdiscord/models.hpp"
#include "xdiscord/scan.hpp"

namespace {

using namespace xdiscord;

struct CommonOpts {
  std::string unit = "bits";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct StateOpts {
  std::string state_file;
  std::string model;
  std::map<std::string, std::optional<double>> params;
};

const std::vector<std::string> kParamNames = {
    "epsilon", "m",  "s1", "s2", "c1",     "c2",     "c3", "p",  "Jx",
    "Jy",      "Jz", "B1", "B2", "T",      "D",      "B0", "gamma1",
    "gamma2",  "a",  "b",  "c",  "d",      "u_re",   "u_im", "v_re", "v_im"};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--unit", o.unit, "Output unit for discord values")
      ->check(CLI::IsMember({"bits", "nats"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output path (default: standard output)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
}

void add_state_opts(CLI::App* cmd, StateOpts& s) {
  cmd->add_option("--state", s.state_file, "JSON state document");
  cmd->add_option("--model", s.model,
                  "Model family: horodecki|phase-flip|xyz|dipolar|bell");
  for (const auto& name : kParamNames)
    cmd->add_option("--" + name, s.params[name]);
}

std::map<std::string, double> present_params(const StateOpts& s) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : s.params)
    if (v) out[k] = *v;
  return out;
}

RealXState resolve_state(const StateOpts& s) {
  if (!s.state_file.empty()) {
    std::ifstream in(s.state_file);
    if (!in) throw std::runtime_error("cannot open " + s.state_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
  }
  auto params = present_params(s);
  if (!s.model.empty()) return make_state(s.model, params);
  if (params.count("s1") && params.count("c3") && !params.count("a"))
    return from_bloch(BlochXState{params.at("s1"), params.at("s2"),
                                  params.at("c1"), params.at("c2"),
                                  params.at("c3")});
  if (params.count("a"))
    return canonicalize(ComplexXState{
        params.at("a"), params.at("b"), params.at("c"), params.at("d"),
        params.count("u_re") ? params.at("u_re") : 0.0,
        params.count("u_im") ? params.at("u_im") : 0.0,
        params.count("v_re") ? params.at("v_re") : 0.0,
        params.count("v_im") ? params.at("v_im") : 0.0});
  throw std::runtime_error(
      "no state given: use --state, --model, or inline matrix/Bloch flags");
}

Unit parse_unit(const CommonOpts& o) {
  return o.unit == "nats" ? Unit::Nats : Unit::Bits;
}

Axis parse_axis(const std::string& text) {
  // name=lo:hi:steps
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("axis must look like name=lo:hi:steps");
  Axis ax;
  ax.name = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  char colon1 = 0, colon2 = 0;
  std::istringstream is(rest);
  if (!(is >> ax.lo >> colon1 >> ax.hi >> colon2 >> ax.steps) ||
      colon1 != ':' || colon2 != ':')
    throw std::runtime_error("axis must look like name=lo:hi:steps");
  return ax;
}

int with_output(const CommonOpts& o, const std::function<void(std::ostream&)>& fn) {
  if (o.out.empty()) {
    fn(std::cout);
    return 0;
  }
  std::ofstream out(o.out);
  if (!out) throw std::runtime_error("cannot open " + o.out);
  fn(out);
  return 0;
}

int run_discord(const CommonOpts& common, const StateOpts& state_opts) {
  const RealXState s = resolve_state(state_opts);
  const ValidityReport report = validate(s);
  if (!report.valid) {
    std::cerr << "invalid state: " << report.summary() << "\n";
    return 2;
  }
  const DiscordResult r = discord(s);
  const Unit unit = parse_unit(common);
  return with_output(common, [&](std::ostream& os) {
    if (common.format == "json") {
      os << discord_result_json(r, unit) << "\n";
      return;
    }
    const char* u = unit == Unit::Bits ? "bits" : "nats";
    os << "q         = " << to_unit(r.q, unit) << " " << u << "\n"
       << "branch    = " << branch_name(r.branch) << "\n"
       << "theta_opt = " << r.theta_opt << " rad\n"
       << "q0        = " << to_unit(r.q0, unit) << " " << u << "\n"
       << "q_pi2     = " << to_unit(r.q_pi2, unit) << " " << u << "\n";
    if (r.q_theta)
      os << "q_theta   = " << to_unit(*r.q_theta, unit) << " " << u << "\n";
    os << "d2_0 sign   = " << cond_entropy_d2_at_0(s).sign() << "\n"
       << "d2_pi2 sign = " << cond_entropy_d2_at_pi2(s).sign() << "\n";
  });
}

int run_profile(const CommonOpts& common, const StateOpts& state_opts,
                int steps) {
  const RealXState s = resolve_state(state_opts);
  const ValidityReport report = validate(s);
  if (!report.valid) {
    std::cerr << "invalid state: " << report.summary() << "\n";
    return 2;
  }
  const Unit unit = parse_unit(common);
  return with_output(common, [&](std::ostream& os) {
    os << "# unit=" << (unit == Unit::Bits ? "bits" : "nats") << "\n";
    os << "theta,s_cond,s_cond_d1\n";
    char buf[128];
    for (int i = 0; i < steps; ++i) {
      const double theta = i * (3.14159265358979323846 / 2.0) / (steps - 1);
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", theta,
                    to_unit(cond_entropy(s, theta), unit),
                    to_unit(cond_entropy_d1(s, theta), unit));
      os << buf;
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord of two-qubit X states"};
  app.require_subcommand(1);

  CommonOpts common;
  StateOpts state_opts;
  std::vector<std::string> axis_texts;
  std::vector<std::string> columns;
  int profile_steps = 181;
  bool refine = false;
  std::string space = "hypercube5";
  std::uint64_t samples = 1000000;

  auto* cmd_discord = app.add_subcommand("discord", "Discord of one state");
  auto* cmd_profile =
      app.add_subcommand("profile", "Conditional-entropy profile S_cond(theta)");
  auto* cmd_sweep = app.add_subcommand("sweep", "One-parameter family sweep");
  auto* cmd_boundaries = app.add_subcommand(
      "boundaries", "Crossing and bifurcation points along a family");
  auto* cmd_phase = app.add_subcommand("phase-diagram",
                                       "Two-axis subdomain classification");
  auto* cmd_volume =
      app.add_subcommand("volume", "Monte-Carlo volume of the state domain");

  for (auto* cmd : {cmd_discord, cmd_profile, cmd_sweep, cmd_boundaries,
                    cmd_phase, cmd_volume})
    add_common(cmd, common);
  for (auto* cmd : {cmd_discord, cmd_profile, cmd_sweep, cmd_boundaries,
                    cmd_phase})
    add_state_opts(cmd, state_opts);

  cmd_profile->add_option("--steps", profile_steps, "Grid points over [0, pi/2]")
      ->capture_default_str();
  for (auto* cmd : {cmd_sweep, cmd_boundaries, cmd_phase})
    cmd->add_option("--axis", axis_texts, "Axis as name=lo:hi:steps");
  cmd_sweep->add_option("--columns", columns, "Columns to emit");
  cmd_phase->add_flag("--refine", refine,
                      "Root-refine the subdomain boundaries per row");
  cmd_volume->add_option("--space", space, "Sample space")
      ->check(CLI::IsMember({"hypercube5", "tetrahedron3"}))
      ->capture_default_str();
  cmd_volume->add_option("--samples", samples, "Sample count")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_discord->parsed()) return run_discord(common, state_opts);
    if (cmd_profile->parsed())
      return run_profile(common, state_opts, profile_steps);

    const Unit unit = parse_unit(common);
    if (cmd_sweep->parsed() || cmd_phase->parsed()) {
      SweepSpec spec;
      spec.family = state_opts.model;
      if (spec.family.empty()) throw std::runtime_error("--model is required");
      spec.fixed = present_params(state_opts);
      for (const auto& t : axis_texts) spec.axes.push_back(parse_axis(t));
      for (const auto& ax : spec.axes) spec.fixed.erase(ax.name);
      spec.unit = unit;
      if (cmd_phase->parsed()) {
        if (spec.axes.size() != 2)
          throw std::runtime_error("phase-diagram needs exactly two --axis");
        spec.columns = {"branch"};
      } else {
        if (spec.axes.size() != 1)
          throw std::runtime_error("sweep needs exactly one --axis");
        spec.columns = columns;
      }
      const SweepResult result = run_sweep(spec, common.jobs);
      return with_output(common, [&](std::ostream& os) {
        write_sweep_csv(os, result);
        if (cmd_phase->parsed() && refine) {
          const Axis& ay = spec.axes[1];
          for (int j = 0; j < ay.steps; ++j) {
            const double y = ay.lo + (ay.hi - ay.lo) * j / (ay.steps - 1);
            auto fixed = spec.fixed;
            fixed[ay.name] = y;
            const BoundarySearchResult b =
                find_boundaries(spec.family, fixed, spec.axes[0]);
            os << "# row " << ay.name << "=" << y;
            if (b.t_pi2) os << " t_pi2=" << *b.t_pi2;
            if (b.t_cross) os << " t_cross=" << *b.t_cross;
            if (b.t_0) os << " t_0=" << *b.t_0;
            os << "\n";
          }
        }
      });
    }
    if (cmd_boundaries->parsed()) {
      if (state_opts.model.empty())
        throw std::runtime_error("--model is required");
      if (axis_texts.size() != 1)
        throw std::runtime_error("boundaries needs exactly one --axis");
      const Axis axis = parse_axis(axis_texts[0]);
      auto fixed = present_params(state_opts);
      fixed.erase(axis.name);
      const BoundarySearchResult b =
          find_boundaries(state_opts.model, fixed, axis);
      return with_output(common, [&](std::ostream& os) {
        os << boundary_result_json(b) << "\n";
      });
    }
    if (cmd_volume->parsed()) {
      const SampleSpace sp = space == "hypercube5" ? SampleSpace::Hypercube5
                                                   : SampleSpace::Tetrahedron3;
      const VolumeReport report =
          estimate_volume(sp, samples, common.seed, common.jobs);
      return with_output(common, [&](std::ostream& os) {
        os << volume_report_json(report) << "\n";
      });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
