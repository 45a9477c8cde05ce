#include "esv/sweep.hpp"

#include "esv/channels.hpp"
#include "esv/dynamics.hpp"
#include "esv/measures.hpp"
#include "esv/protocols.hpp"
#include "esv/separability.hpp"
#include "esv/states.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

namespace esv {

namespace {

using std::numbers::pi;

struct CommandInfo {
  Command command;
  std::string_view name;
  int cutoff;
  std::vector<ParameterInfo> parameters;
  std::vector<std::string> outputs;
};

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {Command::eof_surface, "eof-surface", 0,
       {{"s", 1.0, "squeezing"}, {"phi", 0.0, "relative phase"}},
       {"eof"}},
      {Command::ln_thermal, "ln-thermal", 30,
       {{"s", 1.0, "squeezing"}, {"phi", 0.0, "relative phase"}, {"sigma", 2.0, "thermal variance"}},
       {"log_negativity"}},
      {Command::ln_phase, "ln-phase", 30,
       {{"s", 1.0, "squeezing"}, {"phi", 0.0, "relative phase"}, {"sigma", 1.0, "phase variance"}},
       {"log_negativity"}},
      {Command::ent_power, "ent-power", 40,
       {{"s", 1.1, "squeezing"},
        {"phi", 0.0, "relative phase"},
        {"tau", 8.0, "interaction time"},
        {"transmissivity", 1.0, "loss on each input (1 = pure)"}},
       {"entangling_power"}},
      {Command::ent_power_opt, "ent-power-opt", 40,
       {{"s", 1.1, "squeezing"},
        {"phi", 0.0, "relative phase"},
        {"transmissivity", 1.0, "loss on each input (1 = pure)"},
        {"tau_max", 10.0, "largest interaction time"},
        {"tau_steps", 101.0, "interaction-time grid size"}},
       {"tau_best", "entangling_power"}},
      {Command::criteria, "criteria", 40,
       {{"s", 1.0, "squeezing"}, {"phi", 0.0, "relative phase"}},
       {"simon", "duan", "esv_criterion"}},
      {Command::swap, "swap", 20, {{"s", 1.0, "squeezing"}}, {"probability", "fidelity"}},
      {Command::teleport, "teleport", 20,
       {{"s", 1.0, "squeezing"}, {"theta", 0.0, "input cos(theta)|s+> + sin(theta)|s->"}},
       {"probability", "fidelity"}},
      {Command::generate, "generate", 60,
       {{"s", 1.0, "squeezing"}, {"theta", pi / 4, "ancilla cos(theta)|0> + sin(theta)|1>"}},
       {"p_plus_a", "p_minus_a", "p_plus_b", "fidelity_a_b", "fidelity_a_esv_phi0"}},
      {Command::overlap, "overlap", 0,
       {{"delta", 2.0, "|beta - alpha|"}, {"r", 0.5, "squeezing"}},
       {"overlap"}},
  };
  return table;
}

const CommandInfo& info(Command c) {
  for (const auto& i : command_table())
    if (i.command == c) return i;
  throw std::logic_error("unknown command");
}

double parse_number(std::string_view t) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("not a number: '" + std::string(t) + "'");
  return v;
}

using Values = std::map<std::string, double>;

std::vector<double> evaluate(Command c, const Values& v, int cutoff, const TruncationPolicy& policy) {
  auto at = [&v](const char* k) { return v.at(k); };
  switch (c) {
    case Command::eof_surface:
      return {eof_pure(esv_effective_qubits(at("s"), at("phi")))};
    case Command::ln_thermal:
    case Command::ln_phase: {
      NoiseSpec spec;
      if (c == Command::ln_thermal) {
        spec.kind = NoiseKind::thermal;
        spec.sigma_tn = at("sigma");
      } else {
        spec.kind = NoiseKind::phase;
        spec.sigma_pn = at("sigma");
      }
      const DensityMatrix pure(squeezed_vacuum({.s = at("s"), .cutoff = cutoff}, policy));
      const DensityMatrix noisy = apply_noise(pure, spec, policy);
      return {log_negativity(esv_mixed(noisy, noisy, at("phi")))};
    }
    case Command::ent_power:
    case Command::ent_power_opt: {
      const double t = at("transmissivity");
      std::vector<double> taus;
      if (c == Command::ent_power) {
        taus = {at("tau")};
      } else {
        const int n = static_cast<int>(at("tau_steps"));
        if (n < 1) throw std::invalid_argument("tau_steps must be >= 1");
        taus = Range{"tau", 0.0, at("tau_max"), n}.values();
      }
      std::function<double(double)> power;
      if (t >= 1.0) {
        const FockVector psi = esv_pure({.s = at("s"), .phi = at("phi"), .cutoff = cutoff}, policy);
        power = [psi, &policy](double tau) { return entangling_power(psi, tau, policy); };
      } else {
        const DensityMatrix lossy = bs_loss(squeezed_vacuum({.s = at("s"), .cutoff = cutoff}, policy), t, policy);
        const DensityMatrix rho = esv_mixed(lossy, lossy, at("phi"));
        power = [rho, &policy](double tau) { return entangling_power(rho, tau, policy); };
      }
      double best = -1.0, best_tau = 0.0;
      for (double tau : taus) {
        const double e = power(tau);
        if (e > best) best = e, best_tau = tau;
      }
      if (c == Command::ent_power) return {best};
      return {best_tau, best};
    }
    case Command::criteria: {
      const FockVector psi = esv_pure({.s = at("s"), .phi = at("phi"), .cutoff = cutoff}, policy);
      return {simon_det(psi, policy), duan_det(psi, policy), esv_criterion_det(psi, policy)};
    }
    case Command::swap: {
      const auto r = entanglement_swap(at("s"), cutoff, policy);
      return {r.probability, r.fidelity};
    }
    case Command::teleport: {
      const QubitAmplitudes q{std::cos(at("theta")), std::sin(at("theta"))};
      const auto r = teleport(q, at("s"), cutoff, policy);
      return {r.probability, r.fidelity};
    }
    case Command::generate: {
      const QubitAmplitudes q{std::cos(at("theta")), std::sin(at("theta"))};
      const auto ap = generate_scheme_a(at("s"), q, Sign::plus, cutoff, {pi / 2}, policy);
      const auto am = generate_scheme_a(at("s"), q, Sign::minus, cutoff, {pi / 2}, policy);
      const auto bp = generate_scheme_b(at("s"), q, Sign::plus, cutoff, {pi}, policy);
      const FockVector target = esv_pure({.s = at("s"), .phi = 0.0, .cutoff = cutoff}, policy);
      return {ap.probability, am.probability, bp.probability, fidelity(ap.state, bp.state),
              fidelity(ap.state, target)};
    }
    case Command::overlap:
      return {displaced_overlap(0.0, at("delta"), at("r"))};
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& i : command_table())
    if (i.name == name) return i.command;
  return std::nullopt;
}

std::string_view command_name(Command c) { return info(c).name; }
std::vector<ParameterInfo> command_parameters(Command c) { return info(c).parameters; }
std::vector<std::string> command_outputs(Command c) { return info(c).outputs; }
int default_cutoff(Command c) { return info(c).cutoff; }

std::vector<double> Range::values() const {
  if (steps < 1) throw std::invalid_argument("range '" + name + "': steps must be >= 1");
  if (steps == 1) return {min};
  std::vector<double> out(steps);
  for (int k = 0; k < steps; ++k) out[k] = k + 1 == steps ? max : min + (max - min) * k / (steps - 1);
  return out;
}

double parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  double den = 1.0;
  if (slash != std::string_view::npos) den = parse_number(text.substr(slash + 1));
  double value;
  if (num.size() >= 2 && num.substr(num.size() - 2) == "pi") {
    num.remove_suffix(2);
    if (!num.empty() && num.back() == '*') num.remove_suffix(1);
    if (num == "-") value = -pi;
    else value = (num.empty() ? 1.0 : parse_number(num)) * pi;
  } else {
    value = parse_number(num);
  }
  if (den == 0.0) throw std::invalid_argument("division by zero in '" + std::string(text) + "'");
  return value / den;
}

Range parse_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw std::invalid_argument("expected name=value or name=min..max:steps, got '" + std::string(text) + "'");
  Range r;
  r.name = std::string(text.substr(0, eq));
  const std::string_view body = text.substr(eq + 1);
  const auto dots = body.find("..");
  if (dots == std::string_view::npos) {
    r.min = r.max = parse_scalar(body);
    r.steps = 1;
    return r;
  }
  const auto colon = body.find(':', dots);
  if (colon == std::string_view::npos)
    throw std::invalid_argument("range '" + r.name + "' needs a step count (min..max:steps)");
  r.min = parse_scalar(body.substr(0, dots));
  r.max = parse_scalar(body.substr(dots + 2, colon - dots - 2));
  const double steps = parse_number(body.substr(colon + 1));
  if (steps != std::floor(steps) || steps < 1)
    throw std::invalid_argument("range '" + r.name + "': steps must be a positive integer");
  r.steps = static_cast<int>(steps);
  return r;
}

SweepResult run(const SweepConfig& config) {
  const auto& ci = info(config.command);
  std::vector<Range> axes;
  for (const auto& p : ci.parameters) axes.push_back({p.name, p.fallback, p.fallback, 1});
  for (const auto& r : config.ranges) {
    auto it = std::find_if(axes.begin(), axes.end(), [&](const Range& a) { return a.name == r.name; });
    if (it == axes.end())
      throw std::invalid_argument("command '" + std::string(ci.name) + "' has no parameter '" + r.name + "'");
    if (r.steps < 1) throw std::invalid_argument("range '" + r.name + "': steps must be >= 1");
    *it = r;
  }
  const int cutoff = config.cutoff > 0 ? config.cutoff : ci.cutoff;
  if (config.cutoff < 0) throw std::invalid_argument("cutoff must be positive");

  std::vector<std::vector<double>> grids;
  std::size_t total = 1;
  for (const auto& a : axes) {
    grids.push_back(a.values());
    total *= grids.back().size();
  }

  SweepResult result;
  for (const auto& a : axes) result.header.push_back(a.name);
  for (const auto& o : ci.outputs) result.header.push_back(o);
  result.rows.resize(total);

  std::mutex warn_mutex;
  bool warned = false;
  TruncationPolicy policy;
  policy.strict = config.strict;
  policy.on_warning = [&](std::string_view msg) {
    std::lock_guard lock(warn_mutex);
    if (!warned) std::cerr << "warning,truncation," << msg << '\n';
    warned = true;
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= total) return;
      {
        std::lock_guard lock(fail_mutex);
        if (failure) return;
      }
      try {
        Values values;
        std::vector<double> row;
        std::size_t rem = k;
        std::vector<double> point(axes.size());
        for (std::size_t d = axes.size(); d-- > 0;) {
          point[d] = grids[d][rem % grids[d].size()];
          rem /= grids[d].size();
        }
        for (std::size_t d = 0; d < axes.size(); ++d) values[axes[d].name] = point[d];
        row = point;
        for (double x : evaluate(config.command, values, cutoff, policy)) row.push_back(x);
        result.rows[k] = std::move(row);
      } catch (...) {
        std::lock_guard lock(fail_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, total));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

void emit_csv(const SweepResult& result, std::ostream& out) {
  for (std::size_t k = 0; k < result.header.size(); ++k) out << (k ? "," : "") << result.header[k];
  out << '\n';
  char buf[64];
  for (const auto& row : result.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.12g", row[k]);
      out << (k ? "," : "") << buf;
    }
    out << '\n';
  }
}

void emit_csv(const SweepResult& result, const std::string& path) {
  if (path.empty() || path == "-") {
    emit_csv(result, std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_csv(result, f);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace esv
