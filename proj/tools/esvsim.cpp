// esvsim: parameter sweeps over the ESV library, written as CSV.
//
//   esvsim <command> [name=value | name=min..max:steps ...] [--cutoff N] [--strict] [--out FILE]
//
// Exit codes: 0 success, 2 usage error, 3 numeric guard violation, 1 I/O error.

#include "esv/fock.hpp"
#include "esv/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::string describe_commands() {
  std::ostringstream os;
  os << "commands:\n";
  for (auto c : {esv::Command::eof_surface, esv::Command::ln_thermal, esv::Command::ln_phase,
                 esv::Command::ent_power, esv::Command::ent_power_opt, esv::Command::criteria,
                 esv::Command::swap, esv::Command::teleport, esv::Command::generate,
                 esv::Command::overlap}) {
    os << "  " << esv::command_name(c) << "  (";
    bool first = true;
    for (const auto& p : esv::command_parameters(c)) {
      os << (first ? "" : ", ") << p.name << "=" << p.fallback;
      first = false;
    }
    os << ") -> ";
    first = true;
    for (const auto& o : esv::command_outputs(c)) {
      os << (first ? "" : ",") << o;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

int fail(int code, std::string_view kind, std::string_view msg) {
  std::cerr << "error," << kind << "," << msg << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled squeezed vacuum simulations: parameter sweeps to CSV"};
  app.footer(describe_commands());
  std::string command;
  std::vector<std::string> params;
  esv::SweepConfig config;
  app.add_option("command", command, "sweep to run")->required();
  app.add_option("params", params, "name=value or name=min..max:steps (values accept pi, e.g. 2pi, pi/2)");
  app.add_option("--cutoff", config.cutoff, "Fock cutoff per mode (default depends on the command)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", config.strict, "turn truncation warnings into errors");
  app.add_option("--out", config.out, "output CSV path (default: stdout)");
  app.add_option("--threads", config.threads, "worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto parsed = esv::parse_command(command);
    if (!parsed) return fail(2, "usage", "unknown command '" + command + "'");
    config.command = *parsed;
    for (const auto& p : params) config.ranges.push_back(esv::parse_range(p));
    const auto result = esv::run(config);
    esv::emit_csv(result, config.out);
  } catch (const std::logic_error& e) {
    return fail(2, "usage", e.what());
  } catch (const esv::TruncationError& e) {
    return fail(3, "truncation", e.what());
  } catch (const esv::GuardError& e) {
    return fail(3, "numeric", e.what());
  } catch (const std::exception& e) {
    return fail(1, "io", e.what());
  }
  return 0;
}
