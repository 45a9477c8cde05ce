// Parameter sweeps over the library operations, emitted as CSV.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace esv {

enum class Command {
  eof_surface,
  ln_thermal,
  ln_phase,
  ent_power,
  ent_power_opt,
  criteria,
  swap,
  teleport,
  generate,
  overlap,
};

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

/// Parameter name, default value and meaning for each command.
struct ParameterInfo {
  std::string name;
  double fallback;
  std::string help;
};
std::vector<ParameterInfo> command_parameters(Command c);
std::vector<std::string> command_outputs(Command c);
int default_cutoff(Command c);

/// Inclusive linear grid; steps = 1 means the single value `min`.
struct Range {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> values() const;
};

/// Accepts a number, optionally scaled by pi: "0.5", "pi", "2pi", "2*pi", "pi/2", "3pi/4".
double parse_scalar(std::string_view text);
/// "name=min..max:steps" or "name=value". Throws std::invalid_argument.
Range parse_range(std::string_view text);

struct SweepConfig {
  Command command = Command::eof_surface;
  std::vector<Range> ranges;  // unspecified parameters take their defaults
  int cutoff = 0;             // 0 selects the command default
  bool strict = false;
  std::string out;            // empty or "-" means stdout
  unsigned threads = 0;       // 0 selects the hardware concurrency
};

struct SweepResult {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Evaluates every grid point (row-major over the command's parameters, last
/// parameter fastest). Throws std::invalid_argument for bad configurations and
/// GuardError subclasses for numeric guard violations.
SweepResult run(const SweepConfig& config);

void emit_csv(const SweepResult& result, std::ostream& out);
void emit_csv(const SweepResult& result, const std::string& path);

}  // namespace esv
