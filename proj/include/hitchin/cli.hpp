#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hitchin/fiber.hpp"
#include "hitchin/prym.hpp"

namespace CLI {
class App;
}

namespace hitchin {

enum class OutputFormat { text, json };

struct RunSpec {
  CartanType cartan;
  LatticeSpec lattice;
  Int genus = 2;
  Int enumeration_cap = kDefaultEnumerationCap;
  bool verify = false;
  OutputFormat format = OutputFormat::text;

  bool operator==(const RunSpec&) const = default;
};

struct OrbitSummary {
  std::size_t component = 0;
  bool long_roots = true;
  Int size = 0;
  RootIndex representative = 0;

  bool operator==(const OrbitSummary&) const = default;
};

struct DatumSummary {
  int rank = 0;
  int semisimple_rank = 0;
  Int dim_G = 0;
  Int num_roots = 0;
  int h = 0;
  Int weyl_order = 1;
  bool enumerated = false;
  std::vector<Int> derived_fundamental_group;
  std::vector<OrbitSummary> orbits;

  bool operator==(const DatumSummary&) const = default;
};

struct Report {
  RunSpec spec;
  DatumSummary datum;
  CoverStats cover;
  DimensionReport dimension;
  FiberReport fiber;
  double elapsed_ms = 0.0;

  bool operator==(const Report&) const = default;
};

inline constexpr int kSchemaVersion = 1;

/// Raw option values as they come off the command line or config file.
struct CommandLine {
  std::string type;
  std::string group;
  std::string lattice = "sc";
  int central_rank = 0;
  Int genus = 2;
  Int max_enumeration = kDefaultEnumerationCap;
  bool verify = false;
  std::string format = "text";
  std::string sweep;
};

/// Registers --type, --group, --lattice, --central-rank, --genus,
/// --max-enumeration, --verify, --format, --sweep and --config on app.
void configure_app(CLI::App& app, CommandLine& cmd);

/// Validates parsed options. Errors name the offending field.
RunSpec to_run_spec(const CommandLine& cmd);

/// Parses a full argument vector (argv[0] excluded) into a RunSpec.
RunSpec parse_spec(const std::vector<std::string>& args);

/// "A2+B3 lattice=sc central=1"
RunSpec parse_group_spec(const std::string& text);

/// "sc", "adjoint" or "file=PATH".
LatticeSpec parse_lattice_option(const std::string& value);

/// Integer (or p/q) matrix, row-major: whitespace-separated plain text, or a
/// JSON array of rows.
RationalMatrix parse_lattice_matrix(const std::string& text);

Report run(const RunSpec& spec);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& report);
std::string render(const Report& report);

/// Named grids of run specs; output order is the listed order.
std::vector<RunSpec> sweep_preset(const std::string& name, const RunSpec& defaults);
std::vector<std::string> sweep_preset_names();

/// Process exit status for a library error.
int exit_code(ErrorCode code);

}  // namespace hitchin
