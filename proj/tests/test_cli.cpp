#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "CLI11.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace hitchin;

namespace {

struct Outcome {
  int status = 0;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string command = std::string(HITCHIN_CLI_PATH) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) o.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("hitchin_test_" + name);
  std::ofstream(path) << content;
  return path;
}

ErrorCode error_of(const std::vector<std::string>& args) {
  try {
    parse_spec(args);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::inconsistent_input;
}

}  // namespace

TEST_CASE("parse_spec maps flags to a RunSpec") {
  const RunSpec a = parse_spec({"--type", "A2", "--lattice", "adjoint", "--genus", "2"});
  CHECK(a.cartan == CartanType::parse("A2"));
  CHECK(a.lattice.kind == LatticeSpec::Kind::adjoint);
  CHECK(a.genus == 2);
  CHECK(a.enumeration_cap == kDefaultEnumerationCap);
  CHECK_FALSE(a.verify);
  CHECK(a.format == OutputFormat::text);

  const RunSpec b = parse_spec({"--type", "B2+A1", "--central-rank", "1", "--genus", "3", "--format", "json"});
  CHECK(b.cartan.central_rank == 1);
  CHECK(b.cartan.components.size() == 2);
  CHECK(b.format == OutputFormat::json);
  CHECK(build_root_datum(b.cartan, b.lattice).h() == 1);
}

TEST_CASE("parse_spec errors name the field") {
  CHECK(error_of({"--type", "A1", "--genus", "1"}) == ErrorCode::invalid_genus);
  CHECK(error_of({"--type", "Q7", "--genus", "2"}) == ErrorCode::invalid_type);
  CHECK(error_of({"--type", "A1", "--lattice", "weird"}) == ErrorCode::invalid_lattice);
  CHECK(error_of({"--type", "A1", "--lattice", "file=/nonexistent/matrix.txt"}) == ErrorCode::invalid_lattice);
  try {
    parse_spec({"--type", "A1", "--genus", "1"});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("genus must be >= 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spec({"--bogus"}), CLI::ParseError);
}

TEST_CASE("group spec grammar") {
  const RunSpec s = parse_group_spec("A2+B3 lattice=sc central=1");
  CHECK(s.cartan.to_string() == "A2+B3");
  CHECK(s.cartan.central_rank == 1);
  CHECK(s.lattice.kind == LatticeSpec::Kind::simply_connected);
  CHECK(parse_group_spec("D4 lattice=adjoint").lattice.kind == LatticeSpec::Kind::adjoint);
  CHECK_THROWS_AS(parse_group_spec("A2 B3"), Error);
  CHECK(parse_spec({"--group", "G2 lattice=adjoint", "--genus", "3"}).genus == 3);
}

TEST_CASE("lattice matrix files") {
  const auto text = parse_lattice_matrix("# SO(4)\n1 1\n2 0\n");
  CHECK(text == RationalMatrix{{Rational(1), Rational(1)}, {Rational(2), Rational(0)}});
  const auto js = parse_lattice_matrix("[[1, 1], [2, \"0\"]]");
  CHECK(js == text);
  CHECK(parse_lattice_matrix("1/2 0\n0 1")[0][0] == Rational(1, 2));

  for (const char* bad : {"1 2\n3", "1 x\n0 1", "[[1, 2], [3]]", "[1, 2]", "[[0.5]]", "", "[[1,"}) {
    INFO(bad);
    try {
      parse_lattice_matrix(bad);
      FAIL("expected invalid_lattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_lattice);
    }
  }

  const auto path = write_temp("so4.txt", "1 1\n2 0\n");
  const RunSpec s = parse_spec({"--type", "A1+A1", "--lattice", "file=" + path.string()});
  CHECK(s.lattice.kind == LatticeSpec::Kind::custom);
  const Report r = run(s);
  CHECK(r.fiber.injective);
  CHECK(r.fiber.reason == InjectivityReason::not_guaranteed);
}

TEST_CASE("config file values are overridden by flags") {
  const auto cfg = write_temp("run.ini", "type=B3\nlattice=adjoint\ngenus=4\nformat=json\n");
  CLI::App app;
  CommandLine cmd;
  configure_app(app, cmd);
  app.parse(std::vector<std::string>{"3", "--genus", cfg.string(), "--config"});
  const RunSpec s = to_run_spec(cmd);
  CHECK(s.cartan.to_string() == "B3");
  CHECK(s.lattice.kind == LatticeSpec::Kind::adjoint);
  CHECK(s.genus == 3);
  CHECK(s.format == OutputFormat::json);
}

TEST_CASE("run: SL(2), PGl(2), E8") {
  const Report sl2 = run(parse_spec({"--type", "A1", "--genus", "2"}));
  CHECK(sl2.dimension.dim_P == 3);
  CHECK(sl2.dimension.dim_M == 3);
  CHECK(sl2.fiber.bound == 1);

  const Report pgl2 = run(parse_spec({"--type", "A1", "--lattice", "adjoint", "--genus", "2"}));
  CHECK(pgl2.dimension.dim_P == 3);
  REQUIRE(pgl2.fiber.pgl2_exact);
  CHECK(pgl2.fiber.pgl2_exact->components == 2);
  CHECK(pgl2.fiber.pgl2_exact->per_component_fiber == 4);
  CHECK(pgl2.fiber.bound == 8);

  const Report e8 = run(parse_spec({"--type", "E8", "--genus", "2"}));
  CHECK(e8.dimension.dim_P == 248);
  CHECK_FALSE(e8.datum.enumerated);
  CHECK_FALSE(e8.dimension.strategy_agreement.has_value());
}

TEST_CASE("json round trip and determinism") {
  for (const char* type : {"A1", "B2", "G2+A1"}) {
    RunSpec s = parse_spec({"--type", type, "--lattice", "adjoint", "--central-rank", "1", "--genus", "3",
                            "--format", "json", "--verify"});
    const Report r = run(s);
    const auto j = to_json(r);
    CHECK(j["schema_version"] == 1);
    CHECK(j["fiber"]["bound"].is_string());
    const Report back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == r);

    Report again = run(s);
    again.elapsed_ms = r.elapsed_ms;
    CHECK(to_json(again).dump() == j.dump());
  }
  // Custom lattices round-trip too.
  RunSpec s;
  s.cartan = CartanType::parse("A1+A1");
  s.lattice = LatticeSpec::custom({{Rational(1), Rational(1)}, {Rational(2), Rational(0)}});
  const Report r = run(s);
  CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
}

TEST_CASE("text report") {
  const std::string t = to_text(run(parse_spec({"--type", "A1", "--lattice", "adjoint"})));
  CHECK(t.find("dim P 3") != std::string::npos);
  CHECK(t.find("2 components, 4 points per component fiber") != std::string::npos);
  CHECK(t.find("bound 8") != std::string::npos);
}

TEST_CASE("sweep presets") {
  const auto grid = sweep_preset("acceptance", RunSpec{});
  CHECK(grid.size() == 12 * 2 * 3);
  CHECK(grid.front().cartan.to_string() == "A1");
  CHECK_THROWS_AS(sweep_preset("nope", RunSpec{}), Error);
}

TEST_CASE("command line binary: exit codes and output") {
  const Outcome ok = run_cli("--type A1 --lattice adjoint --genus 2 --format json --verify");
  CHECK(ok.status == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["dimension"]["dim_P"] == 3);
  CHECK(j["fiber"]["pgl2_exact"]["per_component_fiber"] == "4");

  const Outcome genus = run_cli("--type A1 --genus 1");
  CHECK(genus.status == exit_code(ErrorCode::invalid_genus));
  CHECK(genus.out.find("genus must be >= 2") != std::string::npos);

  const Outcome type = run_cli("--type Z3");
  CHECK(type.status == exit_code(ErrorCode::invalid_type));
  CHECK(type.out.find("type") != std::string::npos);

  const auto bad = write_temp("bad.txt", "1 2\n3\n");
  const Outcome lattice = run_cli("--type A1+A1 --lattice file=" + bad.string());
  CHECK(lattice.status == exit_code(ErrorCode::invalid_lattice));
  CHECK(lattice.out.find("row 1") != std::string::npos);

  const Outcome sweep = run_cli("--sweep small --format json");
  CHECK(sweep.status == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 8);

  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("--unknown-flag").status != 0);
}
