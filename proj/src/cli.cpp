#include "hitchin/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

namespace hitchin {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Rational parse_rational(const std::string& token, std::size_t row, std::size_t col) {
  const auto fail = [&] {
    return Error(ErrorCode::invalid_lattice, "malformed lattice matrix: entry '" + token + "' at row " +
                                                 std::to_string(row) + ", column " + std::to_string(col) +
                                                 " is not an integer or p/q");
  };
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != s.size()) throw fail();
    return v;
  };
  const auto slash = token.find('/');
  if (slash == std::string::npos) return Rational(to_int(token));
  const Int den = to_int(token.substr(slash + 1));
  if (den == 0) throw fail();
  return Rational(to_int(token.substr(0, slash)), den);
}

void check_square(const RationalMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::invalid_lattice, "malformed lattice matrix: no rows");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].size() != m.size())
      throw Error(ErrorCode::invalid_lattice, "malformed lattice matrix: row " + std::to_string(i) + " has " +
                                                  std::to_string(m[i].size()) + " entries, expected " +
                                                  std::to_string(m.size()));
}

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_name(OutputFormat f) { return f == OutputFormat::json ? "json" : "text"; }

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  throw Error(ErrorCode::inconsistent_input, "format: expected text or json, got '" + s + "'");
}

std::string big_string(const BigInt& b) { return b.str(); }

BigInt parse_big(const json& j) { return BigInt(j.get<std::string>()); }

ordered_json lattice_json(const LatticeSpec& lattice) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : lattice.custom_basis) {
    ordered_json r = ordered_json::array();
    for (const Rational& x : row) {
      if (x.denominator() == 1) r.push_back(x.numerator());
      else r.push_back(rational_string(x));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string join(const std::vector<Int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::string describe(const DimensionReport& r) {
  return "M=" + std::to_string(r.M) + " <B,L>=" + std::to_string(r.trivial_lefschetz) +
         " <S_i,L>=" + join(r.component_lefschetz) + " <B,H1>=" + std::to_string(r.trivial_h1) +
         " <S_i,H1>=" + join(r.component_h1);
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_type: return 3;
    case ErrorCode::invalid_genus: return 4;
    case ErrorCode::invalid_lattice: return 5;
    case ErrorCode::verification_failed: return 6;
    case ErrorCode::enumeration_unavailable:
    case ErrorCode::strategy_unavailable: return 7;
    default: return 1;
  }
}

void configure_app(CLI::App& app, CommandLine& cmd) {
  app.description("Invariants of the abelianized Hitchin system for a split reductive group.");
  app.add_option("--type", cmd.type, "Dynkin type, e.g. A2+B3; T for a torus");
  app.add_option("--group", cmd.group, "Group spec, e.g. \"A2+B3 lattice=sc central=1\"");
  app.add_option("--lattice", cmd.lattice, "sc | adjoint | file=PATH")->capture_default_str();
  app.add_option("--central-rank", cmd.central_rank, "Rank of the central torus")->capture_default_str();
  app.add_option("--genus", cmd.genus, "Genus of the base curve (>= 2)")->capture_default_str();
  app.add_option("--max-enumeration", cmd.max_enumeration, "Largest |W| that is enumerated")->capture_default_str();
  app.add_flag("--verify", cmd.verify, "Fail unless the enumerated and analytic strategies agree");
  app.add_option("--format", cmd.format, "text | json")->capture_default_str();
  app.add_option("--sweep", cmd.sweep, "Run a built-in grid, one report per line");
  app.set_config("--config", "", "Flat key=value file with the same keys as the flags");
}

RunSpec to_run_spec(const CommandLine& cmd) {
  RunSpec spec;
  if (!cmd.group.empty()) {
    if (!cmd.type.empty()) throw Error(ErrorCode::invalid_type, "type: give either --type or --group, not both");
    spec = parse_group_spec(cmd.group);
  } else {
    if (cmd.type.empty() && cmd.sweep.empty()) throw Error(ErrorCode::invalid_type, "type: --type is required");
    if (!cmd.type.empty()) spec.cartan = CartanType::parse(cmd.type, cmd.central_rank);
    spec.lattice = parse_lattice_option(cmd.lattice);
  }
  spec.genus = cmd.genus;
  require_genus(spec.genus);
  if (cmd.max_enumeration < 1)
    throw Error(ErrorCode::inconsistent_input, "max-enumeration: must be >= 1");
  spec.enumeration_cap = cmd.max_enumeration;
  spec.verify = cmd.verify;
  spec.format = parse_format(cmd.format);
  return spec;
}

RunSpec parse_spec(const std::vector<std::string>& args) {
  CLI::App app;
  CommandLine cmd;
  configure_app(app, cmd);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
  return to_run_spec(cmd);
}

RunSpec parse_group_spec(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::string type_text;
  std::string lattice = "sc";
  int central = 0;
  while (in >> token) {
    if (token.rfind("lattice=", 0) == 0) {
      lattice = token.substr(8);
    } else if (token.rfind("central=", 0) == 0) {
      try {
        central = std::stoi(token.substr(8));
      } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_type, "central: not an integer in '" + token + "'");
      }
    } else if (type_text.empty()) {
      type_text = token;
    } else {
      throw Error(ErrorCode::invalid_type, "group: unexpected token '" + token + "'");
    }
  }
  RunSpec spec;
  spec.cartan = CartanType::parse(type_text, central);
  spec.lattice = parse_lattice_option(lattice);
  return spec;
}

LatticeSpec parse_lattice_option(const std::string& value) {
  if (value == "sc" || value == "simply_connected") return LatticeSpec::simply_connected();
  if (value == "adjoint" || value == "ad") return LatticeSpec::adjoint();
  if (value.rfind("file=", 0) == 0) {
    const std::string path = value.substr(5);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_lattice, "lattice: cannot read matrix file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return LatticeSpec::custom(parse_lattice_matrix(buf.str()));
  }
  throw Error(ErrorCode::invalid_lattice, "lattice: expected sc, adjoint or file=PATH, got '" + value + "'");
}

RationalMatrix parse_lattice_matrix(const std::string& text) {
  RationalMatrix m;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::invalid_lattice, std::string("malformed lattice matrix: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorCode::invalid_lattice, "malformed lattice matrix: expected an array of rows");
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array())
        throw Error(ErrorCode::invalid_lattice, "malformed lattice matrix: row " + std::to_string(i) + " is not an array");
      std::vector<Rational> row;
      for (std::size_t k = 0; k < j[i].size(); ++k) {
        const json& e = j[i][k];
        if (e.is_number_integer()) row.emplace_back(e.get<Int>());
        else if (e.is_string()) row.push_back(parse_rational(e.get<std::string>(), i, k));
        else row.push_back(parse_rational(e.dump(), i, k));
      }
      m.push_back(std::move(row));
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<Rational> row;
      std::string tok;
      while (ls >> tok) row.push_back(parse_rational(tok, m.size(), row.size()));
      if (!row.empty()) m.push_back(std::move(row));
    }
  }
  check_square(m);
  return m;
}

Report run(const RunSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  require_genus(spec.genus);
  auto datum = std::make_shared<const RootDatum>(build_root_datum(spec.cartan, spec.lattice));
  const WeylGroup group = generate(datum, spec.enumeration_cap);

  Report r;
  r.spec = spec;
  r.spec.cartan = datum->type();
  r.datum.rank = datum->rank();
  r.datum.semisimple_rank = datum->semisimple_rank();
  r.datum.dim_G = datum->dim_G();
  r.datum.num_roots = static_cast<Int>(datum->num_roots());
  r.datum.h = datum->h();
  r.datum.weyl_order = group.order();
  r.datum.enumerated = group.enumerated();
  r.datum.derived_fundamental_group = derived_fundamental_group(*datum);
  for (const RootOrbit& o : group.root_orbits())
    r.datum.orbits.push_back({o.component, o.long_roots, static_cast<Int>(o.size()), o.representative});

  r.cover = cover_stats(*datum, group, spec.genus);
  r.dimension = prym_dimension_analytic(*datum, group, spec.genus);
  if (group.enumerated()) {
    const DimensionReport enumerated = prym_dimension_enumerated(*datum, group, spec.genus);
    const bool agree = enumerated.M == r.dimension.M && enumerated.trivial_lefschetz == r.dimension.trivial_lefschetz &&
                       enumerated.component_lefschetz == r.dimension.component_lefschetz &&
                       enumerated.trivial_h1 == r.dimension.trivial_h1 &&
                       enumerated.component_h1 == r.dimension.component_h1;
    r.dimension.strategy_agreement = agree;
    if (spec.verify && !agree)
      throw Error(ErrorCode::verification_failed, "strategies disagree: analytic " + describe(r.dimension) +
                                                      "; enumerated " + describe(enumerated));
  }
  r.fiber = fiber_bound(*datum, group, spec.genus);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;

  ordered_json spec;
  spec["type"] = r.spec.cartan.to_string();
  spec["central_rank"] = r.spec.cartan.central_rank;
  spec["lattice"] = to_string(r.spec.lattice.kind);
  if (r.spec.lattice.kind == LatticeSpec::Kind::custom) spec["custom_basis"] = lattice_json(r.spec.lattice);
  spec["genus"] = r.spec.genus;
  spec["enumeration_cap"] = r.spec.enumeration_cap;
  spec["verify"] = r.spec.verify;
  spec["format"] = format_name(r.spec.format);
  j["spec"] = spec;

  ordered_json datum;
  datum["rank"] = r.datum.rank;
  datum["semisimple_rank"] = r.datum.semisimple_rank;
  datum["dim_G"] = r.datum.dim_G;
  datum["num_roots"] = r.datum.num_roots;
  datum["h"] = r.datum.h;
  datum["weyl_order"] = r.datum.weyl_order;
  datum["enumerated"] = r.datum.enumerated;
  datum["derived_fundamental_group"] = r.datum.derived_fundamental_group;
  ordered_json orbits = ordered_json::array();
  for (const auto& o : r.datum.orbits)
    orbits.push_back(ordered_json{{"component", o.component},
                                  {"length", o.long_roots ? "long" : "short"},
                                  {"size", o.size},
                                  {"representative", o.representative}});
  datum["orbits"] = orbits;
  j["datum"] = datum;

  ordered_json cover;
  cover["genus"] = r.cover.genus;
  cover["deg_K"] = r.cover.deg_K;
  cover["ram_count"] = r.cover.ram_count;
  cover["n"] = r.cover.n;
  cover["branch_fiber_size"] = r.cover.branch_fiber_size;
  cover["d_alpha_size"] = r.cover.d_alpha_size;
  cover["spectral_genus"] = r.cover.spectral_genus;
  cover["d"] = r.cover.d;
  cover["weyl_order"] = r.cover.weyl_order;
  cover["num_roots"] = r.cover.num_roots;
  j["cover"] = cover;

  ordered_json dim;
  dim["strategy"] = r.dimension.strategy == Strategy::enumerated ? "enumerated" : "analytic";
  dim["M"] = r.dimension.M;
  dim["dim_P"] = r.dimension.dim_P;
  dim["dim_M"] = r.dimension.dim_M;
  dim["strategy_agreement"] =
      r.dimension.strategy_agreement ? ordered_json(*r.dimension.strategy_agreement) : ordered_json(nullptr);
  dim["trivial_lefschetz"] = r.dimension.trivial_lefschetz;
  dim["component_lefschetz"] = r.dimension.component_lefschetz;
  dim["trivial_h1"] = r.dimension.trivial_h1;
  dim["component_h1"] = r.dimension.component_h1;
  j["dimension"] = dim;

  ordered_json fiber;
  fiber["injective"] = r.fiber.injective;
  fiber["reason"] = to_string(r.fiber.reason);
  fiber["A"] = r.fiber.A;
  fiber["a"] = r.fiber.a;
  fiber["d"] = r.fiber.d;
  fiber["bound"] = big_string(r.fiber.bound);
  if (r.fiber.pgl2_exact) {
    const auto& p = *r.fiber.pgl2_exact;
    fiber["pgl2_exact"] = ordered_json{{"components", p.components},
                                       {"d", p.d},
                                       {"per_component_fiber", big_string(p.per_component_fiber)},
                                       {"lambda_quotient_order", big_string(p.lambda_quotient_order)}};
  } else {
    fiber["pgl2_exact"] = nullptr;
  }
  j["fiber"] = fiber;

  j["timing"] = ordered_json{{"elapsed_ms", r.elapsed_ms}};
  return j;
}

Report report_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw Error(ErrorCode::inconsistent_input, "unsupported schema_version");
  Report r;
  const json& spec = j.at("spec");
  r.spec.cartan = CartanType::parse(spec.at("type").get<std::string>(), spec.at("central_rank").get<int>());
  const auto kind = spec.at("lattice").get<std::string>();
  if (kind == "custom") {
    RationalMatrix m;
    for (const auto& row : spec.at("custom_basis")) {
      std::vector<Rational> out;
      for (const auto& e : row)
        out.push_back(e.is_string() ? parse_rational(e.get<std::string>(), m.size(), out.size()) : Rational(e.get<Int>()));
      m.push_back(std::move(out));
    }
    r.spec.lattice = LatticeSpec::custom(std::move(m));
  } else {
    r.spec.lattice = parse_lattice_option(kind);
  }
  r.spec.genus = spec.at("genus").get<Int>();
  r.spec.enumeration_cap = spec.at("enumeration_cap").get<Int>();
  r.spec.verify = spec.at("verify").get<bool>();
  r.spec.format = parse_format(spec.at("format").get<std::string>());

  const json& datum = j.at("datum");
  r.datum.rank = datum.at("rank").get<int>();
  r.datum.semisimple_rank = datum.at("semisimple_rank").get<int>();
  r.datum.dim_G = datum.at("dim_G").get<Int>();
  r.datum.num_roots = datum.at("num_roots").get<Int>();
  r.datum.h = datum.at("h").get<int>();
  r.datum.weyl_order = datum.at("weyl_order").get<Int>();
  r.datum.enumerated = datum.at("enumerated").get<bool>();
  r.datum.derived_fundamental_group = datum.at("derived_fundamental_group").get<std::vector<Int>>();
  for (const auto& o : datum.at("orbits"))
    r.datum.orbits.push_back({o.at("component").get<std::size_t>(), o.at("length").get<std::string>() == "long",
                              o.at("size").get<Int>(), o.at("representative").get<RootIndex>()});

  const json& cover = j.at("cover");
  r.cover.genus = cover.at("genus").get<Int>();
  r.cover.deg_K = cover.at("deg_K").get<Int>();
  r.cover.ram_count = cover.at("ram_count").get<Int>();
  r.cover.n = cover.at("n").get<std::vector<Int>>();
  r.cover.branch_fiber_size = cover.at("branch_fiber_size").get<Int>();
  r.cover.d_alpha_size = cover.at("d_alpha_size").get<Int>();
  r.cover.spectral_genus = cover.at("spectral_genus").get<Int>();
  r.cover.d = cover.at("d").get<Int>();
  r.cover.weyl_order = cover.at("weyl_order").get<Int>();
  r.cover.num_roots = cover.at("num_roots").get<Int>();

  const json& dim = j.at("dimension");
  r.dimension.strategy = dim.at("strategy").get<std::string>() == "enumerated" ? Strategy::enumerated : Strategy::analytic;
  r.dimension.M = dim.at("M").get<Int>();
  r.dimension.dim_P = dim.at("dim_P").get<Int>();
  r.dimension.dim_M = dim.at("dim_M").get<Int>();
  if (!dim.at("strategy_agreement").is_null()) r.dimension.strategy_agreement = dim.at("strategy_agreement").get<bool>();
  r.dimension.trivial_lefschetz = dim.at("trivial_lefschetz").get<Int>();
  r.dimension.component_lefschetz = dim.at("component_lefschetz").get<std::vector<Int>>();
  r.dimension.trivial_h1 = dim.at("trivial_h1").get<Int>();
  r.dimension.component_h1 = dim.at("component_h1").get<std::vector<Int>>();

  const json& fiber = j.at("fiber");
  r.fiber.injective = fiber.at("injective").get<bool>();
  r.fiber.reason = injectivity_reason_from_string(fiber.at("reason").get<std::string>());
  r.fiber.A = fiber.at("A").get<std::vector<RootIndex>>();
  r.fiber.a = fiber.at("a").get<Int>();
  r.fiber.d = fiber.at("d").get<Int>();
  r.fiber.bound = parse_big(fiber.at("bound"));
  if (!fiber.at("pgl2_exact").is_null()) {
    const json& p = fiber.at("pgl2_exact");
    r.fiber.pgl2_exact = Pgl2Count{p.at("components").get<Int>(), p.at("d").get<Int>(),
                                   parse_big(p.at("per_component_fiber")), parse_big(p.at("lambda_quotient_order"))};
  }
  r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "group      " << r.spec.cartan.to_string() << " (" << to_string(r.spec.lattice.kind) << " lattice, central rank "
      << r.spec.cartan.central_rank << "), genus " << r.spec.genus << "\n";
  out << "datum      dim G " << r.datum.dim_G << ", rank " << r.datum.rank << ", |R| " << r.datum.num_roots << ", |W| "
      << r.datum.weyl_order << (r.datum.enumerated ? " (enumerated)" : " (not enumerated)") << ", pi_1((G,G)) factors "
      << join(r.datum.derived_fundamental_group) << "\n";
  for (std::size_t j = 0; j < r.datum.orbits.size(); ++j) {
    const auto& o = r.datum.orbits[j];
    out << "orbit " << j << "    component " << o.component << ", " << (o.long_roots ? "long" : "short") << ", "
        << o.size << " roots, representative root " << o.representative << "\n";
  }
  out << "cover      |Ram| " << r.cover.ram_count << ", n " << join(r.cover.n) << ", points over a branch point "
      << r.cover.branch_fiber_size << ", |D_alpha| " << r.cover.d_alpha_size << ", spectral genus "
      << r.cover.spectral_genus << ", d " << r.cover.d << "\n";
  out << "dimension  M " << r.dimension.M << ", dim P " << r.dimension.dim_P << ", dim M " << r.dimension.dim_M
      << ", strategies "
      << (r.dimension.strategy_agreement ? (*r.dimension.strategy_agreement ? "agree" : "DISAGREE") : "analytic only")
      << "\n";
  out << "           <chi_B,chi_L> " << r.dimension.trivial_lefschetz << ", <chi_S_i,chi_L> "
      << join(r.dimension.component_lefschetz) << ", <chi_B,chi_H1> " << r.dimension.trivial_h1
      << ", <chi_S_i,chi_H1> " << join(r.dimension.component_h1) << "\n";
  std::vector<Int> a(r.fiber.A.begin(), r.fiber.A.end());
  out << "fiber      " << (r.fiber.injective ? "injective" : "not injective") << " (" << to_string(r.fiber.reason)
      << "), A " << join(a) << ", a " << r.fiber.a << ", d " << r.fiber.d << ", bound " << r.fiber.bound << "\n";
  if (r.fiber.pgl2_exact) {
    const auto& p = *r.fiber.pgl2_exact;
    out << "pgl2       " << p.components << " components, " << p.per_component_fiber
        << " points per component fiber, |Lambda'/Lambda| " << p.lambda_quotient_order << "\n";
  }
  out << "time       " << r.elapsed_ms << " ms\n";
  return out.str();
}

std::string render(const Report& r) {
  return r.spec.format == OutputFormat::json ? to_json(r).dump() + "\n" : to_text(r);
}

std::vector<std::string> sweep_preset_names() { return {"acceptance", "small", "exceptional"}; }

std::vector<RunSpec> sweep_preset(const std::string& name, const RunSpec& defaults) {
  std::vector<std::string> types;
  std::vector<LatticeSpec> lattices{LatticeSpec::simply_connected(), LatticeSpec::adjoint()};
  std::vector<Int> genera;
  if (name == "acceptance") {
    types = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};
    genera = {2, 3, 4};
  } else if (name == "small") {
    types = {"A1", "A2", "B2", "G2"};
    genera = {2};
  } else if (name == "exceptional") {
    types = {"G2", "F4", "E6", "E7", "E8"};
    genera = {2};
  } else {
    throw Error(ErrorCode::inconsistent_input, "sweep: unknown preset '" + name + "'");
  }
  std::vector<RunSpec> out;
  for (const auto& t : types)
    for (const auto& lattice : lattices)
      for (Int g : genera) {
        RunSpec s = defaults;
        s.cartan = CartanType::parse(t);
        s.lattice = lattice;
        s.genus = g;
        out.push_back(std::move(s));
      }
  return out;
}

}  // namespace hitchin
