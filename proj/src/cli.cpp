#include "nary/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "nary/error.hpp"
#include "nary/io.hpp"
#include "nary/poisson.hpp"

namespace nary {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string output;
  std::string identity;
  std::string table;
  std::string grid = "0,1,2";
  bool exhaustive = false;
  bool pretty = false;
  bool invert = false;
  bool oracle = false;
  bool allow_odd = false;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-9;
  std::size_t max_degree = 0;
  unsigned threads = 1;
};

// Identity check failed; the report is still written.
struct IdentityFailure {
  json report;
};

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json read_input(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::ParseError, "--input is required");
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + location(text, e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "/: expected an object");
  if (doc.contains("schema") && doc["schema"] != io::kSchema) {
    throw Error(ErrorKind::ParseError, "/schema: unsupported schema, expected nary/1");
  }
  return doc;
}

const json& need(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("/") + key + ": missing field");
  return doc[key];
}

std::size_t degree_cap(const Options& o) {
  if (o.max_degree != 0) return o.max_degree;
  if (const char* env = std::getenv("NARY_MAX_DEGREE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw Error(ErrorKind::ParseError, "NARY_MAX_DEGREE must be a positive integer");
    }
    return v;
  }
  return 0;
}

SpacePtr space_of(const json& doc, const Options& o) { return io::superspace_from_json(need(doc, "space"), "/space", degree_cap(o)); }

Potential potential_of(const json& doc, const SpacePtr& space) {
  return io::potential_from_json(need(doc, "potential"), space, "/potential");
}

NaryStructure structure_of(const json& doc, const SpacePtr& space) {
  if (doc.contains("structure")) return io::structure_from_json(doc["structure"], space, "/structure");
  return derive_structure(potential_of(doc, space));
}

json verify(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  const VerifyOptions vopt{o.exhaustive, o.threads};
  const std::string& id = o.identity;
  if (id == "l-infinity") {
    const auto r = check_l_infinity(potential_of(doc, space));
    json out = io::l_infinity_to_json(r);
    if (!r.is_l_infinity) throw IdentityFailure{out};
    return out;
  }
  Report r;
  if (id == "commutative") {
    r = check_commutative(structure_of(doc, space), vopt);
  } else if (id == "invariant") {
    r = check_invariant(structure_of(doc, space), vopt);
  } else if (id == "jacobi") {
    r = check_nary_jacobi(structure_of(doc, space), vopt);
  } else if (id == "generalized-jacobi") {
    r = check_generalized_jacobi(potential_of(doc, space), vopt);
  } else if (id == "filippov") {
    r = check_filippov(potential_of(doc, space), vopt);
  } else if (id == "jordan") {
    r = check_jordan(potential_of(doc, space), vopt);
  } else if (id == "associative") {
    r = check_associative(potential_of(doc, space), vopt);
  } else if (id == "derivation") {
    r = check_derivation(io::element_from_json(need(doc, "w"), space, "/w"), potential_of(doc, space));
  } else {
    throw Error(ErrorKind::ParseError, "unknown identity " + id);
  }
  json out = io::report_to_json(r);
  out["identity"] = id;
  if (!r.pass) throw IdentityFailure{out};
  return out;
}

json derive(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  if (o.invert) {
    return {{"potential", io::potential_to_json(potential_from_structure(io::structure_from_json(need(doc, "structure"), space, "/structure")))}};
  }
  const Potential mu = potential_of(doc, space);
  if (!mu.is_family()) return {{"structure", io::structure_to_json(derive_structure(mu))}};
  json layers = json::array();
  for (const auto& s : derive_layers(mu)) layers.push_back(io::structure_to_json(s));
  return {{"layers", layers}};
}

json star_cmd(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  const HodgeContext ctx(space);
  return {{"element", io::element_to_json(star(ctx, io::element_from_json(need(doc, "element"), space, "/element")))}};
}

json bracket_cmd(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  const Element a = io::element_from_json(need(doc, "a"), space, "/a");
  const Element b = io::element_from_json(need(doc, "b"), space, "/b");
  return {{"element", io::element_to_json(o.oracle ? bracket_recursive_oracle(a, b) : poisson_bracket(a, b))}};
}

json hodge_cmd(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  const HodgeContext ctx(space);
  const json out = io::hodge_to_json(hodge_decomposition(ctx, potential_of(doc, space).element()));
  const bool ok = out["direct_sum_ok"] && out["kostant_ok"] && out["cohomology_ok"] && out["disjoint_ok"];
  if (!ok) throw IdentityFailure{out};
  return out;
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::string s = text;
  if (s.rfind("m=", 0) == 0) s = s.substr(2);
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto m = std::stoul(s);
      return {m};
    }
    const auto lo = std::stoul(s.substr(0, dots));
    const auto hi = std::stoul(s.substr(dots + 2));
    std::vector<std::size_t> out;
    for (auto m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "--table: expected m=LO..HI, got " + text);
  }
}

std::vector<long> parse_grid(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--grid: expected comma-separated integers, got " + text);
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "--grid is empty");
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Nonincreasing parameter vectors of length k over the grid.
void grid_points(const std::vector<long>& grid, std::size_t k, std::size_t from, std::vector<Scalar>& cur,
                 std::vector<std::vector<Scalar>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t g = from; g < grid.size(); ++g) {
    cur.emplace_back(grid[g]);
    grid_points(grid, k, g, cur, out);
    cur.pop_back();
  }
}

json classify_cmd(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  const HodgeContext ctx(space);
  Element v(space);
  if (doc.contains("matrix")) {
    v = skew_to_element(space, io::matrix_from_json(doc["matrix"], "/matrix"));
  } else {
    v = io::element_from_json(need(doc, "v"), space, "/v");
  }
  IdealOptions iopt;
  iopt.seed = o.seed;
  json out = io::classify_to_json(classify_m3(ctx, v, iopt, {false, o.threads}));
  if (o.tolerance != 1e-9) {
    out["canonical"] = io::canonical_to_json(canonical_form(to_eigen(element_to_skew(v)), o.tolerance));
  }
  return out;
}

void classify_table(const Options& o, std::ostream& out) {
  const auto ms = parse_range(o.table);
  const auto grid = parse_grid(o.grid);
  IdealOptions iopt;
  iopt.seed = o.seed;
  for (auto m : ms) {
    const SpacePtr space = Superspace::odd_euclidean(m);
    const HodgeContext ctx(space);
    std::vector<std::vector<Scalar>> points;
    std::vector<Scalar> cur;
    grid_points(grid, m / 2, 0, cur, points);
    for (const auto& params : points) {
      json rec = io::classify_to_json(classify_m3(ctx, canonical_element(space, params), iopt, {false, o.threads}));
      json ps = json::array();
      for (const auto& p : params) ps.push_back(format_scalar(p));
      rec["grid_params"] = ps;
      rec["schema"] = io::kSchema;
      out << rec.dump() << '\n';
    }
  }
}

json frobenius_cmd(const json& doc, const Options& o) {
  const SpacePtr space = space_of(doc, o);
  const NaryStructure mu = structure_of(doc, space);
  const Matrix phi = io::matrix_from_json(need(doc, "phi"), "/phi");
  const QFCertificate cert = check_quasi_frobenius(mu, phi, o.allow_odd);
  std::optional<GraphResult> graph;
  if (mu.arity() % 2 == 0) graph = graph_subalgebra_test(t_star_extension(mu), phi);
  json out = io::certificate_to_json(cert, graph);
  if (!cert.pass) throw IdentityFailure{out};
  return out;
}

void table_cmd(const json& doc, const Options& o, std::ostream& out) {
  const SpacePtr space = space_of(doc, o);
  const NaryStructure s = structure_of(doc, space);
  for (const auto& [t, v] : s.table()) {
    json row = {{"schema", io::kSchema},
                {"args", io::tuple_to_json(t)},
                {"value", io::element_to_json(Element::linear(space, v))}};
    out << row.dump() << '\n';
  }
}

void emit(json body, const Options& o, std::ostream& out) {
  body["schema"] = io::kSchema;
  out << (o.pretty ? body.dump(2) : body.dump()) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact engine for n-ary algebras on the Poisson superalgebra S*(V)", "nary"};
  app.require_subcommand(1);
  app.add_option("--input,-i", o.input, "Input JSON document (- for stdin)");
  app.add_option("--output,-o", o.output, "Write the report here instead of stdout");
  app.add_flag("--exhaustive", o.exhaustive, "Collect every violation");
  app.add_option("--seed", o.seed, "Seed for randomized searches");
  app.add_option("--tolerance", o.tolerance, "Floating tolerance for canonical forms");
  app.add_option("--max-degree", o.max_degree, "Degree cap for spaces with even generators");
  app.add_option("--threads", o.threads, "Worker threads for verifier loops")->check(CLI::Range(1U, 1024U));
  app.add_flag("--pretty", o.pretty, "Indented JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity");
  verify_cmd->add_option("--identity", o.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"commutative", "invariant", "l-infinity", "jacobi", "generalized-jacobi", "filippov",
                             "jordan", "associative", "derivation"}));
  auto* derive_sub = app.add_subcommand("derive", "Structure constants of a potential");
  derive_sub->add_flag("--invert", o.invert, "Recover the potential from structure constants");
  auto* star_sub = app.add_subcommand("star", "Hodge star of an element");
  auto* bracket_sub = app.add_subcommand("bracket", "Poisson bracket of two elements");
  bracket_sub->add_flag("--oracle", o.oracle, "Use the recursive reference implementation");
  auto* hodge_sub = app.add_subcommand("hodge", "Hodge decomposition report");
  auto* classify_sub = app.add_subcommand("classify", "Classify an algebra *v");
  classify_sub->add_option("--table", o.table, "Emit the table for m=LO..HI as JSON-lines");
  classify_sub->add_option("--grid", o.grid, "Parameter grid for --table");
  auto* frob_sub = app.add_subcommand("frobenius", "Quasi-Frobenius certificate");
  frob_sub->add_flag("--allow-odd", o.allow_odd, "Permit odd arity for the raw cyclic sum");
  auto* table_sub = app.add_subcommand("table", "Structure constants as JSON-lines");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"schema", io::kSchema}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << json{{"schema", io::kSchema}, {"error", {{"kind", "IoError"}, {"message", "cannot write " + o.output}}}}.dump()
          << '\n';
      return 2;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;

  try {
    if (classify_sub->parsed() && !o.table.empty()) {
      classify_table(o, sink);
      return 0;
    }
    const json doc = read_input(o.input);
    try {
      if (verify_cmd->parsed()) {
        emit(verify(doc, o), o, sink);
      } else if (derive_sub->parsed()) {
        emit(derive(doc, o), o, sink);
      } else if (star_sub->parsed()) {
        emit(star_cmd(doc, o), o, sink);
      } else if (bracket_sub->parsed()) {
        emit(bracket_cmd(doc, o), o, sink);
      } else if (hodge_sub->parsed()) {
        emit(hodge_cmd(doc, o), o, sink);
      } else if (classify_sub->parsed()) {
        emit(classify_cmd(doc, o), o, sink);
      } else if (frob_sub->parsed()) {
        emit(frobenius_cmd(doc, o), o, sink);
      } else if (table_sub->parsed()) {
        table_cmd(doc, o, sink);
      }
    } catch (IdentityFailure& failed) {
      emit(std::move(failed.report), o, sink);
      return 1;
    }
  } catch (const Error& e) {
    err << json{{"schema", io::kSchema}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump()
        << '\n';
    return 2;
  }
  return 0;
}

}  // namespace nary
