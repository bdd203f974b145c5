#include "tn/cli.hpp"

#include "tn/errors.hpp"
#include "tn/liecoh.hpp"
#include "tn/section.hpp"
#include "tn/text.hpp"
#include "tn/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace tn {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int positive(const Json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long>() < 1) throw DomainError(std::string("config: ") + key + " must be a positive integer");
  return v.get<int>();
}

// Formulas parsed against one shared name table. Every text of a command is
// reserved first so that named variables never take an xK slot.
struct Workspace {
  VarNames names;
  void reserve(const std::vector<std::string>& texts) {
    for (const auto& t : texts) reserve_indexed_names(t, names);
  }
  Formula parse(const std::string& text) {
    reserve_indexed_names(text, names);
    return parse_formula(text, names);
  }
};

int ambient_dim(const std::vector<Formula>& fs, std::optional<int> requested) {
  int need = 0;
  for (const auto& f : fs)
    for (int v : f.free_variables()) need = std::max(need, v + 1);
  if (!requested) return std::max(need, 1);
  if (*requested < 1) throw DomainError("--dim must be positive");
  if (*requested < need)
    throw DomainError("--dim " + std::to_string(*requested) + " is smaller than the " + std::to_string(need) +
                      " free variables used");
  return *requested;
}

std::string point_text(const SamplePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_decimal(6);
  return s + ")";
}

Json point_json(const SamplePoint& p) {
  Json dec = Json::array(), exact = Json::array();
  for (const auto& a : p) {
    dec.push_back(a.to_decimal(6));
    exact.push_back(a.to_string());
  }
  return Json{{"decimal", dec}, {"exact", exact}};
}

std::string index_text(const std::vector<int>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "]";
}

Json dims_json(const std::vector<int>& d) { return Json(d); }

std::string dims_text(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + ")";
}

LieAlgebra builtin_algebra(const std::string& name) {
  if (name == "sl2") return LieAlgebra::sl2();
  if (name == "heisenberg" || name == "h3") return LieAlgebra::heisenberg();
  if (name == "affine") return LieAlgebra::affine_line();
  if (name.rfind("abelian:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(8));
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1 || n > 16) throw DomainError("abelian:N needs 1 <= N <= 16");
    return LieAlgebra::abelian(n);
  }
  throw DomainError("unknown builtin algebra '" + name + "' (expected sl2, heisenberg, affine or abelian:N)");
}

Representation builtin_rep(const std::string& name, const LieAlgebra& g) {
  if (name == "trivial") return Representation::trivial(g);
  if (name == "adjoint") return Representation::adjoint(g);
  if (name.rfind("irrep:", 0) == 0) {
    if (g.dim != 3) throw DomainError("irrep:M is the sl2 irreducible module and needs a 3-dimensional algebra");
    int m = 0;
    try {
      m = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      m = 0;
    }
    if (m < 1 || m > 32) throw DomainError("irrep:M needs 1 <= M <= 32");
    return Representation::sl2_irrep(m);
  }
  throw DomainError("unknown builtin representation '" + name + "' (expected trivial, adjoint or irrep:M)");
}

struct LieInput {
  std::string algebra_file, builtin, rep_file, rep_builtin;

  void attach(CLI::App* sub) {
    sub->add_option("--algebra", algebra_file, "Lie algebra JSON file");
    sub->add_option("--builtin", builtin, "sl2 | heisenberg | affine | abelian:N");
    sub->add_option("--rep", rep_file, "representation JSON file (or the \"rep\" key of --algebra)");
    sub->add_option("--rep-builtin", rep_builtin, "trivial | adjoint | irrep:M");
  }

  LieAlgebra algebra() const {
    if (algebra_file.empty() == builtin.empty()) throw DomainError("give exactly one of --algebra or --builtin");
    LieAlgebra g = algebra_file.empty() ? builtin_algebra(builtin) : parse_lie_algebra(read_file(algebra_file));
    if (!validate_lie_algebra(g)) throw DomainError("structure constants fail antisymmetry or the Jacobi identity");
    return g;
  }

  Representation representation(const LieAlgebra& g) const {
    if (!rep_file.empty() && !rep_builtin.empty()) throw DomainError("give at most one of --rep or --rep-builtin");
    Representation rho;
    if (!rep_file.empty())
      rho = parse_representation(read_file(rep_file), g);
    else if (!rep_builtin.empty())
      rho = builtin_rep(rep_builtin, g);
    else if (!algebra_file.empty() && has_representation(read_file(algebra_file)))
      rho = parse_representation(read_file(algebra_file), g);
    else
      rho = Representation::trivial(g);
    if (!validate_representation(g, rho)) throw DomainError("matrices do not define a representation of the algebra");
    return rho;
  }
};

class Runner {
 public:
  Runner(CliConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {}

  void qe(const std::string& text) {
    Formula f = ws_.parse(text);
    Formula r = eliminate_quantifiers(f, cfg_.caps);
    std::string s = r.to_string(ws_.names);
    if (cfg_.json) {
      int n = 0;
      for (int v : f.free_variables()) n = std::max(n, v + 1);
      emit(Json{{"command", "qe"}, {"input", text}, {"variables", variables(n)}, {"formula", s}});
    } else {
      out_ << s << "\n";
    }
  }

  void setop(const std::string& op, const std::vector<std::string>& operands, std::optional<int> dim) {
    static const std::vector<std::string> unary = {"complement", "empty", "point"};
    static const std::vector<std::string> binary = {"union", "intersect", "difference", "subset", "equal"};
    bool is_unary = std::find(unary.begin(), unary.end(), op) != unary.end();
    bool is_binary = std::find(binary.begin(), binary.end(), op) != binary.end();
    if (!is_unary && !is_binary)
      throw DomainError("unknown set operation '" + op +
                        "' (expected union, intersect, difference, complement, subset, equal, empty or point)");
    std::size_t want = is_unary ? 1 : 2;
    if (operands.size() != want) throw DomainError("'" + op + "' takes " + std::to_string(want) + " formula(s)");
    ws_.reserve(operands);
    std::vector<Formula> fs;
    for (const auto& t : operands) fs.push_back(ws_.parse(t));
    int n = ambient_dim(fs, dim);
    std::vector<SemiAlgebraicSet> s;
    for (const auto& f : fs) s.push_back(set_from_formula(f, n, cfg_.caps));
    const Config& c = cfg_.caps;
    if (op == "union") return emit_set("setop", set_union(s[0], s[1], c));
    if (op == "intersect") return emit_set("setop", set_intersect(s[0], s[1], c));
    if (op == "difference") return emit_set("setop", set_difference(s[0], s[1], c));
    if (op == "complement") return emit_set("setop", set_complement(s[0], c));
    if (op == "subset") return emit_bool("subset", is_subset(s[0], s[1], c));
    if (op == "equal") return emit_bool("equal", equivalent(s[0], s[1], c));
    if (op == "empty") return emit_bool("empty", is_empty(s[0], c));
    auto p = find_point(s[0], c);
    if (cfg_.json) {
      emit(Json{{"command", "setop"}, {"op", "point"}, {"empty", !p}, {"point", p ? point_json(*p) : Json()}});
    } else {
      out_ << (p ? point_text(*p) : std::string("empty")) << "\n";
    }
  }

  void closure_cmd(const std::string& text, std::optional<int> dim) {
    auto [s, n] = set_of(text, dim);
    (void)n;
    emit_set("closure", closure(s, cfg_.caps));
  }

  void project_cmd(const std::string& text, int keep, std::optional<int> dim) {
    auto [s, n] = set_of(text, dim);
    if (keep < 0 || keep > n) throw DomainError("--keep must be between 0 and the ambient dimension " + std::to_string(n));
    emit_set("project", project(s, keep, cfg_.caps));
  }

  void components(const std::string& text, std::optional<int> dim) {
    auto [s, n] = set_of(text, dim);
    if (n >= 3) throw DomainError("components unsupported for ambient dimension >= 3 (got " + std::to_string(n) + ")");
    ComponentReport r = connected_components(s, cfg_.caps);
    if (cfg_.json) {
      Json reps = Json::array();
      for (const auto& p : r.representatives) reps.push_back(point_json(p));
      emit(Json{{"command", "components"}, {"count", r.count}, {"representatives", reps}});
      return;
    }
    out_ << r.count << "\n";
    for (const auto& p : r.representatives) out_ << point_text(p) << "\n";
  }

  void euler(const std::string& text, std::optional<int> dim) {
    auto [s, n] = set_of(text, dim);
    (void)n;
    long chi = euler_characteristic_c(s, cfg_.caps);
    if (cfg_.json)
      emit(Json{{"command", "euler"}, {"euler_characteristic_c", chi}});
    else
      out_ << chi << "\n";
  }

  void dim_cmd(const std::string& text, std::optional<int> dim) {
    auto [s, n] = set_of(text, dim);
    (void)n;
    int d = dimension(s, cfg_.caps);
    if (cfg_.json)
      emit(Json{{"command", "dim"}, {"dimension", d}});
    else
      out_ << d << "\n";
  }

  void decompose_cmd(const std::vector<std::string>& texts, std::optional<int> dim) {
    ws_.reserve(texts);
    std::vector<Polynomial> ps;
    int need = 1;
    for (const auto& t : texts) {
      ps.push_back(parse_polynomial(t, ws_.names));
      for (int v : ps.back().variables()) need = std::max(need, v + 1);
    }
    int n = dim ? *dim : need;
    if (n < need) throw DomainError("--dim is smaller than the variables used");
    Decomposition d = decompose(ps, n, cfg_.caps);
    if (cfg_.json) {
      Json cells = Json::array();
      for (const auto& c : d.cells)
        cells.push_back(Json{{"index", c.index}, {"dim", c.dim}, {"sample", point_json(c.sample)}, {"signs", c.signs}});
      emit(Json{{"command", "decompose"}, {"n", n}, {"cells", cells}});
      return;
    }
    out_ << "# " << d.cells.size() << " cells; index dim sample signs\n";
    for (const auto& c : d.cells) {
      out_ << index_text(c.index) << " " << c.dim << " " << point_text(c.sample) << " ";
      for (int s : c.signs) out_ << (s > 0 ? '+' : s < 0 ? '-' : '0');
      out_ << "\n";
    }
  }

  void section(const std::string& graph_text, int k, int m, const std::string& base_text) {
    ws_.reserve({graph_text, base_text});
    MapSpec spec = map_spec(graph_text, k, m);
    SemiAlgebraicSet base = SemiAlgebraicSet::whole(m);
    if (!base_text.empty()) base = set_from_formula(shift_to_codomain(ws_.parse(base_text), k, m), m, cfg_.caps);
    SectionResult r = synthesize_section(spec, base, cfg_.caps);
    bool functional = is_functional(r.graph, k, m, cfg_.caps);
    bool inside = is_empty(set_difference(r.graph, spec.graph, cfg_.caps), cfg_.caps);
    bool covers = equivalent(project_last(r.graph, m, cfg_.caps), base, cfg_.caps);
    std::vector<std::vector<Rational>> samples;
    for (const auto& c : cells_of(base, cfg_.caps)) {
      std::vector<Rational> p;
      for (const auto& a : c.sample)
        if (a.is_rational()) p.push_back(a.rational_value());
      if (p.size() == c.sample.size()) samples.push_back(std::move(p));
    }
    SectionCheck chk = verify_section(spec, r.graph, samples, cfg_.caps);
    bool ok = functional && inside && covers && chk.ok;
    std::string g = r.graph.to_string(ws_.names);
    if (cfg_.json) {
      emit(Json{{"command", "section"},
                {"variables", variables(k + m)},
                {"graph", g},
                {"functional", functional},
                {"contained_in_map_graph", inside},
                {"covers_base", covers},
                {"sample_checks", samples.size()},
                {"sample_failures", chk.failures},
                {"verified", ok},
                {"trace", r.trace}});
    } else {
      out_ << g << "\n";
      out_ << "functional: " << (functional ? "yes" : "no") << "\n";
      out_ << "contained in map graph: " << (inside ? "yes" : "no") << "\n";
      out_ << "covers base: " << (covers ? "yes" : "no") << "\n";
      out_ << "sample checks: " << samples.size() << ", failures: " << chk.failures.size() << "\n";
      for (const auto& f : chk.failures) out_ << "  " << f << "\n";
      out_ << "verified: " << (ok ? "yes" : "no") << "\n";
    }
    if (!ok) throw InternalError("synthesized section failed verification");
  }

  void stratify(const std::string& graph_text, int k, int m) {
    MapSpec spec = map_spec(graph_text, k, m);
    auto strata = stratify_map(spec, cfg_.caps);
    if (cfg_.json) {
      Json arr = Json::array();
      for (const auto& s : strata)
        arr.push_back(Json{{"set", s.set.to_string(ws_.names)},
                           {"dim", s.dim},
                           {"sample", point_json(s.sample)},
                           {"branches", s.branches.size()},
                           {"single_branch", single_branch(s, k)}});
      emit(Json{{"command", "stratify"}, {"strata", arr}});
      return;
    }
    out_ << "# " << strata.size() << " strata; dim sample branches single-branch set\n";
    for (const auto& s : strata)
      out_ << s.dim << " " << point_text(s.sample) << " " << s.branches.size() << " "
           << (single_branch(s, k) ? "yes" : "no") << " " << s.set.to_string(ws_.names) << "\n";
  }

  void liecoh(const LieInput& in, bool duality) {
    LieAlgebra g = in.algebra();
    Representation rho = in.representation(g);
    CochainComplex c = ce_complex(g, rho);
    bool d2 = is_complex(c);
    CohomologyReport r = cohomology(c);
    std::optional<DualityReport> dual;
    if (duality) {
      dual = poincare_duality_dims(g);
      if (!dual->unimodular)
        throw DomainError("duality refused: hypothesis not met, the algebra is not unimodular");
      bool trivial = rho.dim == 1;
      for (const auto& a : rho.action) trivial = trivial && a.is_zero();
      if (!trivial) throw DomainError("--duality is for trivial one-dimensional coefficients");
    }
    if (cfg_.json) {
      Json j{{"command", "liecoh"},
             {"algebra_dim", g.dim},
             {"rep_dim", rho.dim},
             {"d_squared_zero", d2},
             {"cochain_dims", dims_json(r.spaces)},
             {"cohomology_dims", dims_json(r.dims)},
             {"euler_cochains", r.euler_cochains()},
             {"euler_cohomology", r.euler_cohomology()}};
      if (dual) j["duality_symmetric"] = dual->symmetric;
      emit(j);
      return;
    }
    out_ << "cochains: " << dims_text(r.spaces) << "\n";
    out_ << "cohomology: " << dims_text(r.dims) << "\n";
    out_ << "D^2 = 0: " << (d2 ? "yes" : "no") << "\n";
    out_ << "euler: " << r.euler_cochains() << " (cochains), " << r.euler_cohomology() << " (cohomology)\n";
    if (dual) out_ << "duality symmetric: " << (dual->symmetric ? "yes" : "no") << "\n";
  }

  void koszul(int n, int w) {
    CochainComplex c = polynomial_derham_weight(n, w);
    CohomologyReport r = cohomology(c);
    if (cfg_.json) {
      emit(Json{{"command", "koszul"}, {"n", n}, {"w", w}, {"cochain_dims", dims_json(r.spaces)}, {"cohomology_dims", dims_json(r.dims)}});
      return;
    }
    out_ << "cochains: " << dims_text(r.spaces) << "\n";
    out_ << "cohomology: " << dims_text(r.dims) << "\n";
  }

  void shapiro(const LieInput& in) {
    LieAlgebra g = in.algebra();
    Representation rho = in.representation(g);
    ShapiroReport r = shapiro_degenerate_check(g, rho);
    bool equal = r.direct == r.relative;
    if (cfg_.json) {
      emit(Json{{"command", "shapiro"}, {"direct", dims_json(r.direct)}, {"relative", dims_json(r.relative)}, {"equal", equal}});
      return;
    }
    out_ << "direct: " << dims_text(r.direct) << "\n";
    out_ << "relative: " << dims_text(r.relative) << "\n";
    out_ << "equal: " << (equal ? "yes" : "no") << "\n";
  }

 private:
  std::pair<SemiAlgebraicSet, int> set_of(const std::string& text, std::optional<int> dim) {
    Formula f = ws_.parse(text);
    int n = ambient_dim({f}, dim);
    return {set_from_formula(f, n, cfg_.caps), n};
  }

  MapSpec map_spec(const std::string& graph_text, int k, int m) {
    if (k < 1 || m < 1) throw DomainError("--domain-dim and --codomain-dim must be positive");
    Formula f = ws_.parse(graph_text);
    for (int v : f.free_variables())
      if (v >= k + m)
        throw DomainError("graph uses variable " + ws_.names.name(v) + " beyond the " + std::to_string(k + m) +
                          " domain and codomain coordinates");
    return MapSpec{k, m, set_from_formula(f, k + m, cfg_.caps)};
  }

  // Base formulas name codomain coordinates as in the graph; move them to 0..m-1.
  Formula shift_to_codomain(const Formula& f, int k, int m) {
    for (int v : f.free_variables())
      if (v < k || v >= k + m)
        throw DomainError("--base may only use the codomain variables of the graph (" + ws_.names.name(k) + ".." +
                          ws_.names.name(k + m - 1) + ")");
    std::vector<int> map(kMaxVars);
    for (int v = 0; v < kMaxVars; ++v) map[v] = v >= k ? v - k : v + m;
    for (int v : f.all_variables())
      if (map[v] >= kMaxVars) throw CapExceeded("no room to renumber the --base formula");
    return f.rename(map);
  }

  // Coordinate names in index order, so that JSON formulas re-parse with the same coordinates.
  Json variables(int n) const {
    Json v = Json::array();
    for (int i = 0; i < n; ++i) v.push_back(ws_.names.name(i));
    return v;
  }

  void emit_set(const char* command, const SemiAlgebraicSet& s) {
    std::string text = s.to_string(ws_.names);
    if (cfg_.json)
      emit(Json{{"command", command}, {"n", s.n}, {"variables", variables(s.n)}, {"formula", text}, {"disjuncts", s.disjuncts.size()}});
    else
      out_ << text << "\n";
  }

  void emit_bool(const char* what, bool v) {
    if (cfg_.json)
      emit(Json{{"command", "setop"}, {"op", what}, {"result", v}});
    else
      out_ << (v ? "true" : "false") << "\n";
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  CliConfig cfg_;
  std::ostream& out_;
  Workspace ws_;
};

}  // namespace

CliConfig load_config_file(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DomainError("config " + path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw DomainError("config " + path + ": expected a JSON object");
  CliConfig c;
  for (const auto& [key, v] : doc.items()) {
    if (key == "max_vars")
      c.caps.max_vars = positive(v, "max_vars");
    else if (key == "max_degree")
      c.caps.max_degree = positive(v, "max_degree");
    else if (key == "max_dnf")
      c.caps.max_dnf = static_cast<std::size_t>(positive(v, "max_dnf"));
    else if (key == "projection") {
      if (!v.is_string()) throw DomainError("config: projection must be \"collins\" or \"mccallum\"");
      c.caps.projection = parse_projection(v.get<std::string>());
    } else if (key == "output") {
      if (!v.is_string() || (v != "text" && v != "json")) throw DomainError("config: output must be \"text\" or \"json\"");
      c.json = v == "json";
    } else {
      throw DomainError("config " + path + ": unknown key '" + key + "'");
    }
  }
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& config_path) {
  CLI::App app{"Semi-algebraic geometry and Lie algebra cohomology toolkit", "tn"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> max_vars, max_degree, max_dnf;
  std::string projection;
  bool json = false;
  app.add_option("--max-vars", max_vars, "variable cap (default 3)");
  app.add_option("--max-degree", max_degree, "total degree cap (default 6)");
  app.add_option("--max-dnf", max_dnf, "DNF disjunct cap (default 4096)");
  app.add_option("--projection", projection, "collins | mccallum");
  app.add_flag("--json", json, "machine-readable output");

  std::string formula, op, graph, base, algebra;
  std::vector<std::string> operands, polys;
  std::optional<int> dim;
  int keep = 0, k = 0, m = 0, n = 0, w = 0;
  bool duality = false;
  LieInput lie;

  auto* qe = app.add_subcommand("qe", "eliminate quantifiers");
  qe->add_option("formula", formula)->required();
  auto* setop = app.add_subcommand("setop", "set operations: union intersect difference complement subset equal empty point");
  setop->add_option("op", op)->required();
  setop->add_option("formulas", operands)->required();
  setop->add_option("--dim", dim, "ambient dimension");
  auto* clo = app.add_subcommand("closure", "topological closure");
  auto* proj = app.add_subcommand("project", "projection onto the leading coordinates");
  auto* comp = app.add_subcommand("components", "connected components (dimension 1 and 2)");
  auto* eul = app.add_subcommand("euler", "Euler characteristic with compact supports");
  auto* dimc = app.add_subcommand("dim", "dimension");
  for (auto* s : {clo, proj, comp, eul, dimc}) {
    s->add_option("formula", formula)->required();
    s->add_option("--dim", dim, "ambient dimension");
  }
  proj->add_option("--keep", keep, "number of leading coordinates kept")->required();
  auto* sec = app.add_subcommand("section", "semi-algebraic section of a surjective map");
  auto* strat = app.add_subcommand("stratify", "domain strata of a map with single-branch restrictions");
  for (auto* s : {sec, strat}) {
    s->add_option("--graph", graph, "graph formula, domain coordinates first")->required();
    s->add_option("--domain-dim", k)->required();
    s->add_option("--codomain-dim", m)->required();
  }
  sec->add_option("--base", base, "base region in the graph's codomain variables");
  auto* dec = app.add_subcommand("decompose", "sign-invariant CAD of the given polynomials");
  dec->add_option("polynomials", polys)->required();
  dec->add_option("--dim", dim, "ambient dimension");
  auto* lc = app.add_subcommand("liecoh", "Chevalley-Eilenberg cohomology");
  lie.attach(lc);
  lc->add_flag("--duality", duality, "check dim H^k = dim H^(n-k) (unimodular algebras only)");
  auto* ksz = app.add_subcommand("koszul", "polynomial de Rham complex of R^n in one weight");
  ksz->add_option("--n", n)->required();
  ksz->add_option("--w", w)->required();
  auto* sha = app.add_subcommand("shapiro", "degenerate Shapiro consistency check");
  lie.attach(sha);

  // CLI11 reports a stray word as a missing subcommand; name it instead.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--max-vars" || a == "--max-degree" || a == "--max-dnf" || a == "--projection") {
      ++i;
      continue;
    }
    if (a.rfind("-", 0) == 0) continue;
    if (!app.get_subcommand_no_throw(a)) {
      std::string names;
      for (const auto* sub : app.get_subcommands({})) names += (names.empty() ? "" : ", ") + sub->get_name();
      err << "error: unknown subcommand '" << a << "' (expected one of " << names << ")\n";
      return 1;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    CliConfig cfg = config_path.empty() ? CliConfig{} : load_config_file(config_path);
    if (max_vars) cfg.caps.max_vars = *max_vars;
    if (max_degree) cfg.caps.max_degree = *max_degree;
    if (max_dnf) {
      if (*max_dnf < 1) throw DomainError("--max-dnf must be positive");
      cfg.caps.max_dnf = static_cast<std::size_t>(*max_dnf);
    }
    if (cfg.caps.max_vars < 1 || cfg.caps.max_degree < 1) throw DomainError("caps must be positive");
    if (!projection.empty()) cfg.caps.projection = parse_projection(projection);
    if (json) cfg.json = true;

    Runner run(cfg, out);
    if (qe->parsed()) run.qe(formula);
    else if (setop->parsed()) run.setop(op, operands, dim);
    else if (clo->parsed()) run.closure_cmd(formula, dim);
    else if (proj->parsed()) run.project_cmd(formula, keep, dim);
    else if (comp->parsed()) run.components(formula, dim);
    else if (eul->parsed()) run.euler(formula, dim);
    else if (dimc->parsed()) run.dim_cmd(formula, dim);
    else if (sec->parsed()) run.section(graph, k, m, base);
    else if (strat->parsed()) run.stratify(graph, k, m);
    else if (dec->parsed()) run.decompose_cmd(polys, dim);
    else if (lc->parsed()) run.liecoh(lie, duality);
    else if (ksz->parsed()) run.koszul(n, w);
    else if (sha->parsed()) run.shapiro(lie);
    return 0;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n"
        << "hint: raise the cap with --max-vars, --max-degree or --max-dnf (or in the TN_CONFIG file)\n";
    return 1;
  } catch (const NotSurjective& e) {
    err << "error: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << point_text(e.witness()) << "\n";
    return 1;
  } catch (const NotWellOriented& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tn
