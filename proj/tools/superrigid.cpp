#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "superrigid/admissible.hpp"
#include "superrigid/brackets.hpp"
#include "superrigid/catalog.hpp"
#include "superrigid/expr.hpp"
#include "superrigid/finalg.hpp"

using namespace superrigid;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "0.1.0";

struct Common {
  int order = 4;
  std::string alpha, beta;
  std::optional<int> n;
  bool json = false;
  bool timing = false;
  unsigned seed = 7;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string q(const Scalar& s) { return s.get_str(); }

json header(const std::string& command, const std::vector<std::string>& argv, const Common& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["library_version"] = kVersion;
  j["command"] = command;
  j["argv"] = argv;
  j["order"] = c.order;
  j["seed"] = c.seed;
  return j;
}

std::optional<Scalar> rational_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_rational(s);
}

Params catalog_params(const Common& c) {
  Params p;
  p.n = c.n;
  p.alpha = rational_opt(c.alpha);
  p.beta = rational_opt(c.beta);
  p.order = c.order;
  return p;
}

Ambient parse_ambient(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad --ambient '" + s + "'");
    }
  }
  if (v.size() < 2 || v.size() > 3 || v[0] < 0 || v[1] < 0) throw UsageError("--ambient expects m,n or m,n,tau");
  return v.size() == 3 ? Ambient(v[0], v[1], v[2]) : Ambient(v[0], v[1]);
}

BracketKind bracket_kind(const std::string& kind, const std::optional<Ambient>& given) {
  auto need = [&]() {
    if (!given) throw UsageError("--ambient is required for --kind " + kind);
    return *given;
  };
  if (kind == "buttin") return make_buttin(need());
  if (kind == "k_bracket") {
    Ambient a = need();
    if (a.tau < 0) a = Ambient(a.m, a.n, a.m);
    return make_k_bracket(a);
  }
  if (kind == "poisson") return make_gen_poisson(need(), false);
  if (kind == "poisson_hyperbolic") return make_gen_poisson(need(), true);
  if (kind == "jacobi_mayer") return make_jacobi_mayer();
  throw UsageError("unknown bracket kind '" + kind + "'");
}

void emit(const json& j, const Common& c, const std::string& text) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_bracket(const Common& c, const std::vector<std::string>& argv, const std::string& kind,
                const std::string& ambient, const std::string& phi, const std::string& f_text,
                const std::string& g_text) {
  std::optional<Ambient> amb;
  if (!ambient.empty()) amb = parse_ambient(ambient);
  BracketKind k = bracket_kind(kind, amb);
  Jet f = parse_jet(f_text, k.amb), g = parse_jet(g_text, k.amb);
  Jet r;
  if (!phi.empty()) {
    BracketKind gk = gauge_transform(k, parse_jet(phi, k.amb), c.order);
    r = gauged_eval(gk, f, g);
  } else {
    r = k.eval(f, g);
  }
  json j = header("bracket", argv, c);
  j["kind"] = k.name();
  j["f"] = f.str();
  j["g"] = g.str();
  if (!phi.empty()) j["phi"] = phi;
  j["result"] = r.str();
  j["pass"] = true;
  emit(j, c, r.str() + "\n");
  return 0;
}

json checks_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& ch : checks) a.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  return a;
}

int cmd_verify(const Common& c, const std::vector<std::string>& argv, const std::string& name) {
  CatalogEntry e = make_entry(name, catalog_params(c));
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep = verify_entry(e, -1, c.seed);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json j = header("verify", argv, c);
  j["entry"] = rep.entry;
  j["finite"] = e.finite;
  if (rep.dim) j["dim"] = *rep.dim;
  if (rep.simple) j["simple"] = *rep.simple;
  if (rep.rigid) j["rigid"] = *rep.rigid;
  if (rep.dim_str) j["dim_str"] = *rep.dim_str;
  if (rep.dim_r) j["dim_r"] = *rep.dim_r;
  j["checks"] = checks_json(rep.checks);
  j["pass"] = rep.ok();
  if (c.timing) j["timing_ms"] = ms;
  std::ostringstream os;
  os << rep.entry << (e.finite ? " (finite)" : " (order " + std::to_string(rep.order) + ")") << "\n";
  if (rep.dim) os << "  dim " << *rep.dim << "\n";
  if (rep.simple) os << "  simple " << (*rep.simple ? "yes" : "no") << "\n";
  if (rep.rigid) os << "  rigid " << (*rep.rigid ? "yes" : "no") << "  dim Str " << *rep.dim_str << "  dim R " << *rep.dim_r << "\n";
  for (const auto& ch : rep.checks)
    os << "  [" << (ch.pass ? "pass" : "FAIL") << "] " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
  if (c.timing) os << "  " << ms << " ms\n";
  emit(j, c, os.str());
  return rep.ok() ? 0 : 1;
}

int cmd_catalog_list(const Common& c, const std::vector<std::string>& argv) {
  json j = header("catalog-list", argv, c);
  json items = json::array();
  std::ostringstream os;
  for (const auto& r : registry()) {
    items.push_back({{"name", r.name},
                     {"description", r.description},
                     {"params", r.params},
                     {"finite", r.finite},
                     {"anticommutative", r.anticommutative}});
    os << r.name;
    if (!r.params.empty()) {
      os << " (";
      for (size_t i = 0; i < r.params.size(); ++i) os << (i ? ", " : "") << r.params[i];
      os << ")";
    }
    os << (r.finite ? " finite" : " oracle") << (r.anticommutative ? " anticommutative" : " commutative") << "\n    "
       << r.description << "\n";
  }
  j["entries"] = items;
  j["pass"] = true;
  emit(j, c, os.str());
  return 0;
}

int cmd_tkk(const Common& c, const std::vector<std::string>& argv, const std::string& name, int cap) {
  CatalogEntry e = make_entry(name, catalog_params(c));
  if (!e.finite) throw UsageError(name + " is not a finite entry");
  GradedLie L = tkk(*e.alg, cap);
  std::vector<int> dims = L.dims();
  json j = header("tkk", argv, c);
  j["entry"] = name;
  j["cap"] = cap;
  j["dims"] = dims;
  j["total"] = L.total();
  j["terminated"] = L.terminated;
  j["pass"] = L.terminated;
  std::ostringstream os;
  os << name << ": graded dims from degree -1:";
  for (int d : dims) os << " " << d;
  os << "\n  total " << L.total() << (L.terminated ? ", terminated" : ", cap reached") << "\n";
  emit(j, c, os.str());
  return L.terminated ? 0 : 1;
}

int cmd_admissible(const Common& c, const std::vector<std::string>& argv, int table, const std::string& row_id,
                   int k_max, const std::string& tables) {
  auto rows = tables.empty() ? load_table_rows() : load_table_rows(tables);
  const TableRow* row = nullptr;
  try {
    row = &find_row(rows, table, row_id);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
  RowParams p;
  p.n = c.n;
  p.alpha = rational_opt(c.alpha);
  p.beta = rational_opt(c.beta);
  RowParams d = smallest_params(*row, p.alpha ? *p.alpha : Scalar(0));
  if (!p.n) p.n = d.n;
  if (!p.alpha) p.alpha = d.alpha;
  if (!p.beta) p.beta = d.beta;
  RowInstance inst = instantiate(*row, p);
  auto t0 = std::chrono::steady_clock::now();
  AdmissibilityReport r = verify_row(inst, c.order, k_max);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json j = header("admissible", argv, c);
  j["table"] = table;
  j["row"] = row_id;
  j["family"] = r.family;
  j["grading"] = r.grading;
  j["mu"] = r.mu;
  json params = json::object();
  if (inst.params.n) params["n"] = *inst.params.n;
  if (inst.params.alpha) params["alpha"] = q(*inst.params.alpha);
  if (inst.params.beta) params["beta"] = q(*inst.params.beta);
  j["params"] = params;
  j["window"] = r.window;
  j["condition_a"] = {{"holds", r.a.holds},        {"dim_g1", r.a.dim_g1},
                      {"rank", r.a.rank},          {"codim", r.a.codim},
                      {"witnesses", r.a.witnesses}, {"codim_int", r.a.codim_int},
                      {"codim_int_no_mu", r.a.codim_int_no_mu}};
  j["condition_b"] = {{"holds", r.b.holds},
                      {"margin", r.b.margin},
                      {"dim_g0", r.b.dim_g0},
                      {"reached", r.b.reached},
                      {"missing", r.b.missing}};
  j["condition_c"] = {{"holds", r.c.holds}, {"k_checked", r.c.k_checked}, {"codims", r.c.codims}};
  j["transitive"] = r.transitive;
  j["notes"] = r.notes;
  j["pass"] = r.ok();
  if (c.timing) j["timing_ms"] = ms;

  auto yn = [](bool b) { return b ? "holds" : "FAILS"; };
  std::ostringstream os;
  os << "Table " << table << " row " << row_id << ": " << r.family << " " << r.grading << "\n";
  os << "  mu = " << r.mu << "\n";
  os << "  order " << c.order << " (aux window <= " << r.window << ")\n";
  os << "  (a) " << yn(r.a.holds) << ": codim " << r.a.codim << " in dim " << r.a.dim_g1
     << "; with g_int: codim " << r.a.codim_int << "\n";
  for (const auto& w : r.a.witnesses) os << "      missing " << w << "\n";
  os << "  (b) " << yn(r.b.holds) << ": reached " << r.b.reached << " of " << r.b.dim_g0 << "\n";
  for (const auto& w : r.b.missing) os << "      missing " << w << "\n";
  os << "  (c) " << yn(r.c.holds) << ": codims for k = 2.." << r.c.k_checked << ":";
  for (int x : r.c.codims) os << " " << x;
  os << "\n  transitive " << (r.transitive ? "yes" : "no") << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  if (c.timing) os << "  " << ms << " ms\n";
  emit(j, c, os.str());
  return r.ok() ? 0 : 1;
}

int cmd_spot_ideal(const Common& c, const std::vector<std::string>& argv, const std::string& kind,
                   const std::string& seed_text) {
  int n = c.n.value_or(0);
  if (n < 0) throw UsageError("--n must be nonnegative");
  BracketKind P;
  if (kind == "buttin")
    P = make_buttin(Ambient(n, n));
  else if (kind == "k_bracket")
    P = make_k_bracket(Ambient(n, n + 1, n));
  else
    throw UsageError("--kind must be buttin or k_bracket");
  OJP J(P);
  Jet seed = parse_jet(seed_text, J.ambient());
  SpotReport r = ideal_spot_checks(J, seed, c.order);
  bool ok = true;
  for (const auto& ch : r.checks) ok = ok && ch.pass;
  json j = header("spot-ideal", argv, c);
  j["ojp"] = P.name() + " over O(" + std::to_string(P.amb.m) + "," + std::to_string(P.amb.n) + ")";
  j["seed_element"] = seed.str();
  j["checks"] = checks_json(r.checks);
  j["reached"] = r.reached;
  j["missing"] = r.missing;
  j["pass"] = ok;
  std::ostringstream os;
  os << "ideal generated by " << seed.str() << " in OJP(" << kind << ", n=" << n << "), order " << r.order << "\n";
  for (const auto& ch : r.checks)
    os << "  [" << (ch.pass ? "pass" : "FAIL") << "] " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
  os << "  reached " << r.reached.size() << ", missing " << r.missing.size() << "\n";
  for (const auto& m : r.missing) os << "      missing " << m << "\n";
  emit(j, c, os.str());
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, Common& c, bool params) {
  sub->add_option("--order", c.order, "working order (x-degree)")->capture_default_str()->check(CLI::Range(1, 12));
  sub->add_flag("--json", c.json, "print a JSON report");
  sub->add_flag("--timing", c.timing, "include wall time");
  sub->add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
  if (params) {
    sub->add_option("--n", c.n, "integer parameter n");
    sub->add_option("--alpha", c.alpha, "rational parameter p/q");
    sub->add_option("--beta", c.beta, "rational parameter p/q");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superrigid: rigid superalgebras and admissible gradings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::vector<std::string> args(argv + 1, argv + argc);

  Common c;
  std::string kind = "buttin", ambient, phi, f_text, g_text, name, row_id, tables, seed_text;
  int table = 0, cap = 6, k_max = 3;

  auto* br = app.add_subcommand("bracket", "evaluate a bracket of two expressions");
  add_common(br, c, false);
  br->add_option("--kind", kind, "buttin | k_bracket | poisson | poisson_hyperbolic | jacobi_mayer")->capture_default_str();
  br->add_option("--ambient", ambient, "m,n[,tau]");
  br->add_option("--phi", phi, "gauge the bracket by phi");
  br->add_option("f", f_text)->required();
  br->add_option("g", g_text)->required();

  auto* ve = app.add_subcommand("verify", "verify a catalog entry");
  add_common(ve, c, true);
  ve->add_option("name", name)->required();

  auto* cl = app.add_subcommand("catalog-list", "list catalog entries");
  add_common(cl, c, false);

  auto* tk = app.add_subcommand("tkk", "graded Lie superalgebra of a finite entry");
  add_common(tk, c, true);
  tk->add_option("name", name)->required();
  tk->add_option("--cap", cap, "depth cap")->capture_default_str()->check(CLI::Range(1, 20));

  auto* ad = app.add_subcommand("admissible", "check a Table row");
  add_common(ad, c, true);
  ad->add_option("--table", table)->required()->check(CLI::IsMember({1, 2}));
  ad->add_option("--row", row_id)->required();
  ad->add_option("--kmax", k_max, "largest k for the g_k = g_1^k check")->capture_default_str()->check(CLI::Range(2, 6));
  ad->add_option("--tables", tables, "table data file");

  auto* sp = app.add_subcommand("spot-ideal", "ideal closure of a seed element in OJP");
  add_common(sp, c, true);
  sp->add_option("--kind", kind, "buttin | k_bracket")->capture_default_str();
  sp->add_option("element", seed_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*br) return cmd_bracket(c, args, kind, ambient, phi, f_text, g_text);
    if (*ve) return cmd_verify(c, args, name);
    if (*cl) return cmd_catalog_list(c, args);
    if (*tk) return cmd_tkk(c, args, name, cap);
    if (*ad) return cmd_admissible(c, args, table, row_id, k_max, tables);
    if (*sp) return cmd_spot_ideal(c, args, kind, seed_text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
