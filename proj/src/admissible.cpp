#include "superrigid/admissible.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "superrigid/catalog.hpp"
#include "superrigid/exactlin.hpp"
#include "superrigid/expr.hpp"

#ifndef SUPERRIGID_DATA_DIR
#define SUPERRIGID_DATA_DIR "data"
#endif

namespace superrigid {

int window_of(int order) { return order - 2; }

namespace {

bool finite_family(const FamilySpec& fs) { return is_field_family(fs.fam) && fs.m == 0; }

// highest aux degree to look at for degree k
int aux_hi(const FamilySpec& fs, const GradingSpec& g, int k, int window) {
  if (finite_family(fs)) return std::max(window, fs.n);
  if (components_finite(g)) return std::max(window, max_aux_of_degree(fs, g, k));
  return window;
}

bool excluded_constant(const FamilySpec& fs, const Term& t) {
  if (t.slot >= 0 || t.mono.xdeg() != 0 || t.mono.odd != 0) return false;
  return fs.fam == Family::H || fs.fam == Family::HO || fs.fam == Family::SHO;
}

// coordinates on the terms of g_k with aux degree in [lo, hi]
class Window {
 public:
  Window(const FamilySpec& fs, const GradingSpec& g, int k, int lo, int hi) : fs_(fs), g_(g), k_(k), hi_(hi) {
    for (int t = lo; t <= hi; ++t) {
      for (const auto& tm : ambient_terms(fs, g, k, t)) {
        idx_.emplace(tm, static_cast<int>(terms_.size()));
        terms_.push_back(tm);
      }
      auto part = component_basis(fs, g, k, t);
      for (auto& e : part) {
        basis_.push_back(e);
        basis_aux_.push_back(t);
      }
    }
  }
  int size() const { return static_cast<int>(terms_.size()); }
  const std::vector<Elem>& basis() const { return basis_; }
  int basis_aux(int i) const { return basis_aux_[i]; }
  const Term& term(int i) const { return terms_[i]; }

  // terms above the window are dropped
  SVec vec(const Elem& e) const {
    SVec out;
    for (const auto& [t, c] : e) {
      auto it = idx_.find(t);
      if (it != idx_.end()) {
        out.emplace_back(it->second, c);
        continue;
      }
      if (excluded_constant(fs_, t)) continue;
      if (term_degree(fs_, g_, t) != k_) throw std::logic_error("element of the wrong degree");
      if (aux_degree(fs_, t) > hi_) continue;
      throw std::logic_error("term outside the window below its range");
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  Elem elem(const SVec& v) const {
    Elem e;
    for (const auto& [i, c] : v) e[terms_[i]] = c;
    return e;
  }
  SVec drop_above(const SVec& v, int t) const {
    SVec out;
    for (const auto& [i, c] : v)
      if (aux_degree(fs_, terms_[i]) <= t) out.emplace_back(i, c);
    return out;
  }

 private:
  FamilySpec fs_;
  GradingSpec g_;
  int k_, hi_;
  std::vector<Term> terms_;
  std::map<Term, int> idx_;
  std::vector<Elem> basis_;
  std::vector<int> basis_aux_;
};

int min_aux(const FamilySpec& fs, const Elem& e) {
  int m = 1 << 20;
  for (const auto& [t, c] : e) m = std::min(m, aux_degree(fs, t));
  return m;
}

Elem even_part(const FamilySpec& fs, const Elem& e) {
  Elem out;
  for (const auto& [t, c] : e)
    if (term_parity(fs, t) == 0) out[t] = c;
  return out;
}

// codimension of span(vs) in span(basis), plus a complement drawn from basis
int codim_in(int ambient, const std::vector<SVec>& vs, const std::vector<SVec>& basis, std::vector<int>* comp) {
  Echelon e(ambient);
  for (const auto& v : vs) e.add(v);
  int before = e.rank();
  for (size_t i = 0; i < basis.size(); ++i)
    if (e.add(basis[i]) && comp) comp->push_back(static_cast<int>(i));
  return e.rank() - before;
}

}  // namespace

void check_mu_in_g1(const FamilySpec& fs, const GradingSpec& g, const Elem& mu) {
  std::string why;
  if (!grading_compatible(fs, g, &why)) throw std::invalid_argument(why);
  if (mu.empty()) throw std::invalid_argument("mu is zero");
  for (const auto& [t, c] : mu) {
    if ((t.slot >= 0) != is_field_family(fs.fam)) throw std::invalid_argument("mu has the wrong kind of terms");
    if (term_degree(fs, g, t) != 1) throw std::invalid_argument("mu is not of degree 1");
  }
  if (elem_parity(fs, mu) < 0) throw std::invalid_argument("mu is not homogeneous");
  std::map<int, Elem> by_aux;
  for (const auto& [t, c] : mu) by_aux[aux_degree(fs, t)][t] = c;
  for (const auto& [a, part] : by_aux) {
    Window w(fs, g, 1, a, a);
    std::vector<SVec> b;
    for (const auto& e : w.basis()) b.push_back(w.vec(e));
    Subspace s = span_reduce(w.size(), b);
    if (!subspace_contains(s, w.vec(part))) throw std::invalid_argument("mu is not in g1");
  }
}

CondA check_condition_a(const FamilySpec& fs, const GradingSpec& g, const Elem& mu, int order) {
  check_mu_in_g1(fs, g, mu);
  CondA r;
  int T = window_of(order);
  int lb = aux_lower_bound(fs);
  int hi1 = aux_hi(fs, g, 1, T);
  r.window = hi1;
  Window w1(fs, g, 1, lb, hi1);
  Window w0(fs, g, 0, lb, aux_hi(fs, g, 0, hi1 - min_aux(fs, mu)));
  std::vector<SVec> target;
  for (const auto& e : w1.basis()) target.push_back(w1.vec(e));
  r.dim_g1 = static_cast<int>(target.size());
  std::vector<SVec> all, ints;
  SVec muv = w1.vec(mu);
  for (const auto& b : w0.basis()) {
    SVec v = w1.vec(family_bracket(fs, b, mu));
    all.push_back(v);
    Elem be = even_part(fs, b);
    if (!be.empty() && min_aux(fs, be) >= 0) ints.push_back(w1.vec(family_bracket(fs, be, mu)));
  }
  // g_int is even, so it only moves mu inside the parity part of g1 containing mu
  int pmu = elem_parity(fs, mu);
  std::vector<SVec> same;
  for (const auto& e : w1.basis()) {
    Elem q;
    for (const auto& [t, c] : e)
      if (term_parity(fs, t) == pmu) q[t] = c;
    if (!q.empty()) same.push_back(w1.vec(q));
  }
  r.codim_int_no_mu = codim_in(w1.size(), ints, same, nullptr);
  ints.push_back(muv);
  r.codim_int = codim_in(w1.size(), ints, same, nullptr);
  all.push_back(muv);
  std::vector<int> comp;
  r.codim = codim_in(w1.size(), all, target, &comp);
  r.rank = r.dim_g1 - r.codim;
  for (int i : comp) r.witnesses.push_back(render_elem(fs.ambient(), w1.basis()[i]));
  r.holds = r.codim == 0;
  return r;
}

CondB check_condition_b(const FamilySpec& fs, const GradingSpec& g, const Elem& mu, int order, int margin) {
  check_mu_in_g1(fs, g, mu);
  CondB r;
  int T = window_of(order);
  int lb = aux_lower_bound(fs);
  bool exact = finite_family(fs) || components_finite(g);
  r.margin = exact ? 0 : margin;
  int hi0 = aux_hi(fs, g, 0, T + r.margin);
  r.window = exact ? hi0 : T;
  Window w0(fs, g, 0, lb, hi0);
  Window wm(fs, g, -1, lb, aux_hi(fs, g, -1, hi0 - min_aux(fs, mu)));
  std::vector<SVec> gens;
  for (const auto& v : wm.basis()) gens.push_back(w0.vec(family_bracket(fs, v, mu)));
  Subspace seed = span_reduce(w0.size(), gens);
  Bilinear br = [&](const SVec& x, const SVec& p) {
    return w0.vec(family_bracket(fs, w0.elem(p), w0.elem(x)));
  };
  Subspace cl = seed.dim() ? closure_under(seed, {br}, seed) : seed;
  std::vector<SVec> proj;
  for (const auto& v : cl.basis()) proj.push_back(w0.drop_above(v, r.window));
  Subspace ps = span_reduce(w0.size(), proj);
  for (size_t i = 0; i < w0.basis().size(); ++i) {
    if (w0.basis_aux(static_cast<int>(i)) > r.window) continue;
    ++r.dim_g0;
    if (subspace_contains(ps, w0.vec(w0.basis()[i]))) ++r.reached;
    else r.missing.push_back(render_elem(fs.ambient(), w0.basis()[i]));
  }
  r.holds = r.missing.empty() && r.dim_g0 > 0;
  return r;
}

CondC check_condition_c(const FamilySpec& fs, const GradingSpec& g, int order, int k_max) {
  CondC r;
  int T = window_of(order);
  int lb = aux_lower_bound(fs);
  r.holds = true;
  r.window = T;
  for (int k = 2; k <= k_max; ++k) {
    int hik = aux_hi(fs, g, k, T);
    int codim = 0;
    for (int t = lb; t <= hik; ++t) {
      Window wk(fs, g, k, t, t);
      if (wk.basis().empty()) continue;
      std::vector<SVec> target, spans;
      for (const auto& e : wk.basis()) target.push_back(wk.vec(e));
      for (int t1 = lb; t1 <= t - lb; ++t1) {
        auto a = component_basis(fs, g, 1, t1);
        if (a.empty()) continue;
        auto b = component_basis(fs, g, k - 1, t - t1);
        for (const auto& x : a)
          for (const auto& y : b) spans.push_back(wk.vec(family_bracket(fs, x, y)));
      }
      codim += codim_in(wk.size(), spans, target, nullptr);
    }
    r.codims.push_back(codim);
    r.k_checked = k;
    if (codim) r.holds = false;
  }
  return r;
}

bool check_transitive(const FamilySpec& fs, const GradingSpec& g, int order, int k_max) {
  int T = window_of(order);
  int lb = aux_lower_bound(fs);
  std::vector<Elem> minus;
  for (int s = lb; s <= lb + 3; ++s) {
    auto part = component_basis(fs, g, -1, s);
    minus.insert(minus.end(), part.begin(), part.end());
  }
  for (int j = 0; j <= k_max; ++j) {
    for (int t = lb; t <= aux_hi(fs, g, j, T); ++t) {
      auto xs = component_basis(fs, g, j, t);
      if (xs.empty()) continue;
      std::map<std::pair<int, Term>, int> idx;
      std::vector<SVec> imgs;
      for (const auto& x : xs) {
        std::map<int, Scalar> acc;
        for (size_t v = 0; v < minus.size(); ++v)
          for (const auto& [tm, c] : family_bracket(fs, x, minus[v])) {
            if (excluded_constant(fs, tm)) continue;
            auto [it, ins] = idx.emplace(std::make_pair(static_cast<int>(v), tm), static_cast<int>(idx.size()));
            acc[it->second] += c;
          }
        SVec sv;
        for (const auto& [i, c] : acc)
          if (sgn(c)) sv.emplace_back(i, c);
        imgs.push_back(sv);
      }
      int n = static_cast<int>(idx.size());
      if (span_reduce(n, imgs).dim() != static_cast<int>(xs.size())) return false;
    }
  }
  return true;
}

ClosureReport parity_part_closure(const FamilySpec& fs, const GradingSpec& g, int parity, const Elem& target,
                                  int order, int margin) {
  ClosureReport r;
  int T = window_of(order);
  int lb = aux_lower_bound(fs);
  bool exact = finite_family(fs) || components_finite(g);
  int m = exact ? 0 : margin;
  int hi0 = aux_hi(fs, g, 0, T + m);
  r.window = exact ? hi0 : T;
  Window w0(fs, g, 0, lb, hi0);
  Window w1(fs, g, 1, lb, aux_hi(fs, g, 1, hi0 - lb));
  Window wm(fs, g, -1, lb, aux_hi(fs, g, -1, hi0 - lb));
  std::vector<Elem> us;
  for (const auto& u : w1.basis()) {
    Elem p;
    for (const auto& [t, c] : u)
      if (term_parity(fs, t) == parity) p[t] = c;
    if (!p.empty()) us.push_back(p);
  }
  std::vector<SVec> gens;
  for (const auto& v : wm.basis())
    for (const auto& u : us) gens.push_back(w0.vec(family_bracket(fs, v, u)));
  Subspace seed = span_reduce(w0.size(), gens);
  Bilinear br = [&](const SVec& x, const SVec& p) {
    return w0.vec(family_bracket(fs, w0.elem(p), w0.elem(x)));
  };
  Subspace cl = seed.dim() ? closure_under(seed, {br}, seed) : seed;
  std::vector<SVec> proj;
  for (const auto& v : cl.basis()) proj.push_back(w0.drop_above(v, r.window));
  Subspace ps = span_reduce(w0.size(), proj);
  for (size_t i = 0; i < w0.basis().size(); ++i)
    if (w0.basis_aux(static_cast<int>(i)) <= r.window) ++r.dim_g0;
  r.dim_closure = ps.dim();
  r.contains_target = subspace_contains(ps, w0.vec(target));
  return r;
}

// ---- parameter expressions ----

namespace {

class ParamExpr {
 public:
  ParamExpr(const std::string& s, const RowParams& p) : s_(s), p_(p) {}
  Scalar run() {
    Scalar v = sum();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("bad parameter expression '" + s_ + "'");
    return v;
  }

 private:
  const std::string& s_;
  const RowParams& p_;
  std::size_t pos_ = 0;
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  Scalar sum() {
    Scalar v = product();
    while (peek() == '+' || peek() == '-') {
      char op = s_[pos_++];
      Scalar w = product();
      v = op == '+' ? Scalar(v + w) : Scalar(v - w);
    }
    return v;
  }
  Scalar product() {
    Scalar v = unary();
    while (peek() == '*' || peek() == '/') {
      char op = s_[pos_++];
      Scalar w = unary();
      if (op == '/' && sgn(w) == 0) throw std::invalid_argument("division by zero in '" + s_ + "'");
      v = op == '*' ? Scalar(v * w) : Scalar(v / w);
    }
    return v;
  }
  Scalar unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return atom();
  }
  Scalar atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = sum();
      if (peek() != ')') throw std::invalid_argument("missing ')' in '" + s_ + "'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(std::stol(s_.substr(st, pos_ - st)));
    }
    std::size_t st = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(st, pos_ - st);
    auto need = [&](const auto& opt) -> Scalar {
      if (!opt) throw std::invalid_argument("parameter " + name + " is not set");
      return Scalar(*opt);
    };
    if (name == "n") return need(p_.n);
    if (name == "alpha") return need(p_.alpha);
    if (name == "beta") return need(p_.beta);
    throw std::invalid_argument("unknown name '" + name + "' in '" + s_ + "'");
  }
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// replaces {expr} slots; a negative value flips a preceding + or -
std::string expand(const std::string& text, const RowParams& p) {
  std::string out;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      out += text[i++];
      continue;
    }
    size_t j = text.find('}', i);
    if (j == std::string::npos) throw std::invalid_argument("unterminated '{' in '" + text + "'");
    Scalar v = eval_param_expr(text.substr(i + 1, j - i - 1), p);
    if (sgn(v) < 0) {
      size_t k = out.find_last_not_of(' ');
      if (k != std::string::npos && (out[k] == '+' || out[k] == '-')) {
        out[k] = out[k] == '+' ? '-' : '+';
        v = -v;
      } else if (k != std::string::npos) {
        throw std::invalid_argument("negative parameter value inside a product in '" + text + "'");
      }
    }
    out += v.get_str();
    i = j + 1;
  }
  return out;
}

int eval_int(const std::string& text, const RowParams& p) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  Scalar v = eval_param_expr(t, p);
  if (v.get_den() != 1) throw std::invalid_argument("non-integer size '" + text + "'");
  return static_cast<int>(v.get_num().get_si());
}

bool constraint_ok(const std::string& c, const RowParams& p) {
  auto ne = c.find("!=");
  if (ne != std::string::npos)
    return eval_param_expr(c.substr(0, ne), p) != eval_param_expr(c.substr(ne + 2), p);
  std::string t = trim(c);
  const std::string head = "not_of_form(";
  if (t.rfind(head, 0) == 0 && t.back() == ')') {
    // value != a + c/b for every positive integer b
    std::vector<std::string> args;
    std::stringstream ss(t.substr(head.size(), t.size() - head.size() - 1));
    std::string a;
    while (std::getline(ss, a, ',')) args.push_back(a);
    if (args.size() != 3) throw std::invalid_argument("bad constraint '" + c + "'");
    Scalar v = eval_param_expr(args[0], p), base = eval_param_expr(args[1], p), num = eval_param_expr(args[2], p);
    Scalar d = v - base;
    if (sgn(d) <= 0) return true;
    Scalar b = num / d;
    return !(b.get_den() == 1 && sgn(b) > 0);
  }
  throw std::invalid_argument("bad constraint '" + c + "'");
}

}  // namespace

Scalar eval_param_expr(const std::string& text, const RowParams& p) { return ParamExpr(text, p).run(); }

std::string grading_str(const GradingSpec& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.a.size(); ++i) os << (i ? "," : "") << g.a[i];
  os << "|";
  for (size_t j = 0; j < g.b.size(); ++j) os << (j ? "," : "") << g.b[j];
  os << ")";
  return os.str();
}

GradingSpec parse_grading(const std::string& text, int m, int n) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  auto bar = t.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("grading needs '|'");
  auto side = [&](const std::string& s, int len) {
    std::vector<std::string> toks;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!trim(tok).empty()) toks.push_back(trim(tok));
    int fixed = 0, fills = 0;
    for (const auto& k : toks) (k == "0..0" ? fills : fixed)++;
    if (fills > 1 || (fills == 0 && fixed != len) || fixed > len)
      throw std::invalid_argument("grading '" + text + "' does not fit the ambient");
    std::vector<int> out;
    for (const auto& k : toks) {
      if (k == "0..0") out.insert(out.end(), len - fixed, 0);
      else out.push_back(std::stoi(k));
    }
    return out;
  };
  GradingSpec g;
  g.a = side(t.substr(0, bar), m);
  g.b = side(t.substr(bar + 1), n);
  return g;
}

std::string default_table_path() {
  if (const char* env = std::getenv("SUPERRIGID_TABLES")) return env;
  return std::string(SUPERRIGID_DATA_DIR) + "/table_rows.json";
}

std::vector<TableRow> load_table_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table data " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.value("version", 0) != 1) throw std::runtime_error("unsupported table data version");
  std::vector<TableRow> rows;
  for (const auto& r : j.at("rows")) {
    TableRow t;
    t.table = r.at("table").get<int>();
    t.id = r.at("id").get<std::string>();
    t.family = r.at("family").get<std::string>();
    t.hyperbolic = r.value("hyperbolic", false);
    t.m = r.at("m").get<std::string>();
    t.n = r.at("n").get<std::string>();
    t.grading = r.at("grading").get<std::string>();
    t.mu = r.at("mu").get<std::string>();
    t.mu_alt = r.value("mu_alt", std::string());
    t.params = r.value("params", std::vector<std::string>{});
    t.n_min = r.value("n_min", 0);
    t.constraints = r.value("constraints", std::vector<std::string>{});
    t.beta = r.value("beta", std::string());
    rows.push_back(std::move(t));
  }
  return rows;
}

const TableRow& find_row(const std::vector<TableRow>& rows, int table, const std::string& id) {
  for (const auto& r : rows)
    if (r.table == table && r.id == id) return r;
  throw std::invalid_argument("no row " + id + " in table " + std::to_string(table));
}

RowParams smallest_params(const TableRow& row, const Scalar& alpha) {
  RowParams p;
  auto has = [&](const char* s) { return std::find(row.params.begin(), row.params.end(), s) != row.params.end(); };
  if (has("n")) p.n = row.n_min;
  if (has("alpha")) p.alpha = alpha;
  if (has("beta")) p.beta = Scalar(1, 2);
  return p;
}

RowInstance instantiate(const TableRow& row, const RowParams& p) {
  auto has = [&](const std::string& s) { return std::find(row.params.begin(), row.params.end(), s) != row.params.end(); };
  RowParams q = p;
  for (const char* name : {"n", "alpha", "beta"}) {
    bool given = (std::string(name) == "n" && p.n) || (std::string(name) == "alpha" && p.alpha) ||
                 (std::string(name) == "beta" && p.beta);
    if (given && !has(name)) throw std::invalid_argument("row " + row.id + " takes no parameter " + name);
    if (!given && has(name)) throw std::invalid_argument("row " + row.id + " needs parameter " + name);
  }
  if (q.n && *q.n < row.n_min)
    throw std::invalid_argument("row " + row.id + " needs n >= " + std::to_string(row.n_min));
  if (!row.beta.empty()) q.beta = eval_param_expr(row.beta, q);
  for (const auto& c : row.constraints)
    if (!constraint_ok(c, q)) throw std::invalid_argument("parameter constraint violated: " + c);
  RowInstance r;
  r.row = &row;
  r.params = q;
  r.fs.fam = family_from_name(row.family);
  r.fs.m = eval_int(row.m, q);
  r.fs.n = eval_int(row.n, q);
  r.fs.hyperbolic = row.hyperbolic;
  if (q.beta) r.fs.beta = *q.beta;
  Ambient amb = r.fs.ambient();
  r.grading = parse_grading(row.grading, amb.m, amb.n);
  r.mu_text = expand(row.mu, q);
  r.mu = parse_elem(r.mu_text, amb);
  if (!row.mu_alt.empty()) r.mu_alt = parse_elem(expand(row.mu_alt, q), amb);
  check_mu_in_g1(r.fs, r.grading, r.mu);
  int want = row.table == 1 ? 0 : 1;
  if (elem_parity(r.fs, r.mu) != want)
    throw std::invalid_argument(std::string("mu must be ") + (want ? "odd" : "even") + " for table " +
                                std::to_string(row.table));
  return r;
}

AdmissibilityReport verify_row(const RowInstance& r, int order, int k_max) {
  AdmissibilityReport rep;
  rep.id = "T" + std::to_string(r.row->table) + ":" + r.row->id;
  rep.family = r.fs.str();
  rep.grading = grading_str(r.grading);
  rep.mu = render_elem(r.fs.ambient(), r.mu);
  rep.order = order;
  rep.window = window_of(order);
  rep.a = check_condition_a(r.fs, r.grading, r.mu, order);
  rep.b = check_condition_b(r.fs, r.grading, r.mu, order);
  rep.c = check_condition_c(r.fs, r.grading, order, k_max);
  rep.transitive = check_transitive(r.fs, r.grading, order, k_max);
  if (finite_family(r.fs)) rep.notes.push_back("finite-dimensional: whole components checked");
  else if (components_finite(r.grading)) rep.notes.push_back("finite components: whole components checked");
  else rep.notes.push_back("aux window <= " + std::to_string(rep.window) + ", closure margin " +
                           std::to_string(rep.b.margin));
  if (r.mu_alt) {
    if (*r.mu_alt == r.mu) {
      rep.notes.push_back("second printed form of mu coincides");
    } else {
      CondA a2 = check_condition_a(r.fs, r.grading, *r.mu_alt, order);
      CondB b2 = check_condition_b(r.fs, r.grading, *r.mu_alt, order);
      rep.notes.push_back(std::string("second printed form differs: (a) ") + (a2.holds ? "holds" : "fails") +
                          ", (b) " + (b2.holds ? "holds" : "fails"));
    }
  }
  return rep;
}

AdmissibilityReport verify_table_row(int table, const std::string& id, const RowParams& p, int order) {
  static const std::vector<TableRow> rows = load_table_rows();
  return verify_row(instantiate(find_row(rows, table, id), p), order);
}

}  // namespace superrigid
