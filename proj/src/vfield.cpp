#include "superrigid/vfield.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superrigid {

VectorField::VectorField(const Ambient& a, int order) : amb(a) {
  P.assign(a.m, Jet(a, order));
  Q.assign(a.n, Jet(a, order));
}

VectorField VectorField::coordinate(const Ambient& a, int g) {
  return term(a, g, Jet::constant(a, 1));
}

VectorField VectorField::term(const Ambient& a, int g, const Jet& c) {
  if (g < 0 || g >= a.m + a.n) throw std::out_of_range("generator out of range");
  VectorField X(a);
  X.coeff(g) = c;
  return X;
}

int VectorField::parity() const {
  int p = -2;
  auto merge = [&](int q) {
    if (q < 0) return false;
    if (p == -2) p = q;
    return p == q;
  };
  for (const auto& c : P)
    if (!c.is_zero() && !merge(c.parity())) return -1;
  for (const auto& c : Q)
    if (!c.is_zero() && !merge(c.parity() < 0 ? -1 : (c.parity() + 1) % 2)) return -1;
  return p == -2 ? 0 : p;
}

bool VectorField::is_zero() const {
  for (const auto& c : P)
    if (!c.is_zero()) return false;
  for (const auto& c : Q)
    if (!c.is_zero()) return false;
  return true;
}

int VectorField::order() const {
  int o = kInf;
  for (const auto& c : P) o = std::min(o, c.order());
  for (const auto& c : Q) o = std::min(o, c.order());
  return o;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (amb != o.amb) throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < amb.m; ++i) P[i] += o.P[i];
  for (int j = 0; j < amb.n; ++j) Q[j] += o.Q[j];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (amb != o.amb) throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < amb.m; ++i) P[i] -= o.P[i];
  for (int j = 0; j < amb.n; ++j) Q[j] -= o.Q[j];
  return *this;
}

VectorField& VectorField::operator*=(const Scalar& c) {
  for (auto& x : P) x *= c;
  for (auto& x : Q) x *= c;
  return *this;
}

bool VectorField::operator==(const VectorField& o) const {
  return amb == o.amb && P == o.P && Q == o.Q;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < amb.m + amb.n; ++g) {
    const Jet& c = coeff(g);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string name = g < amb.m ? amb.even_name(g) : amb.odd_name(g - amb.m);
    os << "(" << c.str() << ")*d" << name;
  }
  return first ? "0" : os.str();
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(const Scalar& c, VectorField a) { return a *= c; }

VectorField operator*(const Jet& f, const VectorField& X) {
  VectorField out(X.amb);
  for (int g = 0; g < X.amb.m + X.amb.n; ++g) out.coeff(g) = mul(f, X.coeff(g));
  return out;
}

Jet apply(const VectorField& X, const Jet& f) {
  if (X.amb != f.ambient()) throw std::invalid_argument("ambient mismatch");
  Jet out(f.ambient(), kInf);
  bool touched = false;
  for (int g = 0; g < X.amb.m + X.amb.n; ++g) {
    const Jet& c = X.coeff(g);
    if (c.is_zero() && c.exact()) continue;
    Jet term = mul(c, partial(f, g));
    out += term;
    touched = true;
  }
  if (!touched) out.set_order(f.order());
  return out;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  if (X.amb != Y.amb) throw std::invalid_argument("ambient mismatch");
  int px = X.parity(), py = Y.parity();
  if (px < 0 || py < 0) throw std::invalid_argument("mixed parity field in bracket");
  VectorField out(X.amb);
  for (int g = 0; g < X.amb.m + X.amb.n; ++g) {
    Jet a = apply(X, Y.coeff(g));
    Jet b = apply(Y, X.coeff(g));
    out.coeff(g) = (px & py) ? a + b : a - b;
  }
  return out;
}

Jet divergence(const VectorField& X) {
  const Ambient& amb = X.amb;
  Jet out(amb);
  for (int i = 0; i < amb.m; ++i) out += partial_x(X.P[i], i);
  for (int j = 0; j < amb.n; ++j) {
    out += partial_xi(parity_part(X.Q[j], 0), j);
    out -= partial_xi(parity_part(X.Q[j], 1), j);
  }
  return out;
}

Jet odd_laplacian(const Jet& f) {
  const Ambient& amb = f.ambient();
  Jet out(amb, f.exact() ? kInf : f.order() - 1);
  for (int i = 0; i < amb.m && i < amb.n; ++i) {
    if (i == amb.tau) continue;
    out += partial_x(partial_xi(f, i), i);
  }
  return out;
}

Jet div_beta(const Jet& f, const Scalar& beta) {
  const Ambient& amb = f.ambient();
  if (amb.tau < 0) throw std::invalid_argument("div_beta needs a designated tau");
  Jet dt = partial_xi(f, amb.tau);
  Jet e = euler(dt) - dt * (beta * amb.m);
  return odd_laplacian(f) + e;
}

DPair fd_bracket(const Jet& f1, int s1, const Jet& f2, int s2, const VectorField& D1,
                 const VectorField& D2, bool plus, bool odd_mode) {
  int p1 = f1.parity(), p2 = f2.parity();
  if (p1 < 0 || p2 < 0) throw std::invalid_argument("parity inconsistency in fd_bracket");
  const VectorField& A = s1 == 1 ? D1 : D2;
  const VectorField& B = s2 == 1 ? D1 : D2;
  int e = odd_mode ? ((p1 + 1) * (p2 + 1)) & 1 : (p1 * p2) & 1;
  Scalar sign = (plus ? 1 : -1) * (e ? -1 : 1);
  Jet t1 = mul(f1, apply(A, f2));
  Jet t2 = mul(f2, apply(B, f1)) * sign;
  DPair out{Jet(f1.ambient()), Jet(f1.ambient())};
  (s2 == 1 ? out.c1 : out.c2) += t1;
  (s1 == 1 ? out.c1 : out.c2) += t2;
  return out;
}

VectorField realize(const DPair& e, const VectorField& D1, const VectorField& D2) {
  return e.c1 * D1 + e.c2 * D2;
}

VectorField fd_bracket_field(const Jet& f1, const VectorField& D1, const Jet& f2,
                             const VectorField& D2, bool plus, bool odd_mode) {
  return realize(fd_bracket(f1, 1, f2, 2, D1, D2, plus, odd_mode), D1, D2);
}

int GradingSpec::weight(const Monomial& mono) const {
  int w = 0;
  for (size_t i = 0; i < a.size(); ++i) w += a[i] * mono.ex[i];
  for (size_t j = 0; j < b.size(); ++j)
    if (mono.has_odd(static_cast<int>(j))) w += b[j];
  return w;
}

std::string GradingSpec::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "|";
  for (size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << b[j];
  os << ")";
  return os.str();
}

GradingSpec GradingSpec::principal(const Ambient& amb) {
  GradingSpec g;
  g.a.assign(amb.m, 1);
  g.b.assign(amb.n, 1);
  return g;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::S: return "S";
    case Family::H: return "H";
    case Family::K: return "K";
    case Family::HO: return "HO";
    case Family::SHO: return "SHO";
    case Family::KO: return "KO";
    case Family::SKO: return "SKO";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  for (Family f : {Family::W, Family::S, Family::H, Family::K, Family::HO, Family::SHO,
                   Family::KO, Family::SKO})
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown family: " + s);
}

bool is_field_family(Family f) { return f == Family::W || f == Family::S; }

bool odd_bracket_family(Family f) {
  return f == Family::HO || f == Family::SHO || f == Family::KO || f == Family::SKO;
}

Ambient FamilySpec::ambient() const {
  if (fam == Family::KO || fam == Family::SKO) return Ambient(m, n, n - 1);
  return Ambient(m, n);
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  os << family_name(fam) << "(" << m << "," << n;
  if (fam == Family::SKO) os << ";" << beta.get_str();
  os << ")";
  return os.str();
}

void elem_add(Elem& a, const Elem& b, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (const auto& [t, v] : b) {
    auto [it, ins] = a.emplace(t, c * v);
    if (!ins) {
      it->second += c * v;
      if (sgn(it->second) == 0) a.erase(it);
    }
  }
}

Elem elem_scaled(const Elem& a, const Scalar& c) {
  Elem out;
  elem_add(out, a, c);
  return out;
}

Elem from_field(const VectorField& X) {
  Elem e;
  for (int g = 0; g < X.amb.m + X.amb.n; ++g)
    for (const auto& [m, c] : X.coeff(g).terms()) e[Term{m, g}] = c;
  return e;
}

Elem from_jet(const Jet& f) {
  Elem e;
  for (const auto& [m, c] : f.terms()) e[Term{m, -1}] = c;
  return e;
}

VectorField to_field(const Ambient& amb, const Elem& e) {
  VectorField X(amb);
  for (const auto& [t, c] : e) {
    if (t.slot < 0) throw std::invalid_argument("function term in vector field element");
    X.coeff(t.slot).add_term(t.mono, c);
  }
  return X;
}

Jet to_jet(const Ambient& amb, const Elem& e) {
  Jet f(amb);
  for (const auto& [t, c] : e) {
    if (t.slot >= 0) throw std::invalid_argument("field term in function element");
    f.add_term(t.mono, c);
  }
  return f;
}

int term_parity(const FamilySpec& fs, const Term& t) {
  int p = t.mono.parity();
  if (t.slot >= 0) return (p + (t.slot >= fs.m ? 1 : 0)) & 1;
  return (p + (odd_bracket_family(fs.fam) ? 1 : 0)) & 1;
}

int elem_parity(const FamilySpec& fs, const Elem& e) {
  int p = -2;
  for (const auto& [t, c] : e) {
    int q = term_parity(fs, t);
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

std::string elem_str(const Ambient& amb, const Elem& e) {
  if (e.empty()) return "0";
  bool field = e.begin()->first.slot >= 0;
  if (field) return to_field(amb, e).str();
  return to_jet(amb, e).str();
}

int grading_shift(const FamilySpec& fs, const GradingSpec& g) {
  switch (fs.fam) {
    case Family::W:
    case Family::S: return 0;
    case Family::H: return fs.m >= 2 ? g.a[0] + g.a[1] : 2 * g.b[0];
    case Family::K: return g.a[fs.m - 1];
    case Family::HO:
    case Family::SHO: return g.a[0] + g.b[0];
    case Family::KO:
    case Family::SKO: return g.b[fs.n - 1];
  }
  return 0;
}

int term_degree(const FamilySpec& fs, const GradingSpec& g, const Term& t) {
  int w = g.weight(t.mono);
  if (t.slot >= 0) return w - g.gen_weight(t.slot);
  return w - grading_shift(fs, g);
}

GradingSpec aux_grading(const FamilySpec& fs) {
  Ambient amb = fs.ambient();
  GradingSpec g = GradingSpec::principal(amb);
  if (fs.fam == Family::K) g.a[fs.m - 1] = 2;
  if (fs.fam == Family::KO || fs.fam == Family::SKO) g.b[fs.n - 1] = 2;
  return g;
}

int aux_degree(const FamilySpec& fs, const Term& t) {
  GradingSpec g = aux_grading(fs);
  return term_degree(fs, g, t);
}

int aux_lower_bound(const FamilySpec& fs) {
  switch (fs.fam) {
    case Family::K:
    case Family::KO:
    case Family::SKO: return -2;
    default: return -1;
  }
}

bool grading_compatible(const FamilySpec& fs, const GradingSpec& g, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  Ambient amb = fs.ambient();
  if (static_cast<int>(g.a.size()) != amb.m || static_cast<int>(g.b.size()) != amb.n)
    return fail("grading length does not match ambient");
  int s = grading_shift(fs, g);
  switch (fs.fam) {
    case Family::W:
    case Family::S: return true;
    case Family::H:
    case Family::K: {
      int pairs = fs.m / 2;
      for (int i = 0; i < pairs; ++i)
        if (g.a[2 * i] + g.a[2 * i + 1] != s) return fail("p/q weights do not add up");
      if (fs.hyperbolic) {
        int t = fs.n / 2;
        for (int i = 0; i < t; ++i)
          if (g.b[i] + g.b[t + i] != s) return fail("odd pair weights do not add up");
      } else {
        for (int j = 0; j < fs.n; ++j)
          if (2 * g.b[j] != s) return fail("odd weights do not match");
      }
      return true;
    }
    case Family::HO:
    case Family::SHO:
      for (int i = 0; i < fs.m; ++i)
        if (g.a[i] + g.b[i] != s) return fail("x_i + xi_i weights not constant");
      return true;
    case Family::KO:
    case Family::SKO:
      for (int i = 0; i < fs.m; ++i)
        if (g.a[i] + g.b[i] != s) return fail("x_i + xi_i weights differ from tau");
      return true;
  }
  return true;
}

namespace {

int aux_shift(const FamilySpec& fs) {
  if (is_field_family(fs.fam)) return 0;
  return 2;
}

void rec_weighted(const std::vector<int>& w, size_t i, int left, Monomial& cur,
                  std::vector<Monomial>& out) {
  if (i == w.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * w[i] <= left; ++e) {
    cur.ex[i] = static_cast<std::uint8_t>(e);
    rec_weighted(w, i + 1, left - e * w[i], cur, out);
  }
  cur.ex[i] = 0;
}

// monomials with aux weight exactly W
std::vector<Monomial> aux_monomials(const FamilySpec& fs, int W) {
  std::vector<Monomial> out;
  if (W < 0) return out;
  GradingSpec ag = aux_grading(fs);
  Ambient amb = fs.ambient();
  for (std::uint32_t s = 0; s < (1u << amb.n); ++s) {
    int ws = 0;
    for (int j = 0; j < amb.n; ++j)
      if ((s >> j) & 1u) ws += ag.b[j];
    if (ws > W) continue;
    std::vector<Monomial> ev;
    Monomial cur;
    rec_weighted(ag.a, 0, W - ws, cur, ev);
    for (auto& mm : ev) {
      mm.odd = s;
      out.push_back(mm);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool excluded_function(const FamilySpec& fs, const Monomial& mono) {
  bool constant = mono.xdeg() == 0 && mono.odd == 0;
  switch (fs.fam) {
    case Family::H:
    case Family::HO:
    case Family::SHO:
      return constant;
    default:
      return false;
  }
}

}  // namespace

std::vector<Term> ambient_terms(const FamilySpec& fs, const GradingSpec& g, int k, int t) {
  std::vector<Term> out;
  Ambient amb = fs.ambient();
  if (is_field_family(fs.fam)) {
    for (int slot = 0; slot < amb.m + amb.n; ++slot)
      for (const auto& mono : aux_monomials(fs, t + 1)) {
        Term tm{mono, slot};
        if (term_degree(fs, g, tm) == k) out.push_back(tm);
      }
  } else {
    for (const auto& mono : aux_monomials(fs, t + aux_shift(fs))) {
      if (excluded_function(fs, mono)) continue;
      Term tm{mono, -1};
      if (term_degree(fs, g, tm) == k) out.push_back(tm);
    }
  }
  return out;
}

namespace {

Jet constraint_image(const FamilySpec& fs, const Term& t) {
  Ambient amb = fs.ambient();
  switch (fs.fam) {
    case Family::S: return divergence(VectorField::term(amb, t.slot, Jet::monomial(amb, t.mono)));
    case Family::SHO: return odd_laplacian(Jet::monomial(amb, t.mono));
    case Family::SKO: return div_beta(Jet::monomial(amb, t.mono), fs.beta);
    default: return Jet(amb);
  }
}

bool has_constraint(Family f) { return f == Family::S || f == Family::SHO || f == Family::SKO; }

// term removed when passing to the derived algebra, if any
bool derived_exclusion(const FamilySpec& fs, Term& out) {
  Ambient amb = fs.ambient();
  out = Term{};
  if (fs.fam == Family::S && fs.m == 1 && fs.n >= 1) {
    out.mono.odd = (1u << fs.n) - 1u;
    out.slot = 0;
    return true;
  }
  if (fs.fam == Family::SHO) {
    out.mono.odd = (1u << fs.m) - 1u;
    return true;
  }
  if (fs.fam == Family::SKO) {
    int nx = fs.m;
    if (fs.beta == 1) {
      out.mono.odd = (1u << amb.n) - 1u;
      return true;
    }
    if (nx > 0 && fs.beta == frac(nx - 2, nx)) {
      out.mono.odd = (1u << nx) - 1u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Elem> component_basis(const FamilySpec& fs, const GradingSpec& g, int k, int t) {
  std::vector<Term> terms = ambient_terms(fs, g, k, t);
  std::vector<Elem> out;
  if (!has_constraint(fs.fam)) {
    for (const auto& tm : terms) out.push_back(Elem{{tm, Scalar(1)}});
    return out;
  }
  std::map<Monomial, int> rowidx;
  std::vector<std::map<int, Scalar>> rows;
  for (size_t c = 0; c < terms.size(); ++c) {
    Jet img = constraint_image(fs, terms[c]);
    for (const auto& [mono, v] : img.terms()) {
      auto [it, ins] = rowidx.emplace(mono, static_cast<int>(rows.size()));
      if (ins) rows.emplace_back();
      rows[it->second][static_cast<int>(c)] += v;
    }
  }
  std::vector<SVec> fn;
  for (auto& r : rows) {
    SVec v;
    for (auto& [c, val] : r)
      if (sgn(val) != 0) v.emplace_back(c, val);
    if (!v.empty()) fn.push_back(v);
  }
  Term excl;
  if (derived_exclusion(fs, excl))
    for (size_t c = 0; c < terms.size(); ++c)
      if (terms[c] == excl) fn.push_back(SVec{{static_cast<int>(c), 1}});
  for (const auto& kv : kernel_basis(static_cast<int>(terms.size()), fn)) {
    Elem e;
    for (const auto& [c, val] : kv) e[terms[c]] = val;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Elem> basis_of_degree(const FamilySpec& fs, const GradingSpec& g, int k,
                                  int max_aux) {
  std::string why;
  if (!grading_compatible(fs, g, &why)) throw std::invalid_argument(why);
  std::vector<Elem> out;
  for (int t = aux_lower_bound(fs); t <= max_aux; ++t) {
    auto part = component_basis(fs, g, k, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool components_finite(const GradingSpec& g) {
  for (int w : g.a)
    if (w <= 0) return false;
  return true;
}

int max_aux_of_degree(const FamilySpec& fs, const GradingSpec& g, int k) {
  if (!components_finite(g)) return kInf;
  int mx = 0;
  for (int w : g.a) mx = std::max(mx, std::abs(w));
  for (int w : g.b) mx = std::max(mx, std::abs(w));
  int n = static_cast<int>(g.b.size());
  return std::abs(k) + std::abs(grading_shift(fs, g)) + mx + n * mx + n + 4;
}

std::map<int, VectorField> graded_component(const VectorField& X, const GradingSpec& g) {
  std::map<int, VectorField> out;
  for (int s = 0; s < X.amb.m + X.amb.n; ++s)
    for (const auto& [mono, c] : X.coeff(s).terms()) {
      int d = g.weight(mono) - g.gen_weight(s);
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, VectorField(X.amb)).first;
      it->second.coeff(s).add_term(mono, c);
    }
  return out;
}

}  // namespace superrigid
