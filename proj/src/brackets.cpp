#include "superrigid/brackets.hpp"

#include <sstream>
#include <stdexcept>

namespace superrigid {

namespace {

int require_parity(const Jet& f, const char* what) {
  int p = f.parity();
  if (p < 0) throw std::invalid_argument(std::string("mixed parity argument to ") + what);
  return p;
}

Scalar sgn_pow(int e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

void require_paired(const Ambient& amb) {
  bool ok = (amb.tau < 0 && amb.n == amb.m) || (amb.tau == amb.m && amb.n == amb.m + 1);
  if (!ok) throw std::invalid_argument("ambient is not O(n,n) or O(n,n+1)");
}

Jet euler_minus_two(const Jet& f) { return euler(f) - f * Scalar(2); }

Jet trunc_to(const Jet& f, int nu) { return nu >= kInf ? f : truncate(f, nu); }

}  // namespace

Jet buttin(const Jet& f, const Jet& g, int declared) {
  check_same_ambient(f, g);
  const Ambient& amb = f.ambient();
  require_paired(amb);
  int pf = declared >= 0 ? declared : require_parity(f, "buttin");
  Jet out(amb);
  for (int i = 0; i < amb.m; ++i) {
    out += mul(partial_x(f, i), partial_xi(g, i));
    Jet t = mul(partial_xi(f, i), partial_x(g, i));
    if (pf) out -= t;
    else out += t;
  }
  return out;
}

Jet k_bracket(const Jet& f, const Jet& g, int declared) {
  check_same_ambient(f, g);
  const Ambient& amb = f.ambient();
  if (amb.tau < 0) throw std::invalid_argument("k_bracket needs a designated tau");
  require_paired(amb);
  int pf = declared >= 0 ? declared : require_parity(f, "k_bracket");
  Jet out = buttin(f, g, pf);
  out += mul(euler_minus_two(f), partial_xi(g, amb.tau));
  Jet t = mul(partial_xi(f, amb.tau), euler_minus_two(g));
  if (pf) out -= t;
  else out += t;
  return out;
}

Jet gen_poisson_even(const Jet& f, const Jet& g, bool hyperbolic, int declared) {
  check_same_ambient(f, g);
  const Ambient& amb = f.ambient();
  if (amb.tau >= 0) throw std::invalid_argument("even Poisson bracket takes no tau");
  if (hyperbolic && amb.n % 2) throw std::invalid_argument("hyperbolic pairing needs even n");
  int pf = declared >= 0 ? declared : require_parity(f, "gen_poisson_even");
  int k = amb.m / 2;
  Jet out(amb);
  for (int i = 0; i < k; ++i) {
    out += mul(partial_x(f, 2 * i), partial_x(g, 2 * i + 1));
    out -= mul(partial_x(f, 2 * i + 1), partial_x(g, 2 * i));
  }
  Jet mid(amb);
  if (hyperbolic) {
    int h = amb.n / 2;
    for (int j = 0; j < h; ++j) {
      mid += mul(partial_xi(f, j), partial_xi(g, j + h));
      mid += mul(partial_xi(f, j + h), partial_xi(g, j));
    }
  } else {
    for (int j = 0; j < amb.n; ++j) mid += mul(partial_xi(f, j), partial_xi(g, j));
  }
  if (pf) out -= mid;
  else out += mid;
  if (amb.m % 2) {
    int t = amb.m - 1;
    auto two_minus_e = [&](const Jet& a) {
      Jet e = euler(a) - mul(Jet::x(amb, t), partial_x(a, t));
      return a * Scalar(2) - e;
    };
    out += mul(two_minus_e(f), partial_x(g, t));
    out -= mul(partial_x(f, t), two_minus_e(g));
  }
  return out;
}

Jet quasi_poisson(const VectorField& Z, const std::vector<FieldPair>& pairs, const Jet& f,
                  const Jet& g) {
  check_same_ambient(f, g);
  if (Z.amb != f.ambient()) throw std::invalid_argument("ambient mismatch");
  Jet out = mul(apply(Z, f), g) - mul(f, apply(Z, g));
  for (const auto& [X, Y] : pairs) {
    if (X.amb != f.ambient() || Y.amb != f.ambient()) throw std::invalid_argument("ambient mismatch");
    out += mul(apply(X, f), apply(Y, g));
    out -= mul(apply(Y, f), apply(X, g));
  }
  return out;
}

Jet jacobi_mayer(const Jet& f, const Jet& g) {
  check_same_ambient(f, g);
  const Ambient& amb = f.ambient();
  if (amb.m != 3 || amb.n != 0) throw std::invalid_argument("jacobi_mayer needs O(3,0)");
  Jet fx = partial_x(f, 0), fy = partial_x(f, 1), fz = partial_x(f, 2);
  Jet gx = partial_x(g, 0), gy = partial_x(g, 1), gz = partial_x(g, 2);
  return mul(Jet::x(amb, 0), mul(fx, gz) - mul(fz, gx)) + (mul(fx, gy) - mul(fy, gx));
}

Jet jet_inverse(const Jet& phi, int nu) {
  Scalar c = phi.coeff(Monomial::one());
  if (sgn(c) == 0) throw std::invalid_argument("jet is not invertible");
  const Ambient& amb = phi.ambient();
  Jet u = trunc_to(phi * Scalar(1 / c) - Jet::constant(amb, 1), nu);
  Jet out = Jet::constant(amb, 1);
  Jet pw = Jet::constant(amb, 1);
  int cap = (nu >= kInf ? 64 : nu) + amb.n + 2;
  for (int k = 1; k <= cap; ++k) {
    pw = trunc_to(mul(pw, u), nu) * Scalar(-1);
    if (pw.is_zero()) break;
    out += pw;
  }
  out = trunc_to(out * Scalar(1 / c), nu);
  return out;
}

bool BracketKind::odd() const {
  switch (tag) {
    case Tag::Buttin:
    case Tag::KBracket: return true;
    case Tag::Gauged: return base->odd();
    default: return false;
  }
}

Jet BracketKind::eval(const Jet& f, const Jet& g) const {
  if (f.parity() < 0) {
    return eval(parity_part(f, 0), g) + eval(parity_part(f, 1), g);
  }
  switch (tag) {
    case Tag::Buttin: return buttin(f, g);
    case Tag::KBracket: return k_bracket(f, g);
    case Tag::GenPoissonEven: return gen_poisson_even(f, g, hyperbolic);
    case Tag::Quasi: return quasi_poisson(Z, pairs, f, g);
    case Tag::JacobiMayer: return jacobi_mayer(f, g);
    case Tag::Gauged: return gauged_eval(*this, f, g);
  }
  return Jet(amb);
}

Jet BracketKind::D(const Jet& a) const { return eval(Jet::constant(a.ambient(), 1), a); }

std::string BracketKind::name() const {
  switch (tag) {
    case Tag::Buttin: return "buttin";
    case Tag::KBracket: return "k_bracket";
    case Tag::GenPoissonEven: return hyperbolic ? "gen_poisson_even(hyperbolic)" : "gen_poisson_even";
    case Tag::Quasi: return "quasi";
    case Tag::JacobiMayer: return "jacobi_mayer";
    case Tag::Gauged: return "gauged(" + base->name() + ", " + phi.str() + ")";
  }
  return "?";
}

BracketKind make_buttin(const Ambient& amb) {
  require_paired(amb);
  BracketKind k;
  k.tag = BracketKind::Tag::Buttin;
  k.amb = amb;
  return k;
}

BracketKind make_k_bracket(const Ambient& amb) {
  if (amb.tau < 0) throw std::invalid_argument("k_bracket needs a designated tau");
  require_paired(amb);
  BracketKind k;
  k.tag = BracketKind::Tag::KBracket;
  k.amb = amb;
  return k;
}

BracketKind make_gen_poisson(const Ambient& amb, bool hyperbolic) {
  if (hyperbolic && amb.n % 2) throw std::invalid_argument("hyperbolic pairing needs even n");
  BracketKind k;
  k.tag = BracketKind::Tag::GenPoissonEven;
  k.amb = amb;
  k.hyperbolic = hyperbolic;
  return k;
}

BracketKind make_quasi(const Ambient& amb, const VectorField& Z, const std::vector<FieldPair>& pairs) {
  BracketKind k;
  k.tag = BracketKind::Tag::Quasi;
  k.amb = amb;
  k.Z = Z;
  k.pairs = pairs;
  return k;
}

BracketKind make_jacobi_mayer() {
  BracketKind k;
  k.tag = BracketKind::Tag::JacobiMayer;
  k.amb = Ambient(3, 0);
  return k;
}

Jet BracketKind::eval_declared(const Jet& f, const Jet& g, int pf) const {
  switch (tag) {
    case Tag::Buttin: return buttin(f, g, pf);
    case Tag::KBracket: return k_bracket(f, g, pf);
    case Tag::GenPoissonEven: return gen_poisson_even(f, g, hyperbolic, pf);
    default: return eval(f, g);
  }
}

BracketKind gauge_transform(const BracketKind& base, const Jet& phi, int order) {
  // phi is declared even; the bracket formula is evaluated with p(phi)=0
  Jet pp = trunc_to(base.eval_declared(phi, phi, 0), order);
  if (!pp.is_zero())
    throw std::invalid_argument("gauge rejected: {phi,phi} = " + pp.str());
  if (phi.parity() != 0) throw std::invalid_argument("gauge function must be even");
  Jet inv = jet_inverse(phi, order);
  BracketKind k;
  k.tag = BracketKind::Tag::Gauged;
  k.amb = base.amb;
  k.base = std::make_shared<BracketKind>(base);
  k.phi = phi;
  k.phi_inv = inv;
  k.order = order;
  return k;
}

Jet gauged_eval(const BracketKind& kind, const Jet& f, const Jet& g) {
  if (kind.tag != BracketKind::Tag::Gauged) throw std::invalid_argument("not a gauged bracket");
  Jet pp = trunc_to(kind.base->eval_declared(kind.phi, kind.phi, 0), kind.order);
  if (!pp.is_zero()) throw std::invalid_argument("gauge rejected: {phi,phi} = " + pp.str());
  Jet inner = kind.base->eval(trunc_to(mul(kind.phi, f), kind.order),
                              trunc_to(mul(kind.phi, g), kind.order));
  return trunc_to(mul(kind.phi_inv, inner), kind.order);
}

Jet gauged_D(const BracketKind& kind, const Jet& a) {
  if (kind.tag != BracketKind::Tag::Gauged) throw std::invalid_argument("not a gauged bracket");
  Jet out = kind.base->eval(kind.phi, a) - mul(kind.base->D(kind.phi), a);
  return trunc_to(out, kind.order);
}

Jet bracket_D(const BracketKind& kind, const Jet& a, const Jet& b) {
  Jet corr = mul(a, kind.D(b)) - mul(kind.D(a), b);
  return kind.eval(a, b) - corr * Scalar(1, 2);
}

JPElem jp_product(const BracketKind& kind, const JPElem& x, const JPElem& y) {
  const Ambient& amb = kind.amb;
  JPElem out{Jet(amb), Jet(amb)};
  out.a += mul(x.a, y.a);
  out.abar += mul(x.abar, y.a);
  for (int p = 0; p < 2; ++p) {
    Jet xa = parity_part(x.a, p);
    Jet xb = parity_part(x.abar, p);
    Scalar s = sgn_pow(p);
    out.abar += mul(xa, y.abar) * s;
    if (!xb.is_zero() && !y.abar.is_zero()) out.a += bracket_D(kind, xb, y.abar) * s;
  }
  return out;
}

Jet MemoBracket::operator()(const Jet& f, const Jet& g) {
  const Ambient& amb = f.ambient();
  Jet out(amb, std::min(f.order(), g.order()));
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      auto key = std::make_pair(a, b);
      auto it = cache_.find(key);
      if (it == cache_.end())
        it = cache_.emplace(key, kind_.eval(Jet::monomial(amb, a), Jet::monomial(amb, b))).first;
      Jet t = it->second;
      t *= ca * cb;
      out += t;
    }
  return out;
}

Jet MemoBracket::D(const Jet& a) {
  const Ambient& amb = a.ambient();
  Jet out(amb, a.order());
  for (const auto& [m, c] : a.terms()) {
    auto it = dcache_.find(m);
    if (it == dcache_.end()) it = dcache_.emplace(m, kind_.D(Jet::monomial(amb, m))).first;
    Jet t = it->second;
    t *= c;
    out += t;
  }
  return out;
}

namespace {

std::string triple_str(const Ambient& amb, const Monomial& a, const Monomial& b, const Monomial& c) {
  return "(" + Jet::monomial(amb, a).str() + ", " + Jet::monomial(amb, b).str() + ", " +
         Jet::monomial(amb, c).str() + ")";
}

}  // namespace

AxiomReport check_bracket_axioms(const BracketKind& kind, const std::vector<Monomial>& monos,
                                 int order) {
  MemoBracket br(kind);
  const Ambient& amb = kind.amb;
  bool odd = kind.odd();
  AxiomReport rep;
  auto note = [&](const std::string& what, const Monomial& a, const Monomial& b, const Monomial& c) {
    if (rep.first_failure.empty()) rep.first_failure = what + " " + triple_str(amb, a, b, c);
  };
  auto exp2 = [&](int pa, int pb) { return odd ? (pa + 1) * (pb + 1) : pa * pb; };
  for (const auto& ma : monos) {
    Jet a = Jet::monomial(amb, ma);
    int pa = ma.parity();
    for (const auto& mb : monos) {
      Jet b = Jet::monomial(amb, mb);
      int pb = mb.parity();
      Jet ab = br(a, b);
      Jet ba = br(b, a);
      Jet skew = trunc_to(ab + ba * sgn_pow(exp2(pa, pb)), order);
      if (!skew.is_zero()) {
        ++rep.skew_fail;
        note("skew", ma, mb, mb);
      }
      for (const auto& mc : monos) {
        Jet c = Jet::monomial(amb, mc);
        ++rep.triples;
        Jet lhs = br(a, br(b, c));
        Jet rhs = br(ab, c) + br(b, br(a, c)) * sgn_pow(exp2(pa, pb));
        if (!trunc_to(lhs - rhs, order).is_zero()) {
          ++rep.jacobi_fail;
          note("jacobi", ma, mb, mc);
        }
        Jet bc = mul(b, c);
        Jet l2 = br(a, bc);
        Jet r2 = mul(ab, c);
        r2 += mul(b, br(a, c)) * sgn_pow(odd ? (pa + 1) * pb : pa * pb);
        Jet dterm = mul(br.D(a), bc);
        if (odd) r2 += dterm * sgn_pow(pa + 1);
        else r2 += dterm;
        if (!trunc_to(l2 - r2, order).is_zero()) {
          ++rep.leibniz_fail;
          note("leibniz", ma, mb, mc);
        }
      }
    }
  }
  return rep;
}

AxiomReport check_leibniz(const BracketKind& kind, const std::vector<Monomial>& monos,
                          const std::function<Jet(const Jet&)>& D, int order) {
  MemoBracket br(kind);
  const Ambient& amb = kind.amb;
  bool odd = kind.odd();
  AxiomReport rep;
  for (const auto& ma : monos) {
    Jet a = Jet::monomial(amb, ma);
    int pa = ma.parity();
    Jet da = D(a);
    for (const auto& mb : monos) {
      Jet b = Jet::monomial(amb, mb);
      int pb = mb.parity();
      Jet ab = br(a, b);
      for (const auto& mc : monos) {
        Jet c = Jet::monomial(amb, mc);
        ++rep.triples;
        Jet bc = mul(b, c);
        Jet lhs = br(a, bc);
        Jet rhs = mul(ab, c) + mul(b, br(a, c)) * sgn_pow(odd ? (pa + 1) * pb : pa * pb);
        Jet dterm = mul(da, bc);
        if (odd) rhs += dterm * sgn_pow(pa + 1);
        else rhs += dterm;
        if (!trunc_to(lhs - rhs, order).is_zero()) {
          ++rep.leibniz_fail;
          if (rep.first_failure.empty()) rep.first_failure = "leibniz " + triple_str(amb, ma, mb, mc);
        }
      }
    }
  }
  return rep;
}

}  // namespace superrigid
