#include <algorithm>
#include <random>
#include <stdexcept>

#include "superrigid/catalog.hpp"

namespace superrigid {

namespace {

Scalar sign_of(int e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

const BracketKind& base_kind(const BracketKind& P) {
  const BracketKind* k = &P;
  while (k->tag == BracketKind::Tag::Gauged) k = k->base.get();
  return *k;
}

// x-power k as a jet
Jet xpow(const Ambient& amb, int i, int k) {
  if (k < 0) return Jet(amb);
  return Jet::monomial(amb, Monomial::x(i, k));
}

}  // namespace

OJP::OJP(const BracketKind& P) : P_(P) {
  const BracketKind& b = base_kind(P);
  if (b.tag != BracketKind::Tag::Buttin && b.tag != BracketKind::Tag::KBracket)
    throw std::invalid_argument("OJP needs a Buttin or K bracket");
  pamb_ = P.amb;
  int n = pamb_.m;
  if (n + 1 > kMaxEven) throw std::invalid_argument("OJP ambient too large");
  if (pamb_.tau < 0) big_ = Ambient(n + 1, n + 1);
  else big_ = Ambient(n + 1, n + 2, pamb_.tau);
  xi_ = n;
  eta_ = big_.n - 1;
  big_.even_names.assign(n + 1, "");
  big_.even_names[xi_] = "x";
  big_.odd_names.assign(big_.n, "");
  big_.odd_names[eta_] = "eta";
}

Jet OJP::embed(const Jet& p) const { return rebase(p, big_); }

Jet OJP::mono_product(const Monomial& ma, const Monomial& mb) const {
  auto key = std::make_pair(ma, mb);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  struct Part {
    int e, k, pf;
    Scalar sign;
    Monomial f;
  };
  auto split = [&](const Monomial& m) {
    Part p;
    p.e = m.has_odd(eta_) ? 1 : 0;
    p.k = m.ex[xi_];
    p.f = m;
    p.f.ex[xi_] = 0;
    p.f.odd &= ~(1u << eta_);
    p.pf = p.f.parity();
    // normal form puts eta last; eta f = (-1)^{p(f)} f eta
    p.sign = (p.e && p.pf) ? Scalar(-1) : Scalar(1);
    return p;
  };
  Part u = split(ma), v = split(mb);
  Jet X = x(), E = eta();

  // fa o gb and fa o eta(gb) with f,a from the first and g,b from the second
  auto plain = [&](const Part& s, const Part& t) {
    Jet F = Jet::monomial(big_, s.f), G = Jet::monomial(big_, t.f);
    Jet fp = Jet::monomial(pamb_, s.f), gp = Jet::monomial(pamb_, t.f);
    Jet br = embed(P_.eval(fp, gp)), Df = embed(P_.D(fp)), Dg = embed(P_.D(gp));
    Jet A = xpow(big_, xi_, s.k), B = xpow(big_, xi_, t.k);
    Jet Ad = xpow(big_, xi_, s.k - 1) * Scalar(s.k), Bd = xpow(big_, xi_, t.k - 1) * Scalar(t.k);
    Jet r = mul(br, mul(A, B)) * sign_of(s.pf + 1);
    r += mul(mul(F, Dg), mul(X, mul(Ad, B))) * (sign_of(s.pf) / 2);
    r += mul(mul(Df, G), mul(X, mul(Bd, A))) * Scalar(1, 2);
    r += mul(E, mul(mul(F, G), mul(A, B))) * Scalar(2);
    return r;
  };
  auto mixed = [&](const Part& s, const Part& t) {
    Jet F = Jet::monomial(big_, s.f), G = Jet::monomial(big_, t.f);
    Jet fp = Jet::monomial(pamb_, s.f), gp = Jet::monomial(pamb_, t.f);
    Jet br = embed(P_.eval(fp, gp)), Df = embed(P_.D(fp)), Dg = embed(P_.D(gp));
    Jet A = xpow(big_, xi_, s.k), B = xpow(big_, xi_, t.k);
    Jet Ad = xpow(big_, xi_, s.k - 1) * Scalar(s.k), Bd = xpow(big_, xi_, t.k - 1) * Scalar(t.k);
    Jet r = mul(E, mul(br, mul(A, B)));
    Jet inner = mul(F, G) * sign_of(s.pf) + mul(E, mul(mul(F, Dg), X)) * Scalar(1, 2);
    r -= mul(inner, mul(Ad, B));
    r -= mul(E, mul(mul(Df, G), mul(A, B + mul(X, Bd)))) * (sign_of(s.pf) / 2);
    return r;
  };

  Jet r(big_);
  if (!u.e && !v.e) {
    r = plain(u, v);
  } else if (!u.e && v.e) {
    r = mixed(u, v);
  } else if (u.e && !v.e) {
    // odd type commutativity: w1 o w2 = (-1)^{p(w1)p(w2)} w2 o w1
    r = mixed(v, u) * sign_of((u.pf + 1) * v.pf);
  } else {
    Jet F = Jet::monomial(big_, u.f), G = Jet::monomial(big_, v.f);
    Jet A = xpow(big_, xi_, u.k), B = xpow(big_, xi_, v.k);
    Jet Ad = xpow(big_, xi_, u.k - 1) * Scalar(u.k), Bd = xpow(big_, xi_, v.k - 1) * Scalar(v.k);
    r = mul(E, mul(mul(F, G), mul(Ad, B) - mul(A, Bd))) * sign_of(u.pf);
  }
  r *= u.sign * v.sign;
  cache_.emplace(key, r);
  return r;
}

Jet OJP::product(const Jet& u, const Jet& v) const {
  check_same_ambient(u, v);
  if (u.ambient() != big_) throw std::invalid_argument("OJP: element outside P[[x]] + eta P[[x]]");
  Jet out(big_);
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) out += mono_product(a, b) * (ca * cb);
  return out;
}

Jet OJP::bracket(const Jet& u, const Jet& v) const {
  if (P_.tag == BracketKind::Tag::Gauged)
    throw std::invalid_argument("OJP: extended bracket not available for gauged P");
  if (u.parity() < 0) return bracket(parity_part(u, 0), v) + bracket(parity_part(u, 1), v);
  int pu = u.parity();
  int n = pamb_.m;
  Jet out(big_);
  for (int i = 0; i < n; ++i) {
    out += mul(partial_x(u, i), partial_xi(v, i));
    out += mul(partial_xi(u, i), partial_x(v, i)) * sign_of(pu);
  }
  if (pamb_.tau >= 0) {
    std::vector<int> odd;
    for (int j = 0; j < n; ++j) odd.push_back(j);
    // Euler operator over the variables of P only
    auto ep = [&](const Jet& f) {
      Jet o(big_);
      for (const auto& [m, c] : f.terms()) {
        int w = __builtin_popcount(m.odd & ((1u << n) - 1u));
        for (int i = 0; i < n; ++i) w += m.ex[i];
        o.add_term(m, c * (w - 2));
      }
      return o;
    };
    int t = pamb_.tau;
    out += mul(ep(u), partial_xi(v, t));
    out += mul(partial_xi(u, t), ep(v)) * sign_of(pu);
  }
  return out;
}

Jet OJP::D(const Jet& u) const { return bracket(Jet::constant(big_, 1), u); }

Jet OJP::antiderivative(const Jet& u, const Scalar& constant) const {
  Jet out(big_);
  for (const auto& [m, c] : u.terms()) {
    Monomial mm = m;
    mm.ex[xi_]++;
    out.add_term(mm, c / (m.ex[xi_] + 1));
  }
  out.add_term(Monomial::one(), constant);
  return out;
}

std::vector<Jet> ojp_monomials(const OJP& J, int d) {
  std::vector<Jet> out;
  for (const auto& m : monomials_upto(J.ambient(), d)) out.push_back(Jet::monomial(J.ambient(), m));
  return out;
}

bool RelationReport::ok() const {
  for (const auto& [k, v] : failures)
    if (v) return false;
  return pairs > 0;
}

namespace {

struct Op {
  int p;
  std::function<Jet(const Jet&)> f;
};
struct Bil {
  int p;
  std::function<Jet(const Jet&, const Jet&)> f;
};

Bil act(const Op& A, const Bil& B) {
  return Bil{(A.p + B.p) & 1, [A, B](const Jet& x, const Jet& y) {
               int px = x.parity();
               Jet r = A.f(B.f(x, y));
               Jet t = B.f(A.f(x), y) + B.f(x, A.f(y)) * sign_of(px * A.p);
               return r - t * sign_of(A.p * B.p);
             }};
}

}  // namespace

RelationReport check_ojp_relations(const OJP& J, const std::vector<Jet>& vw_sample,
                                   const std::vector<Jet>& xy_sample, const Scalar& constant,
                                   std::size_t max_pairs, unsigned seed) {
  RelationReport rep;
  for (const char* k : {"KV", "KVI", "KVII", "KVIII"}) rep.failures[k] = 0;
  Bil mu{1, [&J](const Jet& a, const Jet& b) { return J.product(a, b); }};
  auto l = [](const Jet& v) {
    return Op{v.parity(), [v](const Jet& x) { return mul(v, x); }};
  };
  auto m = [&J](const Jet& v) {
    return Op{v.parity() + 1, [&J, v](const Jet& x) { return J.product(v, x); }};
  };
  // [l_v, mu] or [mu_v, mu] for v of mixed parity, by parity parts
  auto top = [&](bool is_mu, const Jet& v) {
    return [&, is_mu, v](const Jet& x, const Jet& y) {
      Jet out(J.ambient());
      for (int p = 0; p < 2; ++p) {
        Jet vp = parity_part(v, p);
        if (vp.is_zero()) continue;
        out += act(is_mu ? m(vp) : l(vp), mu).f(x, y);
      }
      return out;
    };
  };
  auto I = [&](const Jet& f) { return J.antiderivative(f, constant); };
  auto dx = [&](const Jet& f) { return J.dx(f); };
  Jet eta = J.eta();

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < vw_sample.size(); ++i)
    for (size_t j = 0; j < vw_sample.size(); ++j) pairs.emplace_back(i, j);
  if (max_pairs && pairs.size() > max_pairs) {
    std::mt19937 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(max_pairs);
  }
  using Fn = std::function<Jet(const Jet&, const Jet&)>;
  for (const auto& [i, j] : pairs) {
    const Jet &v = vw_sample[i], &w = vw_sample[j];
    int pv = v.parity();
    ++rep.pairs;
    std::vector<std::pair<std::string, std::pair<Fn, Fn>>> rel;
    {
      Jet vw = mul(v, w);
      Jet z = I((J.product(v, w) - mul(eta, vw) * Scalar(2) + J.D(vw)) * sign_of(pv + 1));
      Jet psi = I(J.D(z));
      Fn lhs = act(l(v), act(l(w), mu)).f;
      Fn a = top(false, vw), b = top(true, z - mul(eta, psi) * Scalar(2)), c = top(false, mul(eta, z));
      Fn rhs = [=](const Jet& x, const Jet& y) {
        return -a(x, y) + (b(x, y) - c(x, y) * Scalar(2)) * sign_of(pv);
      };
      rel.push_back({"KV", {lhs, rhs}});
    }
    {
      Jet vw = mul(v, w);
      Jet z = I(mul(dx(v), w) + mul(eta, J.D(vw)) * Scalar(2));
      Jet psi = I(J.D(z));
      Fn lhs = act(l(v), act(m(w), mu)).f;
      Fn a = top(true, vw), b = top(true, z - mul(eta, psi) * Scalar(2)), c = top(false, mul(eta, z));
      Fn rhs = [=](const Jet& x, const Jet& y) {
        return (a(x, y) + (b(x, y) - c(x, y) * Scalar(2)) * Scalar(2)) * sign_of(pv + 1);
      };
      rel.push_back({"KVI", {lhs, rhs}});
    }
    {
      int pw = w.parity();
      Fn lhs = act(m(w), act(l(v), mu)).f;
      Fn a = top(false, J.product(w, v) - mul(eta, mul(w, v)) * Scalar(2));
      Fn b = top(false, mul(J.D(w), v));
      Fn c = act(l(v), act(m(w), mu)).f;
      Scalar s = sign_of(pv * (pw + 1));
      Fn rhs = [=](const Jet& x, const Jet& y) { return a(x, y) + b(x, y) + c(x, y) * s; };
      rel.push_back({"KVII", {lhs, rhs}});
    }
    {
      Jet Dv = J.D(v), Dw = J.D(w), vd = dx(v), wd = dx(w);
      Jet z = I(mul(v, wd) - mul(vd, w) - J.bracket(v, Dw) + mul(Dv, Dw) * (2 * sign_of(pv)));
      Jet phi = I(mul(eta, mul(v, wd)) * Scalar(2) - J.product(v, wd) - mul(Dv, wd) -
                  mul(vd, Dw) * (2 * sign_of(pv + 1)) - mul(J.D(vd), w));
      Jet psi = I(J.D(phi));
      Fn lhs = act(m(v), act(m(w), mu)).f;
      Fn a = top(false, J.product(v, mul(eta, w)));
      Fn b = top(true, mul(Dv, w)), c = top(true, mul(eta, z));
      Fn d = top(true, phi - mul(eta, psi) * Scalar(2)), e = top(false, mul(eta, phi));
      Fn rhs = [=](const Jet& x, const Jet& y) {
        return a(x, y) * Scalar(2) +
               (b(x, y) - c(x, y) * Scalar(2) + d(x, y) - e(x, y) * Scalar(2)) * sign_of(pv + 1);
      };
      rel.push_back({"KVIII", {lhs, rhs}});
    }
    for (const auto& [name, fns] : rel) {
      bool bad = false;
      for (const auto& x : xy_sample) {
        for (const auto& y : xy_sample) {
          ++rep.evaluations;
          if (fns.first(x, y) != fns.second(x, y)) {
            bad = true;
            if (rep.first_failure.empty())
              rep.first_failure = name + " at v=" + v.str() + ", w=" + w.str() + ", x=" + x.str() + ", y=" + y.str();
            break;
          }
        }
        if (bad) break;
      }
      if (bad) rep.failures[name]++;
    }
  }
  return rep;
}

Check lp_closed_form_check(int n, int max_degree) {
  OJP J(make_buttin(Ambient(n, n)));
  const Ambient& big = J.ambient();
  long checked = 0, fails = 0;
  std::string first;
  for (const auto& a : monomials_upto(big, max_degree))
    for (const auto& b : monomials_upto(big, max_degree)) {
      Jet f = Jet::monomial(big, a), g = Jet::monomial(big, b);
      int pf = f.parity();
      Jet lp = J.product(f, g) * sign_of(pf);
      Jet closed = -buttin(f, g) + mul(J.eta(), mul(f, g)) * (2 * sign_of(pf));
      ++checked;
      if (lp != closed) {
        if (!fails++) first = f.str() + " , " + g.str() + ": " + lp.str() + " vs " + closed.str();
      }
    }
  return {"LP(" + std::to_string(n) + "," + std::to_string(n) + ") closed form", fails == 0,
          std::to_string(checked) + " monomial pairs" + (first.empty() ? "" : "; first failure " + first)};
}

Check ojp_reconstruct_check(const OJP& J, int max_degree) {
  Ambient pamb = J.P().amb;
  long checked = 0, fails = 0;
  std::string first;
  Jet x = J.x(), eta = J.eta();
  for (const auto& a : monomials_upto(pamb, max_degree))
    for (const auto& b : monomials_upto(pamb, max_degree)) {
      Jet fp = Jet::monomial(pamb, a), gp = Jet::monomial(pamb, b);
      Jet f = J.embed(fp), g = J.embed(gp);
      int pf = fp.parity();
      Jet br = J.embed(J.P().eval(fp, gp));
      Jet efx = mul(eta, mul(f, x)), eg = mul(eta, g);
      Jet rec = J.product(f, g) * sign_of(pf + 1) + J.product(efx, eg) * Scalar(2);
      Jet assoc = J.product(efx, eg) * sign_of(pf);
      ++checked;
      if (rec != br || assoc != mul(eta, mul(f, g))) {
        if (!fails++) first = fp.str() + " , " + gp.str();
      }
    }
  return {"bracket and product recovered from o", fails == 0,
          std::to_string(checked) + " pairs" + (first.empty() ? "" : "; first failure " + first)};
}

SpotReport ideal_spot_checks(const OJP& J, const Jet& seed, int order) {
  SpotReport rep;
  rep.order = order;
  const Ambient& big = J.ambient();
  auto monos = monomials_upto(big, order);
  std::map<Monomial, int> idx;
  for (size_t k = 0; k < monos.size(); ++k) idx[monos[k]] = static_cast<int>(k);
  int dim = static_cast<int>(monos.size());
  auto to_vec = [&](const Jet& f) {
    SVec v;
    for (const auto& [m, c] : f.terms()) {
      auto it = idx.find(m);
      if (it != idx.end()) v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };
  auto to_jet = [&](const SVec& v) {
    Jet f(big);
    for (const auto& [i, c] : v) f.add_term(monos[i], c);
    return f;
  };
  // right and left multiplication, modulo x-degree > order
  Bilinear right = [&](const SVec& a, const SVec& b) { return to_vec(J.product(to_jet(a), to_jet(b))); };
  Bilinear left = [&](const SVec& a, const SVec& b) { return to_vec(J.product(to_jet(b), to_jet(a))); };
  Subspace partners = span_reduce(dim, [&] {
    std::vector<SVec> all;
    for (int k = 0; k < dim; ++k) all.push_back(SVec{{k, Scalar(1)}});
    return all;
  }());
  Subspace seedsp = span_reduce(dim, std::vector<SVec>{to_vec(seed)});
  Subspace I = seedsp.dim() ? closure_under(seedsp, {right, left}, partners) : seedsp;
  for (const auto& m : monos) {
    if (m.xdeg() > order - 1) continue;
    Jet f = Jet::monomial(big, m);
    (subspace_contains(I, to_vec(f)) ? rep.reached : rep.missing).push_back(f.str());
  }
  rep.checks.push_back({"closure dimension " + std::to_string(I.dim()), true, ""});
  // fragments of the step computations
  Jet one = Jet::constant(big, 1), eta = J.eta(), x = J.x();
  {
    bool ok = true;
    for (const auto& m : monomials_upto(big, order - 1)) {
      if (m.has_odd(J.eta_index())) continue;
      Jet fa = Jet::monomial(big, m);
      if (J.product(eta, mul(eta, fa)) != -mul(eta, J.dx(fa))) ok = false;
    }
    rep.checks.push_back({"eta o eta fa = -eta fa'", ok, ""});
  }
  {
    bool ok = true;
    for (const auto& m : monomials_upto(big, order - 1)) {
      if (m.has_odd(J.eta_index())) continue;
      Jet fa = Jet::monomial(big, m);
      Jet expect = -J.D(fa) + mul(eta, fa) * Scalar(2);
      if (J.product(one, fa) != expect) ok = false;
    }
    rep.checks.push_back({"1 o fa = -D(f)a + 2 eta fa", ok, ""});
  }
  return rep;
}

}  // namespace superrigid
