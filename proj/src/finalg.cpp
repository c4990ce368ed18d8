#include "superrigid/finalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace superrigid {

namespace {

using Accum = std::unordered_map<int, Scalar>;

SVec from_accum(Accum& acc) {
  SVec out;
  out.reserve(acc.size());
  for (auto& [i, c] : acc)
    if (sgn(c) != 0) out.emplace_back(i, std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// increasing position subsets of {0..n-1} of size r
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

WSpace::WSpace(std::vector<int> parities) : d_(static_cast<int>(parities.size())), par_(std::move(parities)) {}

int WSpace::size(int k) const {
  long long s = 1;
  for (int i = 0; i < k + 2; ++i) {
    s *= d_;
    if (s > INT_MAX) throw std::overflow_error("tensor space too large");
  }
  return static_cast<int>(s);
}

int WSpace::index(const std::vector<int>& args, int out) const {
  long long idx = 0;
  for (int a : args) idx = idx * d_ + a;
  return static_cast<int>(idx * d_ + out);
}

void WSpace::decode(int idx, int k, std::vector<int>& args, int& out) const {
  args.assign(k + 1, 0);
  out = idx % d_;
  idx /= d_;
  for (int i = k; i >= 0; --i) {
    args[i] = idx % d_;
    idx /= d_;
  }
}

int WSpace::entry_parity(int idx, int k) const {
  int p = par_[idx % d_];
  idx /= d_;
  for (int i = 0; i <= k; ++i) {
    p += par_[idx % d_];
    idx /= d_;
  }
  return p & 1;
}

int WSpace::parity(const MultiLinMap& f) const {
  int p = -2;
  for (const auto& [i, c] : f.t) {
    int q = entry_parity(i, f.k);
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

MultiLinMap WSpace::parity_part(const MultiLinMap& f, int p) const {
  MultiLinMap out{f.k, {}};
  for (const auto& e : f.t)
    if (entry_parity(e.first, f.k) == p) out.t.push_back(e);
  return out;
}

MultiLinMap WSpace::element(const SVec& v) const { return MultiLinMap{-1, v}; }

MultiLinMap WSpace::identity() const {
  MultiLinMap out{0, {}};
  for (int i = 0; i < d_; ++i) out.t.emplace_back(i * d_ + i, 1);
  return out;
}

SVec WSpace::eval(const MultiLinMap& f, const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != f.k + 1) throw std::invalid_argument("wrong arity");
  int base = index(args, 0);
  SVec out;
  auto it = std::lower_bound(f.t.begin(), f.t.end(), base,
                             [](const auto& e, int v) { return e.first < v; });
  for (; it != f.t.end() && it->first < base + d_; ++it) out.emplace_back(it->first - base, it->second);
  return out;
}

MultiLinMap WSpace::box(const MultiLinMap& f, const MultiLinMap& g) const {
  int p = f.k, q = g.k;
  if (p + q < -1) throw std::invalid_argument("arity underflow in box product");
  MultiLinMap out{p + q, {}};
  if (p < 0 || f.is_zero() || g.is_zero()) return out;
  // group entries of f by first argument
  std::vector<std::vector<std::pair<std::vector<int>, std::pair<int, const Scalar*>>>> byfirst(d_);
  std::vector<int> args;
  int o;
  for (const auto& [idx, c] : f.t) {
    decode(idx, p, args, o);
    std::vector<int> rest(args.begin() + 1, args.end());
    byfirst[args[0]].push_back({rest, {o, &c}});
  }
  int n = p + q + 1;
  auto subs = subsets(n, q + 1);
  Accum acc;
  std::vector<int> gargs, tuple(n);
  int y;
  std::vector<char> inI(n);
  for (const auto& [gidx, gc] : g.t) {
    decode(gidx, q, gargs, y);
    for (const auto& [rest, oc] : byfirst[y]) {
      Scalar c = gc * *oc.second;
      for (const auto& I : subs) {
        std::fill(inI.begin(), inI.end(), 0);
        for (int i : I) inI[i] = 1;
        int gi = 0, ri = 0;
        for (int pos = 0; pos < n; ++pos) tuple[pos] = inI[pos] ? gargs[gi++] : rest[ri++];
        // Koszul sign of moving the x_I in front of the x_J
        int sw = 0, oddJ = 0;
        for (int pos = 0; pos < n; ++pos) {
          int pa = par_[tuple[pos]];
          if (inI[pos]) {
            if (pa) sw += oddJ;
          } else if (pa) {
            ++oddJ;
          }
        }
        Scalar& slot = acc[index(tuple, oc.first)];
        if (sw & 1) slot -= c;
        else slot += c;
      }
    }
  }
  out.t = from_accum(acc);
  return out;
}

MultiLinMap WSpace::w_bracket(const MultiLinMap& f, const MultiLinMap& g) const {
  int pf = parity(f), pg = parity(g);
  if (pf < 0) return add_maps(w_bracket(parity_part(f, 0), g), w_bracket(parity_part(f, 1), g));
  if (pg < 0) return add_maps(w_bracket(f, parity_part(g, 0)), w_bracket(f, parity_part(g, 1)));
  if (f.k + g.k < -1) throw std::invalid_argument("arity underflow in bracket");
  MultiLinMap a = box(f, g);
  MultiLinMap b = box(g, f);
  Scalar s = (pf & pg) ? 1 : -1;
  a.t = add(a.t, scaled(b.t, s));
  return a;
}

MultiLinMap WSpace::act(const MultiLinMap& f, const MultiLinMap& B) const {
  if (f.k != 0 || B.k != 1) throw std::invalid_argument("act needs f in W_0 and B bilinear");
  int pf = parity(f), pB = parity(B);
  if (pf < 0) return add_maps(act(parity_part(f, 0), B), act(parity_part(f, 1), B));
  if (pB < 0) return add_maps(act(f, parity_part(B, 0)), act(f, parity_part(B, 1)));
  Scalar s = (pf & pB) ? -1 : 1;
  // f as a matrix: rows[i] = f(e_i)
  std::vector<SVec> rows(d_);
  for (const auto& [idx, c] : f.t) rows[idx / d_].emplace_back(idx % d_, c);
  // B grouped by (first, second) argument
  Accum acc;
  for (const auto& [idx, c] : B.t) {
    int o = idx % d_;
    int j = (idx / d_) % d_;
    int i = idx / (d_ * d_);
    // f(B(e_i,e_j))
    for (const auto& [o2, v] : rows[o]) acc[(i * d_ + j) * d_ + o2] += c * v;
  }
  for (int i = 0; i < d_; ++i)
    for (const auto& [i2, v] : rows[i]) {
      // B(f e_i, e_j): entries of B with first arg i2
      for (int j = 0; j < d_; ++j)
        for (const auto& [o, c] : eval(B, {i2, j})) acc[(i * d_ + j) * d_ + o] -= s * v * c;
    }
  for (int j = 0; j < d_; ++j)
    for (const auto& [j2, v] : rows[j])
      for (int i = 0; i < d_; ++i) {
        Scalar sx = (par_[i] & pf) ? -s : s;
        for (const auto& [o, c] : eval(B, {i, j2})) acc[(i * d_ + j) * d_ + o] -= sx * v * c;
      }
  return MultiLinMap{1, from_accum(acc)};
}

MultiLinMap WSpace::symmetrize(const MultiLinMap& f) const {
  int n = f.k + 1;
  if (n <= 1) return f;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  Accum acc;
  std::vector<int> args, moved(n);
  int o;
  Scalar w(1, static_cast<long>(perms.size()));
  for (const auto& [idx, c] : f.t) {
    decode(idx, f.k, args, o);
    for (const auto& pm : perms) {
      // value f(args) is placed at the tuple whose position pm[i] holds args[i]
      for (int i = 0; i < n; ++i) moved[pm[i]] = args[i];
      int sw = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (pm[a] > pm[b] && par_[args[a]] && par_[args[b]]) ++sw;
      Scalar v = c * w;
      if (sw & 1) acc[index(moved, o)] -= v;
      else acc[index(moved, o)] += v;
    }
  }
  return MultiLinMap{f.k, from_accum(acc)};
}

bool WSpace::is_supersymmetric(const MultiLinMap& f) const { return symmetrize(f) == f; }

MultiLinMap WSpace::compose(const MultiLinMap& f, const MultiLinMap& g) const {
  if (f.k != 0 || g.k != 0) throw std::invalid_argument("compose needs W_0 elements");
  return box(f, g);
}

MultiLinMap add_maps(const MultiLinMap& a, const MultiLinMap& b) {
  if (a.k != b.k) throw std::invalid_argument("degree mismatch");
  return MultiLinMap{a.k, add(a.t, b.t)};
}

SVec FinSuperAlg::product(int i, int j) const { return space().eval(mu, {i, j}); }

std::string FinSuperAlg::vec_str(const SVec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    std::string lab = i < static_cast<int>(labels.size()) ? labels[i] : "e" + std::to_string(i + 1);
    if (c == 1) os << (first ? "" : " + ") << lab;
    else if (c == -1) os << (first ? "-" : " - ") << lab;
    else if (sgn(c) < 0) os << (first ? "-" : " - ") << scalar_str(-c) << "*" << lab;
    else os << (first ? "" : " + ") << scalar_str(c) << "*" << lab;
    first = false;
  }
  return os.str();
}

namespace {

void finish_algebra(FinSuperAlg& J) {
  WSpace W = J.space();
  int p = W.parity(J.mu);
  if (p < 0) throw std::invalid_argument(J.name + ": product violates parity additivity");
  J.mu_parity = p;
  int d = J.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SVec a = J.product(i, j), b = J.product(j, i);
      int e = J.par[i] * J.par[j];
      Scalar s = (e & 1) ? -1 : 1;
      if (J.sym == FinSuperAlg::Symmetry::Anticommutative) s = -s;
      if (a != scaled(b, s))
        throw std::invalid_argument(J.name + ": product table is not (anti)supersymmetric");
    }
  if (J.labels.empty())
    for (int i = 0; i < d; ++i) J.labels.push_back("e" + std::to_string(i + 1));
}

}  // namespace

FinSuperAlg make_algebra(const std::string& name, const std::vector<int>& par,
                         const ProductTable& table, FinSuperAlg::Symmetry sym,
                         std::vector<std::string> labels) {
  FinSuperAlg J;
  J.name = name;
  J.par = par;
  J.sym = sym;
  J.labels = std::move(labels);
  int d = J.dim();
  WSpace W = J.space();
  std::vector<std::pair<int, Scalar>> entries;
  for (const auto& [ij, v] : table) {
    if (ij.first < 0 || ij.first >= d || ij.second < 0 || ij.second >= d)
      throw std::out_of_range(name + ": product index out of range");
    for (const auto& [o, c] : v) {
      if (o < 0 || o >= d) throw std::out_of_range(name + ": product value out of range");
      if (sgn(c) != 0) entries.emplace_back(W.index({ij.first, ij.second}, o), c);
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  J.mu = MultiLinMap{1, {}};
  for (auto& e : entries) {
    if (!J.mu.t.empty() && J.mu.t.back().first == e.first) J.mu.t.back().second += e.second;
    else J.mu.t.push_back(e);
  }
  J.mu.t.erase(std::remove_if(J.mu.t.begin(), J.mu.t.end(), [](const auto& e) { return sgn(e.second) == 0; }),
               J.mu.t.end());
  finish_algebra(J);
  return J;
}

FinSuperAlg make_algebra_upper(const std::string& name, const std::vector<int>& par,
                               const ProductTable& upper, FinSuperAlg::Symmetry sym,
                               std::vector<std::string> labels) {
  ProductTable full;
  for (const auto& [ij, v] : upper) {
    auto [i, j] = ij;
    if (i > j) throw std::invalid_argument(name + ": upper table needs i <= j");
    full[{i, j}] = v;
    if (i != j) {
      int e = par[i] * par[j];
      Scalar s = (e & 1) ? -1 : 1;
      if (sym == FinSuperAlg::Symmetry::Anticommutative) s = -s;
      full[{j, i}] = scaled(v, s);
    }
  }
  return make_algebra(name, par, full, sym, std::move(labels));
}

FinSuperAlg parity_reverse(const FinSuperAlg& J) {
  FinSuperAlg R;
  R.name = J.name + "^rev";
  for (int p : J.par) R.par.push_back(1 - p);
  for (const auto& l : J.labels) R.labels.push_back(l.size() > 4 && l.substr(0, 4) == "bar(" ? l.substr(4, l.size() - 5) : "bar(" + l + ")");
  R.sym = J.sym == FinSuperAlg::Symmetry::Commutative ? FinSuperAlg::Symmetry::Anticommutative
                                                       : FinSuperAlg::Symmetry::Commutative;
  R.mu_parity = 1 - J.mu_parity;
  WSpace W = J.space();
  R.mu = MultiLinMap{1, {}};
  std::vector<int> args;
  int o;
  for (const auto& [idx, c] : J.mu.t) {
    W.decode(idx, 1, args, o);
    R.mu.t.emplace_back(idx, J.par[args[0]] ? -c : c);
  }
  finish_algebra(R);
  return R;
}

FinSuperAlg commutative_form(const FinSuperAlg& J) {
  return J.sym == FinSuperAlg::Symmetry::Commutative ? J : parity_reverse(J);
}

MultiLinMap left_mult_op(const FinSuperAlg& J, const SVec& a) {
  WSpace W = J.space();
  int d = J.dim();
  Accum acc;
  for (const auto& [i, c] : a)
    for (int b = 0; b < d; ++b)
      for (const auto& [o, v] : J.product(i, b)) acc[b * d + o] += c * v;
  return MultiLinMap{0, from_accum(acc)};
}

namespace {

std::vector<SVec> left_mults(const FinSuperAlg& J) {
  std::vector<SVec> out;
  for (int i = 0; i < J.dim(); ++i) out.push_back(left_mult_op(J, SVec{{i, 1}}).t);
  return out;
}

}  // namespace

Subspace str_algebra(const FinSuperAlg& J) {
  WSpace W = J.space();
  Bilinear br = [&](const SVec& a, const SVec& b) {
    return W.w_bracket(MultiLinMap{0, a}, MultiLinMap{0, b}).t;
  };
  return lie_closure(W.size(0), left_mults(J), br);
}

Subspace related_products(const FinSuperAlg& J, const Subspace& str) {
  WSpace W = J.space();
  Subspace seed = span_reduce(W.size(1), {J.mu.t});
  Bilinear m = [&](const SVec& B, const SVec& f) { return W.act(MultiLinMap{0, f}, MultiLinMap{1, B}).t; };
  return closure_under(seed, {m}, str);
}

Subspace related_products(const FinSuperAlg& J) { return related_products(J, str_algebra(J)); }

RigidReport is_rigid(const FinSuperAlg& J) {
  RigidReport rep;
  WSpace W = J.space();
  Subspace str = str_algebra(J);
  Subspace R = related_products(J, str);
  rep.dim_str = str.dim();
  rep.dim_r = R.dim();
  std::vector<SVec> orbit{J.mu.t};
  for (const auto& s : str.basis()) orbit.push_back(W.act(MultiLinMap{0, s}, J.mu).t);
  Subspace O = span_reduce(W.size(1), orbit);
  rep.dim_orbit = O.dim();
  rep.degenerate = J.mu.is_zero();
  rep.rigid = (O == R);
  if (!rep.rigid)
    for (const auto& v : R.basis())
      if (!subspace_contains(O, v)) {
        rep.witness = v;
        break;
      }
  return rep;
}

namespace {

// smallest subspace containing v and stable under all left multiplications
Subspace ideal_generated(const FinSuperAlg& J, const std::vector<SVec>& gens) {
  int d = J.dim();
  Subspace seed = span_reduce(d, gens);
  Subspace all = span_reduce(d, [&] {
    std::vector<SVec> b;
    for (int i = 0; i < d; ++i) b.push_back(SVec{{i, 1}});
    return b;
  }());
  Bilinear m = [&](const SVec& x, const SVec& a) {
    Accum acc;
    for (const auto& [i, c] : a)
      for (const auto& [j, v] : x)
        for (const auto& [o, w] : J.product(i, j)) acc[o] += c * v * w;
    return from_accum(acc);
  };
  return closure_under(seed, {m}, all);
}

bool proper_nonzero(const Subspace& s, int d) { return s.dim() > 0 && s.dim() < d; }

}  // namespace

SimpleReport is_simple(const FinSuperAlg& J) {
  SimpleReport rep;
  int d = J.dim();
  WSpace W = J.space();
  if (J.mu.is_zero()) {
    rep.simple = false;
    rep.certified = true;
    rep.reason = "zero product";
    if (d > 1) rep.witness = {SVec{{0, 1}}};
    return rep;
  }
  // associative envelope of the left multiplications, with identity
  std::vector<SVec> gens = left_mults(J);
  std::vector<SVec> seedv = gens;
  seedv.push_back(W.identity().t);
  Bilinear m = [&](const SVec& x, const SVec& g) { return W.compose(MultiLinMap{0, g}, MultiLinMap{0, x}).t; };
  Subspace env = closure_under(span_reduce(W.size(0), seedv), {m}, span_reduce(W.size(0), gens));
  rep.envelope_dim = env.dim();
  if (env.dim() == d * d) {
    rep.simple = true;
    rep.certified = true;
    rep.reason = "left multiplications generate End(J)";
    return rep;
  }
  auto found = [&](const Subspace& s, const std::string& why) {
    rep.simple = false;
    rep.certified = true;
    rep.reason = why;
    rep.witness = s.basis();
  };
  // annihilator
  std::vector<SVec> fn;
  for (int i = 0; i < d; ++i)
    for (int b = 0; b < d; ++b) {
      SVec v;
      for (int j = 0; j < d; ++j) {
        Scalar c = entry(J.product(i, j), b);
        if (sgn(c) != 0) v.emplace_back(j, c);
      }
      if (!v.empty()) fn.push_back(v);
    }
  Subspace ann = span_reduce(d, kernel_basis(d, fn));
  if (proper_nonzero(ann, d)) {
    found(ann, "annihilator");
    return rep;
  }
  std::vector<SVec> sq;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) sq.push_back(J.product(i, j));
  Subspace JJ = span_reduce(d, sq);
  if (proper_nonzero(JJ, d)) {
    found(ideal_generated(J, JJ.basis()), "J*J is a proper ideal");
    return rep;
  }
  for (int i = 0; i < d; ++i) {
    Subspace s = ideal_generated(J, {SVec{{i, 1}}});
    if (proper_nonzero(s, d)) {
      found(s, "ideal generated by a basis vector");
      return rep;
    }
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 4 * d; ++trial) {
    int p = trial & 1;
    SVec v;
    for (int i = 0; i < d; ++i)
      if (J.par[i] == p) {
        int c = dist(rng);
        if (c) v.emplace_back(i, c);
      }
    if (v.empty()) continue;
    Subspace s = ideal_generated(J, {v});
    if (proper_nonzero(s, d)) {
      found(s, "ideal generated by a sampled vector");
      return rep;
    }
  }
  rep.simple = false;
  rep.certified = false;
  rep.reason = "no ideal found but the envelope is not End(J)";
  return rep;
}

std::vector<int> GradedLie::dims() const {
  std::vector<int> out;
  for (const auto& c : comps) out.push_back(c.dim());
  return out;
}

int GradedLie::total() const {
  int t = 0;
  for (const auto& c : comps) t += c.dim();
  return t;
}

GradedLie tkk(const FinSuperAlg& J0, int depth_cap) {
  if (depth_cap < 1) throw std::invalid_argument("depth_cap must be at least 1");
  FinSuperAlg J = commutative_form(J0);
  GradedLie G;
  G.space = J.space();
  G.cap = depth_cap;
  const WSpace& W = G.space;
  int d = J.dim();
  std::vector<SVec> id;
  for (int i = 0; i < d; ++i) id.push_back(SVec{{i, 1}});
  G.comps.push_back(span_reduce(d, id));
  Subspace str = str_algebra(J);
  G.comps.push_back(str);
  Subspace R = related_products(J, str);
  G.comps.push_back(R);
  if (R.dim() == 0) {
    G.terminated = true;
    return G;
  }
  for (int k = 1; k < depth_cap; ++k) {
    const Subspace& gk = G.comps.back();
    Echelon e(W.size(k + 1));
    for (const auto& a : R.basis())
      for (const auto& b : gk.basis()) e.add(W.w_bracket(MultiLinMap{1, a}, MultiLinMap{k, b}).t);
    G.comps.push_back(Subspace::from_echelon(e));
    if (e.rank() == 0) {
      G.terminated = true;
      break;
    }
  }
  return G;
}

FindimAdmissible check_admissible_findim(const GradedLie& G, const FinSuperAlg& J0) {
  FindimAdmissible rep;
  FinSuperAlg J = commutative_form(J0);
  const WSpace& W = G.space;
  rep.degenerate = J.mu.is_zero();
  std::vector<SVec> orbit{J.mu.t};
  for (const auto& s : G.g(0).basis()) orbit.push_back(W.act(MultiLinMap{0, s}, J.mu).t);
  rep.a = span_reduce(W.size(1), orbit) == G.g(1);
  std::vector<SVec> gens;
  for (int i = 0; i < J.dim(); ++i) {
    SVec v = W.w_bracket(J.mu, W.element(SVec{{i, 1}})).t;
    if (!v.empty()) gens.push_back(v);
  }
  Bilinear br = [&](const SVec& a, const SVec& b) {
    return W.w_bracket(MultiLinMap{0, a}, MultiLinMap{0, b}).t;
  };
  // a zero generating set does not generate a grading with mu in g_1
  rep.b = !gens.empty() && lie_closure(W.size(0), gens, br) == G.g(0);
  rep.c = true;
  for (int k = 1; k + 1 < static_cast<int>(G.comps.size()) - 1; ++k) {
    Echelon e(W.size(k + 1));
    for (const auto& a : G.g(1).basis())
      for (const auto& b : G.g(k).basis()) e.add(W.w_bracket(MultiLinMap{1, a}, MultiLinMap{k, b}).t);
    if (!(Subspace::from_echelon(e) == G.g(k + 1))) rep.c = false;
  }
  return rep;
}

SVec product_from_tkk(const WSpace& W, const MultiLinMap& mu, int i, int j) {
  MultiLinMap x = W.element(SVec{{i, 1}}), y = W.element(SVec{{j, 1}});
  return W.w_bracket(W.w_bracket(mu, x), y).t;
}

}  // namespace superrigid
