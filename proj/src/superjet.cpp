#include "superrigid/superjet.hpp"

#include <sstream>
#include <stdexcept>

namespace superrigid {

std::string Ambient::even_name(int i) const {
  if (i < static_cast<int>(even_names.size()) && !even_names[i].empty()) return even_names[i];
  return "x" + std::to_string(i + 1);
}

std::string Ambient::odd_name(int j) const {
  if (j < static_cast<int>(odd_names.size()) && !odd_names[j].empty()) return odd_names[j];
  if (j == tau) return "tau";
  return "xi" + std::to_string(j + 1);
}

int Monomial::xdeg() const {
  int d = 0;
  for (auto e : ex) d += e;
  return d;
}

Monomial Monomial::x(int i, int power) {
  Monomial m;
  m.ex.at(i) = static_cast<std::uint8_t>(power);
  return m;
}

Monomial Monomial::xi(int j) {
  Monomial m;
  m.odd = 1u << j;
  return m;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  while (b) {
    int j = __builtin_ctz(b);
    b &= b - 1;
    std::uint32_t above = (j >= 31) ? 0u : (a & ~((2u << j) - 1u));
    swaps += __builtin_popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

int mono_mul(const Monomial& a, const Monomial& b, Monomial& out) {
  int s = merge_sign(a.odd, b.odd);
  if (s == 0) return 0;
  for (int i = 0; i < kMaxEven; ++i) out.ex[i] = static_cast<std::uint8_t>(a.ex[i] + b.ex[i]);
  out.odd = a.odd | b.odd;
  return s;
}

void check_same_ambient(const Jet& a, const Jet& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
}

Jet Jet::constant(const Ambient& amb, const Scalar& c) {
  Jet j(amb);
  j.add_term(Monomial::one(), c);
  return j;
}

Jet Jet::monomial(const Ambient& amb, const Monomial& mono, const Scalar& c) {
  Jet j(amb);
  j.add_term(mono, c);
  return j;
}

Jet Jet::x(const Ambient& amb, int i) {
  if (i < 0 || i >= amb.m) throw std::out_of_range("even generator out of range");
  return monomial(amb, Monomial::x(i));
}

Jet Jet::xi(const Ambient& amb, int j) {
  if (j < 0 || j >= amb.n) throw std::out_of_range("odd generator out of range");
  return monomial(amb, Monomial::xi(j));
}

void Jet::set_order(int nu) {
  order_ = nu;
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->first.xdeg() > order_) ? terms_.erase(it) : std::next(it);
}

int Jet::parity() const {
  int p = -2;
  for (const auto& [m, c] : terms_) {
    int q = m.parity();
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

Scalar Jet::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Jet::add_term(const Monomial& mono, const Scalar& c) {
  if (sgn(c) == 0 || mono.xdeg() > order_) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Jet::min_xdeg() const {
  int d = kInf;
  for (const auto& t : terms_) d = std::min(d, t.first.xdeg());
  return d;
}

int Jet::max_xdeg() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.xdeg());
  return d;
}

Jet& Jet::operator+=(const Jet& o) {
  check_same_ambient(*this, o);
  if (o.order_ < order_) set_order(o.order_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_same_ambient(*this, o);
  if (o.order_ < order_) set_order(o.order_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Jet& Jet::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator-(Jet a) { return a *= Scalar(-1); }
Jet operator*(Jet a, const Scalar& c) { return a *= c; }
Jet operator*(const Scalar& c, Jet a) { return a *= c; }
Jet operator*(const Jet& a, const Jet& b) { return mul(a, b); }

Jet mul(const Jet& f, const Jet& g) {
  check_same_ambient(f, g);
  Jet out(f.ambient(), std::min(f.order(), g.order()));
  Monomial m;
  for (const auto& [a, ca] : f.terms_)
    for (const auto& [b, cb] : g.terms_) {
      int s = mono_mul(a, b, m);
      if (s == 0) continue;
      if (m.xdeg() > out.order_) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(m, c);
    }
  return out;
}

Jet partial_x(const Jet& f, int i) {
  if (i < 0 || i >= f.ambient().m) throw std::out_of_range("even generator out of range");
  Jet out(f.ambient(), f.exact() ? kInf : f.order() - 1);
  for (const auto& [m, c] : f.terms()) {
    if (m.ex[i] == 0) continue;
    Monomial d = m;
    d.ex[i]--;
    out.add_term(d, c * static_cast<long>(m.ex[i]));
  }
  return out;
}

Jet partial_xi(const Jet& f, int j) {
  if (j < 0 || j >= f.ambient().n) throw std::out_of_range("odd generator out of range");
  Jet out(f.ambient(), f.order());
  for (const auto& [m, c] : f.terms()) {
    if (!m.has_odd(j)) continue;
    Monomial d = m;
    d.odd &= ~(1u << j);
    int before = __builtin_popcount(m.odd & ((1u << j) - 1u));
    out.add_term(d, (before & 1) ? Scalar(-c) : c);
  }
  return out;
}

Jet partial(const Jet& f, int g) {
  if (g < f.ambient().m) return partial_x(f, g);
  return partial_xi(f, g - f.ambient().m);
}

Jet euler(const Jet& f, const std::vector<int>& include_odd) {
  std::uint32_t mask = 0;
  for (int j : include_odd) {
    if (j < 0 || j >= f.ambient().n) throw std::out_of_range("odd generator out of range");
    mask |= 1u << j;
  }
  Jet out(f.ambient(), f.order());
  for (const auto& [m, c] : f.terms()) {
    int w = m.xdeg() + __builtin_popcount(m.odd & mask);
    out.add_term(m, c * w);
  }
  return out;
}

Jet euler(const Jet& f) {
  std::vector<int> odd;
  for (int j = 0; j < f.ambient().n; ++j)
    if (j != f.ambient().tau) odd.push_back(j);
  return euler(f, odd);
}

Jet truncate(const Jet& f, int nu) {
  Jet out = f;
  if (nu < out.order()) out.set_order(nu);
  return out;
}

Jet parity_part(const Jet& f, int p) {
  Jet out(f.ambient(), f.order());
  for (const auto& [m, c] : f.terms())
    if (m.parity() == p) out.add_term(m, c);
  return out;
}

std::string Jet::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // higher degree first reads more naturally, but keep it deterministic
  for (const auto& [m, c] : terms_) {
    Scalar a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < amb_.m; ++i) {
      if (m.ex[i] == 0) continue;
      std::string f = amb_.even_name(i);
      if (m.ex[i] > 1) f += "^" + std::to_string(m.ex[i]);
      factors.push_back(f);
    }
    for (int j = 0; j < amb_.n; ++j)
      if (m.has_odd(j)) factors.push_back(amb_.odd_name(j));
    if (factors.empty()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    for (size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

static void rec_exps(int m, int i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i == m) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur.ex[i] = static_cast<std::uint8_t>(e);
    rec_exps(m, i + 1, left - e, cur, out);
  }
  cur.ex[i] = 0;
}

std::vector<Monomial> monomials_upto(const Ambient& amb, int maxdeg) {
  std::vector<Monomial> evens;
  Monomial cur;
  for (int d = 0; d <= maxdeg; ++d) {
    std::vector<Monomial> tmp;
    // exactly degree d
    std::vector<Monomial> all;
    rec_exps(amb.m, 0, d, cur, all);
    for (auto& mm : all)
      if (mm.xdeg() == d) evens.push_back(mm);
  }
  std::vector<Monomial> out;
  for (const auto& e : evens)
    for (std::uint32_t s = 0; s < (1u << amb.n); ++s) {
      Monomial mm = e;
      mm.odd = s;
      out.push_back(mm);
    }
  return out;
}

}  // namespace superrigid
