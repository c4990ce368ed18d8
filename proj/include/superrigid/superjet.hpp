#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "superrigid/exactlin.hpp"

namespace superrigid {

constexpr int kMaxEven = 8;
constexpr int kMaxOdd = 16;
constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline int add_order(int a, int b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

struct Ambient {
  int m = 0;
  int n = 0;
  int tau = -1;  // index of the odd generator playing the role of tau, or -1
  std::vector<std::string> even_names;
  std::vector<std::string> odd_names;

  Ambient() = default;
  Ambient(int m_, int n_, int tau_ = -1) : m(m_), n(n_), tau(tau_) {}
  bool operator==(const Ambient& o) const { return m == o.m && n == o.n && tau == o.tau; }
  bool operator!=(const Ambient& o) const { return !(*this == o); }
  std::string even_name(int i) const;
  std::string odd_name(int j) const;
};

struct Monomial {
  std::array<std::uint8_t, kMaxEven> ex{};
  std::uint32_t odd = 0;

  int xdeg() const;
  int oddcount() const { return __builtin_popcount(odd); }
  int parity() const { return oddcount() & 1; }
  bool has_odd(int j) const { return (odd >> j) & 1u; }

  bool operator<(const Monomial& o) const {
    if (ex != o.ex) return ex < o.ex;
    return odd < o.odd;
  }
  bool operator==(const Monomial& o) const { return ex == o.ex && odd == o.odd; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  static Monomial one() { return Monomial{}; }
  static Monomial x(int i, int power = 1);
  static Monomial xi(int j);
};

// sign of a*b in Grassmann normal form, 0 if they share an odd generator
int merge_sign(std::uint32_t a, std::uint32_t b);
// returns 0 when the product vanishes
int mono_mul(const Monomial& a, const Monomial& b, Monomial& out);

class Jet {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Jet() = default;
  explicit Jet(const Ambient& amb, int order = kInf) : amb_(amb), order_(order) {}
  static Jet constant(const Ambient& amb, const Scalar& c);
  static Jet monomial(const Ambient& amb, const Monomial& mono, const Scalar& c = 1);
  static Jet x(const Ambient& amb, int i);
  static Jet xi(const Ambient& amb, int j);

  const Ambient& ambient() const { return amb_; }
  const Terms& terms() const { return terms_; }
  int order() const { return order_; }
  void set_order(int nu);
  bool is_zero() const { return terms_.empty(); }
  bool exact() const { return order_ >= kInf; }

  // 0 or 1 for homogeneous jets (zero counts as even), -1 for mixed parity
  int parity() const;
  Scalar coeff(const Monomial& mono) const;
  void add_term(const Monomial& mono, const Scalar& c);
  int min_xdeg() const;
  int max_xdeg() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Scalar& c);
  bool operator==(const Jet& o) const { return terms_ == o.terms_; }
  bool operator!=(const Jet& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Ambient amb_;
  Terms terms_;
  int order_ = kInf;
  friend Jet mul(const Jet&, const Jet&);
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(Jet a);
Jet operator*(Jet a, const Scalar& c);
Jet operator*(const Scalar& c, Jet a);
Jet operator*(const Jet& a, const Jet& b);

Jet mul(const Jet& f, const Jet& g);
Jet partial_x(const Jet& f, int i);
Jet partial_xi(const Jet& f, int j);
// generator index g: 0..m-1 even, m..m+n-1 odd
Jet partial(const Jet& f, int g);
// E(f) over all x_i and the odd generators in include_odd (default: all but tau)
Jet euler(const Jet& f);
Jet euler(const Jet& f, const std::vector<int>& include_odd);
// drop every term whose x-degree exceeds nu and lower the order to nu
Jet truncate(const Jet& f, int nu);
// keep only the part of given odd parity
Jet parity_part(const Jet& f, int p);

void check_same_ambient(const Jet& a, const Jet& b);

// every monomial of x-degree <= maxdeg, in deterministic order
std::vector<Monomial> monomials_upto(const Ambient& amb, int maxdeg);

}  // namespace superrigid
