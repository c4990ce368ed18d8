#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superrigid/superjet.hpp"
#include "superrigid/vfield.hpp"

namespace superrigid {

// declared >= 0 overrides the parity of f used in the sign factors
Jet buttin(const Jet& f, const Jet& g, int declared = -1);
Jet k_bracket(const Jet& f, const Jet& g, int declared = -1);
// (p_i,q_i) = (x_{2i-1},x_{2i}); t is the last even generator when m is odd.
// hyperbolic pairs xi_j with xi_{j+n/2} in the odd part instead of xi_j with itself.
Jet gen_poisson_even(const Jet& f, const Jet& g, bool hyperbolic = false, int declared = -1);
using FieldPair = std::pair<VectorField, VectorField>;
Jet quasi_poisson(const VectorField& Z, const std::vector<FieldPair>& pairs, const Jet& f,
                  const Jet& g);
Jet jacobi_mayer(const Jet& f, const Jet& g);

// power series inverse of a jet with invertible constant term, up to order nu
Jet jet_inverse(const Jet& phi, int nu);

struct BracketKind {
  enum class Tag { Buttin, KBracket, GenPoissonEven, Quasi, JacobiMayer, Gauged };
  Tag tag = Tag::Buttin;
  Ambient amb;
  bool hyperbolic = false;
  VectorField Z;
  std::vector<FieldPair> pairs;
  std::shared_ptr<const BracketKind> base;
  Jet phi, phi_inv;
  int order = kInf;

  // odd brackets: Buttin, K and gauges of them
  bool odd() const;
  // bilinear evaluation; mixed-parity arguments are split into parity parts
  Jet eval(const Jet& f, const Jet& g) const;
  // evaluation with the parity of f fixed to pf in the sign factors
  Jet eval_declared(const Jet& f, const Jet& g, int pf) const;
  // D(a) = {1, a}
  Jet D(const Jet& a) const;
  std::string name() const;
};

BracketKind make_buttin(const Ambient& amb);
BracketKind make_k_bracket(const Ambient& amb);
BracketKind make_gen_poisson(const Ambient& amb, bool hyperbolic = false);
BracketKind make_quasi(const Ambient& amb, const VectorField& Z, const std::vector<FieldPair>& pairs);
BracketKind make_jacobi_mayer();
// throws if phi is not invertible or {phi,phi} != 0 up to the given order
BracketKind gauge_transform(const BracketKind& base, const Jet& phi, int order);
Jet gauged_eval(const BracketKind& kind, const Jet& f, const Jet& g);
// D^phi(a) = -D(phi) a + {phi, a}, truncated to the gauge order
Jet gauged_D(const BracketKind& kind, const Jet& a);

// element a + overline(b) of P + bar(P)
struct JPElem {
  Jet a, abar;
  bool operator==(const JPElem& o) const { return a == o.a && abar == o.abar; }
};
Jet bracket_D(const BracketKind& kind, const Jet& a, const Jet& b);
JPElem jp_product(const BracketKind& kind, const JPElem& x, const JPElem& y);

// Bracket cached on monomial pairs; bilinear extension for general jets.
class MemoBracket {
 public:
  explicit MemoBracket(const BracketKind& kind) : kind_(kind) {}
  Jet operator()(const Jet& f, const Jet& g);
  Jet D(const Jet& a);
  const BracketKind& kind() const { return kind_; }

 private:
  BracketKind kind_;
  std::map<std::pair<Monomial, Monomial>, Jet> cache_;
  std::map<Monomial, Jet> dcache_;
};

struct AxiomReport {
  long triples = 0;
  long skew_fail = 0;
  long jacobi_fail = 0;
  long leibniz_fail = 0;
  std::string first_failure;
  bool ok() const { return skew_fail == 0 && jacobi_fail == 0 && leibniz_fail == 0; }
};

// Skew-symmetry, Jacobi and Leibniz (with D(a) = {1,a}) on all triples of the
// given monomials. Odd kinds use the reversed-parity signs.
AxiomReport check_bracket_axioms(const BracketKind& kind, const std::vector<Monomial>& monos,
                                 int order = kInf);
// Leibniz only, with an explicit D
AxiomReport check_leibniz(const BracketKind& kind, const std::vector<Monomial>& monos,
                          const std::function<Jet(const Jet&)>& D, int order = kInf);

}  // namespace superrigid
