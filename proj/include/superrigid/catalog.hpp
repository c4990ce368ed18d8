#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superrigid/brackets.hpp"
#include "superrigid/finalg.hpp"
#include "superrigid/superjet.hpp"
#include "superrigid/vfield.hpp"

namespace superrigid {

// One summand of an algebra built from copies of a function algebra, e.g.
// A*D1, bar(A), F[[x]]/F1. Elements of the slot are Jets; their parity is
// the Jet parity plus shift.
struct SlotSpec {
  std::string label;
  int shift = 0;
  bool drop_constant = false;  // slot is a quotient by the constants
};

using OElem = std::vector<Jet>;

class OracleAlgebra {
 public:
  // may return nullopt for pairs that follow from the symmetry of the product
  using MonoProduct = std::function<std::optional<OElem>(int, const Jet&, int, const Jet&)>;
  using Constraint = std::function<std::vector<Jet>(const OElem&)>;

  std::string name;
  Ambient amb;
  std::vector<SlotSpec> slots;
  bool anticommutative = false;
  int mu_parity = 0;
  int order = 4;
  int default_sample_weight = 3;
  MonoProduct mono_product;  // on monomials (coefficient 1) of the slots
  Constraint constraint;     // residuals that must vanish; empty = none
  // monomials that must have zero coefficient (a subalgebra/ideal cut)
  std::vector<std::pair<int, Monomial>> excluded;
  GradingSpec weights;  // positive weights used to enumerate samples

  OElem zero() const;
  OElem single(int slot, const Jet& f) const;
  bool is_zero(const OElem& e) const;
  int parity(const OElem& e) const;  // -1 if mixed
  OElem add(const OElem& a, const OElem& b, const Scalar& c = 1) const;
  OElem product(const OElem& a, const OElem& b) const;
  OElem truncated(const OElem& e, int nu) const;
  bool satisfies_constraint(const OElem& e) const;
  bool avoids_excluded(const OElem& e) const;
  std::string str(const OElem& e) const;
  // homogeneous basis of the constrained space, weights <= max_weight,
  // constants of quotient slots removed, excluded monomials cut out when
  // with_exclusions is set
  std::vector<OElem> sample(int max_weight, bool with_exclusions = true) const;

 private:
  mutable std::map<std::tuple<int, Monomial, int, Monomial>, OElem> cache_;
};

// J(A, D1, D2, mu1, mu2) = A D1 + A D2 with A a Grassmann algebra
struct JDDData {
  int n = 1;
  VectorField D1, D2;
  Jet mu1, mu2;  // mu_i(f,g) = f g mu_i
};
std::shared_ptr<OracleAlgebra> jdd_algebra(const std::string& name, const JDDData& d);
// finite-dimensional oracle (all slots finite) as an exact algebra
FinSuperAlg oracle_to_finite(const OracleAlgebra& A);

struct Params {
  std::optional<int> n;
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  int order = 4;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Params params;
  bool finite = false;
  std::optional<FinSuperAlg> alg;
  std::shared_ptr<OracleAlgebra> oracle;
  bool anticommutative = false;
  int product_parity = 0;
  std::vector<std::string> param_names;
};

struct RegistryItem {
  std::string name;
  std::string description;
  std::vector<std::string> params;
  bool finite;
  bool anticommutative;
};
std::vector<RegistryItem> registry();

// throws std::invalid_argument for unknown names or violated parameter constraints
CatalogEntry make_entry(const std::string& name, const Params& params = {});

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct VerifyReport {
  std::string entry;
  int order = 0;
  std::vector<Check> checks;
  // finite entries
  std::optional<bool> simple, rigid;
  std::optional<int> dim, dim_str, dim_r;
  bool ok() const;
};
// seed drives the pair sampling of oracle entries
VerifyReport verify_entry(const CatalogEntry& e, int sample_weight = -1, unsigned seed = 7);

// ---- the OJP construction ----

class OJP {
 public:
  // P is a Buttin or K bracket (possibly gauged); J = P[[x]] + eta P[[x]]
  explicit OJP(const BracketKind& P);
  const Ambient& ambient() const { return big_; }
  const BracketKind& P() const { return P_; }
  int x_index() const { return xi_; }
  int eta_index() const { return eta_; }
  Jet x() const { return Jet::x(big_, xi_); }
  Jet eta() const { return Jet::xi(big_, eta_); }
  Jet embed(const Jet& p) const;

  Jet product(const Jet& u, const Jet& v) const;
  // P-bracket and D extended to J with x and eta as parameters
  Jet bracket(const Jet& u, const Jet& v) const;
  Jet D(const Jet& u) const;
  Jet dx(const Jet& u) const { return partial_x(u, xi_); }
  Jet antiderivative(const Jet& u, const Scalar& constant) const;

 private:
  BracketKind P_;
  Ambient pamb_, big_;
  int xi_, eta_;
  mutable std::map<std::pair<Monomial, Monomial>, Jet> cache_;
  Jet mono_product(const Monomial& a, const Monomial& b) const;
};

struct RelationReport {
  long pairs = 0;
  long evaluations = 0;
  std::map<std::string, long> failures;  // relation name -> failing (v,w) pairs
  std::string first_failure;
  bool ok() const;
};
// relations KV..KVIII of the odd Jordan structure on sampled (v,w) pairs;
// the antiderivatives use the given integration constant
RelationReport check_ojp_relations(const OJP& J, const std::vector<Jet>& vw_sample,
                                   const std::vector<Jet>& xy_sample, const Scalar& constant,
                                   std::size_t max_pairs = 0, unsigned seed = 1);
// monomials of J with x-degree (in all even variables) <= d
std::vector<Jet> ojp_monomials(const OJP& J, int d);
// LP(n,n) via parity reversal against -{f,g}_H + 2(-1)^{p(f)} xi_{n+1} f g
Check lp_closed_form_check(int n, int max_degree);
// {f,g} = (-1)^{p(f)+1} f o g + 2 eta(fx) o eta g and (-1)^{p(f)} eta fx o eta g = eta f g
Check ojp_reconstruct_check(const OJP& J, int max_degree);

struct SpotReport {
  std::vector<Check> checks;
  std::vector<std::string> reached;
  std::vector<std::string> missing;
  int order = 0;
};
// ideal closure of a seed in OJP under the product, modulo x-degree > order
SpotReport ideal_spot_checks(const OJP& J, const Jet& seed, int order);

// ---- Table row realizations: x o y = [[mu,x],y] ----
Elem family_bracket(const FamilySpec& fs, const Elem& a, const Elem& b);
Elem product_from_mu(const FamilySpec& fs, const Elem& mu, const Elem& x, const Elem& y);

Jet rebase(const Jet& f, const Ambient& amb);

}  // namespace superrigid
