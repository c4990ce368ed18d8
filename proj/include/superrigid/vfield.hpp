#pragma once

#include <map>
#include <string>
#include <vector>

#include "superrigid/superjet.hpp"

namespace superrigid {

struct VectorField {
  Ambient amb;
  std::vector<Jet> P;  // coefficients of d/dx_i
  std::vector<Jet> Q;  // coefficients of d/dxi_j

  VectorField() = default;
  explicit VectorField(const Ambient& a, int order = kInf);
  // the coordinate derivation d/dg, g in 0..m+n-1 (even generators first)
  static VectorField coordinate(const Ambient& a, int g);
  static VectorField term(const Ambient& a, int g, const Jet& coeff);

  Jet& coeff(int g) { return g < amb.m ? P[g] : Q[g - amb.m]; }
  const Jet& coeff(int g) const { return g < amb.m ? P[g] : Q[g - amb.m]; }
  int parity() const;  // -1 if mixed
  bool is_zero() const;
  int order() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Scalar& c);
  bool operator==(const VectorField& o) const;
  std::string str() const;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(const Scalar& c, VectorField a);
// left multiplication f*X
VectorField operator*(const Jet& f, const VectorField& X);

Jet apply(const VectorField& X, const Jet& f);
VectorField lie_bracket(const VectorField& X, const VectorField& Y);
Jet divergence(const VectorField& X);
Jet odd_laplacian(const Jet& f);
Jet div_beta(const Jet& f, const Scalar& beta);

// f1 D1 (+/-) f2 D2 bracket on A-multiples of fixed derivations.
// In even mode the sign exponent is p(f1)p(f2); in odd mode it is
// (p(f1)+1)(p(f2)+1). Result is returned as coefficients on D1, D2.
struct DPair {
  Jet c1, c2;  // coefficient of D1 and D2
};
DPair fd_bracket(const Jet& f1, int s1, const Jet& f2, int s2, const VectorField& D1,
                 const VectorField& D2, bool plus, bool odd_mode);
VectorField realize(const DPair& e, const VectorField& D1, const VectorField& D2);
VectorField fd_bracket_field(const Jet& f1, const VectorField& D1, const Jet& f2,
                             const VectorField& D2, bool plus, bool odd_mode);

struct GradingSpec {
  std::vector<int> a;  // weights of x_i
  std::vector<int> b;  // weights of xi_j
  int weight(const Monomial& mono) const;
  int gen_weight(int g) const { return g < static_cast<int>(a.size()) ? a[g] : b[g - a.size()]; }
  std::string str() const;
  static GradingSpec principal(const Ambient& amb);
};

enum class Family { W, S, H, K, HO, SHO, KO, SKO };
std::string family_name(Family f);
Family family_from_name(const std::string& s);
bool is_field_family(Family f);
bool odd_bracket_family(Family f);  // parity of an element = p(f)+1

struct FamilySpec {
  Family fam = Family::W;
  int m = 0;
  int n = 0;
  Scalar beta = 0;          // SKO only
  bool hyperbolic = false;  // H/K: pair xi_i with xi_{t+i} instead of xi_i with itself
  Ambient ambient() const;
  std::string str() const;
};

// a term of an element of a vector-field or function realization;
// slot = -1 for the function side
struct Term {
  Monomial mono;
  int slot = -1;
  bool operator<(const Term& o) const {
    if (slot != o.slot) return slot < o.slot;
    return mono < o.mono;
  }
  bool operator==(const Term& o) const { return slot == o.slot && mono == o.mono; }
};

using Elem = std::map<Term, Scalar>;

void elem_add(Elem& a, const Elem& b, const Scalar& c = 1);
Elem elem_scaled(const Elem& a, const Scalar& c);
Elem from_field(const VectorField& X);
Elem from_jet(const Jet& f);
VectorField to_field(const Ambient& amb, const Elem& e);
Jet to_jet(const Ambient& amb, const Elem& e);
int term_parity(const FamilySpec& fs, const Term& t);
int elem_parity(const FamilySpec& fs, const Elem& e);
std::string elem_str(const Ambient& amb, const Elem& e);

// degree of a term under a grading; for function families the shift s is
// subtracted (s = weight of p_i+q_i, x_i+xi_i or tau depending on family)
int grading_shift(const FamilySpec& fs, const GradingSpec& g);
int term_degree(const FamilySpec& fs, const GradingSpec& g, const Term& t);
// auxiliary principal-type grading used to cut infinite components into
// finite windows
GradingSpec aux_grading(const FamilySpec& fs);
int aux_degree(const FamilySpec& fs, const Term& t);
int aux_lower_bound(const FamilySpec& fs);
// grading is a Lie grading of the family (pairing/contact weights consistent)
bool grading_compatible(const FamilySpec& fs, const GradingSpec& g, std::string* why = nullptr);

// all W-type (unconstrained) terms with given grading degree k and aux degree t
std::vector<Term> ambient_terms(const FamilySpec& fs, const GradingSpec& g, int k, int t);
// basis of the family's component of grading degree k and aux degree t
std::vector<Elem> component_basis(const FamilySpec& fs, const GradingSpec& g, int k, int t);
// basis of degree-k component, union over aux degrees <= max_aux
std::vector<Elem> basis_of_degree(const FamilySpec& fs, const GradingSpec& g, int k,
                                  int max_aux);
// true if every even weight is positive, so each component is finite
bool components_finite(const GradingSpec& g);
// aux range occupied by the degree-k component when finite
int max_aux_of_degree(const FamilySpec& fs, const GradingSpec& g, int k);

// split a field into its homogeneous components
std::map<int, VectorField> graded_component(const VectorField& X, const GradingSpec& g);

}  // namespace superrigid
