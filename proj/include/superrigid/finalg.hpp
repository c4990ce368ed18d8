#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superrigid/exactlin.hpp"

namespace superrigid {

// A (k+1)-linear map J^{k+1} -> J stored as a flat tensor. Entry index of
// (a_0,...,a_k; out) is ((a_0*d + a_1)*d + ... + a_k)*d + out. k = -1 means
// an element of J.
struct MultiLinMap {
  int k = -1;
  SVec t;
  bool is_zero() const { return t.empty(); }
  bool operator==(const MultiLinMap& o) const { return k == o.k && t == o.t; }
};

MultiLinMap add_maps(const MultiLinMap& a, const MultiLinMap& b);

// Superspace J with a fixed homogeneous basis; home of the W_k(J) tensors.
class WSpace {
 public:
  WSpace() = default;
  explicit WSpace(std::vector<int> parities);
  int dim() const { return d_; }
  const std::vector<int>& parities() const { return par_; }
  // number of tensor entries of W_k
  int size(int k) const;
  int index(const std::vector<int>& args, int out) const;
  void decode(int idx, int k, std::vector<int>& args, int& out) const;
  int entry_parity(int idx, int k) const;
  // -1 when mixed; zero counts as even
  int parity(const MultiLinMap& f) const;
  MultiLinMap parity_part(const MultiLinMap& f, int p) const;

  MultiLinMap element(const SVec& v) const;  // W_{-1}
  MultiLinMap identity() const;              // W_0
  // f(e_{a_0},...,e_{a_k}) as a vector of J
  SVec eval(const MultiLinMap& f, const std::vector<int>& args) const;
  MultiLinMap box(const MultiLinMap& f, const MultiLinMap& g) const;
  MultiLinMap w_bracket(const MultiLinMap& f, const MultiLinMap& g) const;
  // [f,B](x,y) = f(B(x,y)) - (-1)^{p(f)p(B)}(B(fx,y) + (-1)^{p(x)p(f)} B(x,fy));
  // B is any bilinear map, not necessarily supersymmetric
  MultiLinMap act(const MultiLinMap& f, const MultiLinMap& B) const;
  // average over argument permutations with Koszul signs
  MultiLinMap symmetrize(const MultiLinMap& f) const;
  bool is_supersymmetric(const MultiLinMap& f) const;
  MultiLinMap compose(const MultiLinMap& f, const MultiLinMap& g) const;  // f o g in End(J)

 private:
  int d_ = 0;
  std::vector<int> par_;
};

struct FinSuperAlg {
  enum class Symmetry { Commutative, Anticommutative };
  std::string name;
  std::vector<int> par;
  std::vector<std::string> labels;
  Symmetry sym = Symmetry::Commutative;
  int mu_parity = 0;
  MultiLinMap mu;  // k = 1 shaped tensor

  int dim() const { return static_cast<int>(par.size()); }
  WSpace space() const { return WSpace(par); }
  SVec product(int i, int j) const;
  std::string vec_str(const SVec& v) const;
};

using ProductTable = std::map<std::pair<int, int>, SVec>;
// builds the algebra and checks parity additivity and (anti)supersymmetry;
// entries (i,j) missing from the table are zero
FinSuperAlg make_algebra(const std::string& name, const std::vector<int>& par,
                         const ProductTable& table, FinSuperAlg::Symmetry sym,
                         std::vector<std::string> labels = {});
// same, but only products (i,j) with i <= j are given; the rest follow from symmetry
FinSuperAlg make_algebra_upper(const std::string& name, const std::vector<int>& par,
                               const ProductTable& upper, FinSuperAlg::Symmetry sym,
                               std::vector<std::string> labels = {});

FinSuperAlg parity_reverse(const FinSuperAlg& J);
// the supersymmetric form used by W(J): J itself or its parity reversal
FinSuperAlg commutative_form(const FinSuperAlg& J);

MultiLinMap left_mult_op(const FinSuperAlg& J, const SVec& a);
Subspace str_algebra(const FinSuperAlg& J);
Subspace related_products(const FinSuperAlg& J, const Subspace& str);
Subspace related_products(const FinSuperAlg& J);

struct RigidReport {
  bool rigid = false;
  bool degenerate = false;
  int dim_str = 0;
  int dim_r = 0;
  int dim_orbit = 0;  // dim of Str(mu) + F mu
  SVec witness;       // element of R outside the orbit span
};
RigidReport is_rigid(const FinSuperAlg& J);

struct SimpleReport {
  bool simple = false;
  bool certified = false;  // true when the verdict is proved
  std::string reason;
  std::vector<SVec> witness;  // basis of a proper nonzero ideal
  int envelope_dim = 0;
};
SimpleReport is_simple(const FinSuperAlg& J);

struct GradedLie {
  WSpace space;
  std::vector<Subspace> comps;  // comps[k+1] = g_k
  bool terminated = false;
  int cap = 0;
  std::vector<int> dims() const;
  const Subspace& g(int k) const { return comps.at(k + 1); }
  int total() const;
};
// J is used through its commutative form
GradedLie tkk(const FinSuperAlg& J, int depth_cap = 6);

struct FindimAdmissible {
  bool a = false;
  bool b = false;
  bool c = false;
  bool degenerate = false;
};
FindimAdmissible check_admissible_findim(const GradedLie& G, const FinSuperAlg& J);

// x o y recovered as [[mu,x],y] inside W(J)
SVec product_from_tkk(const WSpace& W, const MultiLinMap& mu, int i, int j);

}  // namespace superrigid
