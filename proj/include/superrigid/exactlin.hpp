#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superrigid {

using Scalar = mpq_class;

// p/q in lowest terms (mpq_class(p, q) does not canonicalize)
inline Scalar frac(long p, long q) {
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

// sparse vector: entries sorted by index, no explicit zeros
using SVec = std::vector<std::pair<int, Scalar>>;
using DVec = std::vector<Scalar>;

SVec to_sparse(const DVec& v);
DVec to_dense(const SVec& v, int dim);
void axpy(SVec& y, const Scalar& a, const SVec& x);
SVec scaled(const SVec& v, const Scalar& a);
SVec add(const SVec& a, const SVec& b);
Scalar entry(const SVec& v, int idx);
std::string scalar_str(const Scalar& s);

// Incremental semi-echelon basis. Each row has leading coefficient 1 at its
// pivot and no entries left of it; rows are not back-substituted.
class Echelon {
 public:
  explicit Echelon(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SVec>& rows() const { return rows_; }

  SVec reduce(SVec v) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  // returns true when the span grew
  bool add(const SVec& v);
  bool has_pivot(int col) const { return piv_.count(col) != 0; }

 private:
  int dim_;
  std::vector<SVec> rows_;
  std::map<int, int> piv_;
};

// Canonical subspace: reduced row echelon form, pivots ascending.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SVec>& basis() const { return basis_; }
  std::vector<int> pivots() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  static Subspace from_echelon(const Echelon& e);

 private:
  int ambient_ = 0;
  std::vector<SVec> basis_;
};

Subspace span_reduce(const std::vector<DVec>& vectors);
Subspace span_reduce(int ambient, const std::vector<SVec>& vectors);
bool subspace_contains(const Subspace& s, const DVec& v);
bool subspace_contains(const Subspace& s, const SVec& v);
bool is_subspace_of(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

using Bilinear = std::function<SVec(const SVec&, const SVec&)>;

// Smallest subspace containing seed and stable under x -> m(x, p) for every
// map m and every basis vector p of partners.
Subspace closure_under(const Subspace& seed, const std::vector<Bilinear>& maps,
                       const Subspace& partners);

// Lie subalgebra generated by the given vectors under a bilinear bracket.
Subspace lie_closure(int ambient, const std::vector<SVec>& generators,
                     const Bilinear& bracket);

// Kernel of the linear map whose matrix has the given sparse rows (each row
// is a linear functional on the ambient space). Basis is deterministic.
std::vector<SVec> kernel_basis(int ambient, const std::vector<SVec>& functionals);

}  // namespace superrigid
