#include "superrigid/exactlin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace superrigid {

SVec to_sparse(const DVec& v) {
  SVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

DVec to_dense(const SVec& v, int dim) {
  DVec out(dim);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

void axpy(SVec& y, const Scalar& a, const SVec& x) {
  if (sgn(a) == 0 || x.empty()) return;
  SVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar c = y[i].second + a * x[j].second;
      if (sgn(c) != 0) out.emplace_back(y[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

SVec scaled(const SVec& v, const Scalar& a) {
  if (sgn(a) == 0) return {};
  SVec out = v;
  for (auto& e : out) e.second *= a;
  return out;
}

SVec add(const SVec& a, const SVec& b) {
  SVec out = a;
  axpy(out, 1, b);
  return out;
}

Scalar entry(const SVec& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == idx) return it->second;
  return 0;
}

std::string scalar_str(const Scalar& s) { return s.get_str(); }

SVec Echelon::reduce(SVec v) const {
  size_t i = 0;
  while (i < v.size()) {
    auto it = piv_.find(v[i].first);
    if (it == piv_.end()) {
      ++i;
      continue;
    }
    Scalar c = v[i].second;
    axpy(v, -c, rows_[it->second]);
  }
  return v;
}

bool Echelon::add(const SVec& v) {
  for (const auto& e : v)
    if (e.first < 0 || (dim_ > 0 && e.first >= dim_))
      throw std::invalid_argument("vector index outside ambient dimension");
  SVec r = reduce(v);
  if (r.empty()) return false;
  Scalar lead = r.front().second;
  if (lead != 1)
    for (auto& e : r) e.second /= lead;
  piv_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> p;
  for (const auto& r : basis_) p.push_back(r.front().first);
  return p;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::from_echelon(const Echelon& e) {
  Subspace s(e.dim());
  std::vector<SVec> rows = e.rows();
  std::sort(rows.begin(), rows.end(),
            [](const SVec& a, const SVec& b) { return a.front().first < b.front().first; });
  for (int j = static_cast<int>(rows.size()) - 1; j >= 0; --j) {
    int p = rows[j].front().first;
    for (int i = 0; i < j; ++i) {
      Scalar c = entry(rows[i], p);
      if (sgn(c) != 0) axpy(rows[i], -c, rows[j]);
    }
  }
  s.basis_ = std::move(rows);
  return s;
}

Subspace span_reduce(const std::vector<DVec>& vectors) {
  if (vectors.empty()) return Subspace(0);
  int dim = static_cast<int>(vectors.front().size());
  Echelon e(dim);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("dimension mismatch among input vectors");
    e.add(to_sparse(v));
  }
  return Subspace::from_echelon(e);
}

Subspace span_reduce(int ambient, const std::vector<SVec>& vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) e.add(v);
  return Subspace::from_echelon(e);
}

bool subspace_contains(const Subspace& s, const SVec& v) {
  for (const auto& e : v)
    if (e.first < 0 || e.first >= s.ambient_dim())
      throw std::invalid_argument("dimension mismatch");
  SVec r = v;
  for (const auto& row : s.basis()) {
    Scalar c = entry(r, row.front().first);
    if (sgn(c) != 0) axpy(r, -c, row);
  }
  return r.empty();
}

bool subspace_contains(const Subspace& s, const DVec& v) {
  if (static_cast<int>(v.size()) != s.ambient_dim())
    throw std::invalid_argument("dimension mismatch");
  return subspace_contains(s, to_sparse(v));
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  for (const auto& r : a.basis())
    if (!subspace_contains(b, r)) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<SVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return span_reduce(std::max(a.ambient_dim(), b.ambient_dim()), all);
}

Subspace closure_under(const Subspace& seed, const std::vector<Bilinear>& maps,
                       const Subspace& partners) {
  Echelon e(seed.ambient_dim());
  std::deque<SVec> queue;
  for (const auto& v : seed.basis())
    if (e.add(v)) queue.push_back(v);
  while (!queue.empty()) {
    SVec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : maps)
      for (const auto& p : partners.basis()) {
        SVec y = m(x, p);
        if (e.add(y)) queue.push_back(std::move(y));
      }
  }
  return Subspace::from_echelon(e);
}

Subspace lie_closure(int ambient, const std::vector<SVec>& generators,
                     const Bilinear& bracket) {
  Echelon e(ambient);
  std::vector<SVec> elems;
  std::deque<size_t> queue;
  auto push = [&](const SVec& v) {
    if (e.add(v)) {
      elems.push_back(v);
      queue.push_back(elems.size() - 1);
    }
  };
  for (const auto& g : generators) push(g);
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (size_t w = 0; w <= u && w < elems.size(); ++w) push(bracket(elems[u], elems[w]));
    // elements added after u was queued are paired when they are popped
  }
  return Subspace::from_echelon(e);
}

std::vector<SVec> kernel_basis(int ambient, const std::vector<SVec>& functionals) {
  Subspace rs = span_reduce(ambient, functionals);
  std::set<int> pivset;
  for (int p : rs.pivots()) pivset.insert(p);
  std::vector<SVec> out;
  for (int f = 0; f < ambient; ++f) {
    if (pivset.count(f)) continue;
    SVec v;
    for (const auto& row : rs.basis()) {
      Scalar c = entry(row, f);
      if (sgn(c) != 0) v.emplace_back(row.front().first, -c);
    }
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace superrigid
