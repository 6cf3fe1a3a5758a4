#ifndef KW4_KFORM_HPP
#define KW4_KFORM_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kw4/linalg.hpp"
#include "kw4/scalar.hpp"

namespace kw4 {

namespace basis4 {

/// Lexicographic basis monomials of Lambda^k over a 4-dimensional space,
/// 0-based indices.
inline const std::vector<std::vector<int>>& monomials(int k) {
  static const std::vector<std::vector<std::vector<int>>> tables = {
      {{}},
      {{0}, {1}, {2}, {3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
      {{0, 1, 2, 3}}};
  if (k < 0 || k > 4) throw std::invalid_argument("degree out of range");
  return tables[k];
}

inline int count(int k) { return static_cast<int>(monomials(k).size()); }

inline int position(const std::vector<int>& sorted_idx) {
  const auto& table = monomials(static_cast<int>(sorted_idx.size()));
  const auto it = std::find(table.begin(), table.end(), sorted_idx);
  if (it == table.end()) throw std::invalid_argument("bad basis monomial");
  return static_cast<int>(it - table.begin());
}

/// Sorts indices ascending; returns the permutation sign, or 0 on a repeat.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

}  // namespace basis4

/// Alternating k-form over the fixed 4-dimensional space, stored densely over
/// the lexicographic monomial basis. The coefficient at an ascending monomial
/// equals the value of the form on the corresponding basis vectors.
template <typename S>
class KForm {
 public:
  KForm() : KForm(0) {}
  explicit KForm(int degree)
      : degree_(degree), c_(basis4::count(degree), scalar_traits<S>::zero()) {}

  static KForm basis(int degree, const std::vector<int>& idx) {
    KForm f(degree);
    f.set(idx, scalar_traits<S>::one());
    return f;
  }

  int degree() const { return degree_; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& operator[](int pos) const { return c_[pos]; }
  S& operator[](int pos) { return c_[pos]; }

  /// Coefficient at an (arbitrary-order) index list, with orientation sign.
  S get(std::vector<int> idx) const {
    const int sign = basis4::sort_sign(idx);
    if (sign == 0) return scalar_traits<S>::zero();
    const S v = c_[basis4::position(idx)];
    return sign > 0 ? v : -v;
  }
  void set(std::vector<int> idx, const S& v) {
    const int sign = basis4::sort_sign(idx);
    if (sign == 0) throw std::invalid_argument("repeated index");
    c_[basis4::position(idx)] = sign > 0 ? v : -v;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const S& x) { return kw4::is_zero(x); });
  }
  double max_abs() const {
    double m = 0;
    for (const auto& x : c_) m = std::max(m, approx_abs(x));
    return m;
  }

  KForm conj() const {
    KForm out(degree_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = conjugate(c_[i]);
    return out;
  }

  friend KForm operator+(const KForm& a, const KForm& b) {
    a.check_degree(b);
    KForm out(a.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend KForm operator-(const KForm& a, const KForm& b) {
    a.check_degree(b);
    KForm out(a.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend KForm operator-(const KForm& a) {
    KForm out(a.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = -a.c_[i];
    return out;
  }
  friend KForm operator*(const S& s, const KForm& a) {
    KForm out(a.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = s * a.c_[i];
    return out;
  }
  KForm& operator+=(const KForm& b) { return *this = *this + b; }
  KForm& operator-=(const KForm& b) { return *this = *this - b; }

  friend bool operator==(const KForm& a, const KForm& b) { return (a - b).is_zero(); }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

 private:
  void check_degree(const KForm& b) const {
    if (degree_ != b.degree_) throw std::invalid_argument("degree mismatch");
  }
  int degree_;
  std::vector<S> c_;
};

template <typename S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  const int k = a.degree() + b.degree();
  if (k > 4) throw std::invalid_argument("degree exceeds dimension");
  KForm<S> out(k);
  const auto& ma = basis4::monomials(a.degree());
  const auto& mb = basis4::monomials(b.degree());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (is_zero(a[static_cast<int>(i)])) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (is_zero(b[static_cast<int>(j)])) continue;
      std::vector<int> idx = ma[i];
      idx.insert(idx.end(), mb[j].begin(), mb[j].end());
      const int sign = basis4::sort_sign(idx);
      if (sign == 0) continue;
      const int pos = basis4::position(idx);
      S term = a[static_cast<int>(i)] * b[static_cast<int>(j)];
      if (sign < 0) term = -term;
      out[pos] = out[pos] + term;
    }
  }
  return out;
}

/// Left interior-style evaluation: the value of a k-form on k basis vectors
/// given by (arbitrary-order) indices.
template <typename S>
S evaluate_on_basis(const KForm<S>& f, std::vector<int> idx) {
  return f.get(std::move(idx));
}

}  // namespace kw4

#endif
