#ifndef KW4_FRAME_HPP
#define KW4_FRAME_HPP

#include <vector>

#include "kw4/kform.hpp"
#include "kw4/linalg.hpp"

namespace kw4 {

/// A fixed 4-dimensional frame: metric on vectors, induced metric on
/// covectors, and the volume form convention dv = P^1^P^3^P^2^P^4.
template <typename S>
class BasisFrame {
 public:
  explicit BasisFrame(const Mat4<S>& metric)
      : g_(metric), ginv_(mat_inverse(metric)), vol_(4) {
    vol_.set({0, 2, 1, 3}, scalar_traits<S>::one());
  }

  const Mat4<S>& metric() const { return g_; }
  const Mat4<S>& metric_inv() const { return ginv_; }
  const KForm<S>& volume_form() const { return vol_; }

  /// Hyperbolic pairing <P1,P3>=<P2,P4>=1 shared by both model spaces.
  static BasisFrame psi_frame() {
    Mat4<S> g = mat_zero<S>();
    const S one = scalar_traits<S>::one();
    g[0][2] = one; g[2][0] = one;
    g[1][3] = one; g[3][1] = one;
    return BasisFrame(g);
  }

  /// Orthogonal frame <e_i,e_i>=2 of the Hermitian model's real basis.
  static BasisFrame hermitian_e_frame() {
    Mat4<S> g = mat_zero<S>();
    const S two = scalar_of<S>(2);
    for (int i = 0; i < 4; ++i) g[i][i] = two;
    return BasisFrame(g);
  }

  /// Induced inner product on k-forms: determinant convention, no 1/k!.
  S form_inner(const KForm<S>& a, const KForm<S>& b) const {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    const int k = a.degree();
    if (k == 0) return a[0] * b[0];
    const auto& mons = basis4::monomials(k);
    S acc = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < mons.size(); ++i) {
      if (is_zero(a[static_cast<int>(i)])) continue;
      for (std::size_t j = 0; j < mons.size(); ++j) {
        if (is_zero(b[static_cast<int>(j)])) continue;
        acc = acc + a[static_cast<int>(i)] * b[static_cast<int>(j)] *
                        monomial_inner(mons[i], mons[j]);
      }
    }
    return acc;
  }

  /// Hodge star from the defining identity w1 ^ *w2 = <w1,w2> dv. The sign of
  /// ** per degree is whatever the identity forces; nothing is hard-coded.
  KForm<S> hodge_star(const KForm<S>& b) const {
    const int k = b.degree();
    KForm<S> out(4 - k);
    const S v = vol_.get({0, 1, 2, 3});
    const auto& mons = basis4::monomials(k);
    for (const auto& idx : mons) {
      std::vector<int> comp;
      for (int i = 0; i < 4; ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) comp.push_back(i);
      std::vector<int> joined = idx;
      joined.insert(joined.end(), comp.begin(), comp.end());
      const int s = basis4::sort_sign(joined);
      const S lambda = form_inner(KForm<S>::basis(k, idx), b) * v;
      out[basis4::position(comp)] = s > 0 ? lambda : -lambda;
    }
    return out;
  }

  Vec4<S> sharp(const KForm<S>& omega) const {
    if (omega.degree() != 1) throw std::invalid_argument("sharp expects a 1-form");
    Vec4<S> w = vec_zero<S>();
    for (int i = 0; i < 4; ++i) w[i] = omega[i];
    return mat_vec(ginv_, w);
  }

  KForm<S> flat(const Vec4<S>& v) const {
    KForm<S> out(1);
    for (int i = 0; i < 4; ++i) {
      S acc = scalar_traits<S>::zero();
      for (int j = 0; j < 4; ++j) acc = acc + g_[i][j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  S vec_inner(const Vec4<S>& a, const Vec4<S>& b) const {
    S acc = scalar_traits<S>::zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) acc = acc + g_[i][j] * a[i] * b[j];
    return acc;
  }

 private:
  S monomial_inner(const std::vector<int>& I, const std::vector<int>& J) const {
    const int k = static_cast<int>(I.size());
    // det[ <P^{I_r}, P^{J_s}> ] by Laplace expansion; k <= 4 so this is cheap.
    std::vector<std::vector<S>> m(k, std::vector<S>(k));
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) m[r][s] = ginv_[I[r]][J[s]];
    return det_small(m);
  }

  static S det_small(const std::vector<std::vector<S>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    S acc = scalar_traits<S>::zero();
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      std::vector<std::vector<S>> sub(n - 1, std::vector<S>(n - 1));
      for (int r = 1; r < n; ++r) {
        int cc = 0;
        for (int c2 = 0; c2 < n; ++c2) {
          if (c2 == c) continue;
          sub[r - 1][cc++] = m[r][c2];
        }
      }
      const S term = m[0][c] * det_small(sub);
      acc = sign > 0 ? acc + term : acc - term;
      sign = -sign;
    }
    return acc;
  }

  Mat4<S> g_;
  Mat4<S> ginv_;
  KForm<S> vol_;
};

}  // namespace kw4

#endif
