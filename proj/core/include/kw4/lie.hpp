#ifndef KW4_LIE_HPP
#define KW4_LIE_HPP

#include <array>
#include <string>

#include "kw4/model.hpp"

namespace kw4 {

/// A 4-dimensional Lie algebra by structure constants over the model basis:
/// bracket(i,j)[k] is the Psi_k component of [Psi_i, Psi_j].
template <typename S>
class LieAlgebra4 {
 public:
  LieAlgebra4() {
    for (auto& row : c_)
      for (auto& v : row) v = vec_zero<S>();
  }

  static LieAlgebra4 abelian() { return {}; }

  /// Sets c_{ij}^k (and the antisymmetric partner).
  void set(int i, int j, int k, const S& v) {
    c_[i][j][k] = v;
    c_[j][i][k] = -v;
  }

  const Vec4<S>& bracket_basis(int i, int j) const { return c_[i][j]; }

  Vec4<S> bracket(const Vec4<S>& x, const Vec4<S>& y) const {
    Vec4<S> out = vec_zero<S>();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (is_zero(x[i]) || is_zero(y[j])) continue;
        const S f = x[i] * y[j];
        for (int k = 0; k < 4; ++k) out[k] = out[k] + f * c_[i][j][k];
      }
    return out;
  }

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

 private:
  std::array<std::array<Vec4<S>, 4>, 4> c_;
  std::string label_;
};

/// Componentwise Jacobi cyclic sum [[x,y],z]+[[y,z],x]+[[z,x],y] over basis
/// triples; all-zero iff the bracket satisfies the Jacobi identity.
template <typename S>
struct JacobiDefect {
  std::array<std::array<std::array<Vec4<S>, 4>, 4>, 4> d;

  bool is_zero() const {
    for (const auto& a : d)
      for (const auto& b : a)
        for (const auto& v : b)
          for (const auto& x : v)
            if (!kw4::is_zero(x)) return false;
    return true;
  }
  double max_abs() const {
    double m = 0;
    for (const auto& a : d)
      for (const auto& b : a)
        for (const auto& v : b)
          for (const auto& x : v) m = std::max(m, approx_abs(x));
    return m;
  }
};

template <typename S>
JacobiDefect<S> jacobi_defect(const LieAlgebra4<S>& L) {
  JacobiDefect<S> out;
  auto unit = [](int i) {
    Vec4<S> v = vec_zero<S>();
    v[i] = scalar_traits<S>::one();
    return v;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Vec4<S> a = L.bracket(L.bracket_basis(i, j), unit(k));
        const Vec4<S> b = L.bracket(L.bracket_basis(j, k), unit(i));
        const Vec4<S> c = L.bracket(L.bracket_basis(k, i), unit(j));
        Vec4<S> v = vec_zero<S>();
        for (int t = 0; t < 4; ++t) v[t] = a[t] + b[t] + c[t];
        out.d[i][j][k] = v;
      }
  return out;
}

/// Nijenhuis tensor of the model's J on basis pairs. Complex setting:
/// N(x,y) = [x,y] + J[Jx,y] + J[x,Jy] - [Jx,Jy]; para setting flips the
/// three non-leading signs.
template <typename S>
std::array<std::array<Vec4<S>, 4>, 4> nijenhuis(const LieAlgebra4<S>& L,
                                                const ModelSpace<S>& m) {
  const S sign = m.kind() == ModelKind::Para ? -scalar_traits<S>::one()
                                             : scalar_traits<S>::one();
  std::array<std::array<Vec4<S>, 4>, 4> out;
  auto unit = [](int i) {
    Vec4<S> v = vec_zero<S>();
    v[i] = scalar_traits<S>::one();
    return v;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Vec4<S> x = unit(i), y = unit(j);
      const Vec4<S> jx = m.apply_J(x), jy = m.apply_J(y);
      const Vec4<S> t1 = L.bracket(x, y);
      const Vec4<S> t2 = m.apply_J(L.bracket(jx, y));
      const Vec4<S> t3 = m.apply_J(L.bracket(x, jy));
      const Vec4<S> t4 = L.bracket(jx, jy);
      Vec4<S> v = vec_zero<S>();
      for (int t = 0; t < 4; ++t)
        v[t] = t1[t] + sign * (t2[t] + t3[t]) - sign * t4[t];
      out[i][j] = v;
    }
  return out;
}

/// Frobenius span criteria for the model's J: [Psi1,Psi2] in span{Psi1,Psi2}
/// and [Psi3,Psi4] in span{Psi3,Psi4}.
template <typename S>
bool integrability_predicates(const ModelSpace<S>&, const LieAlgebra4<S>& L) {
  return is_zero(L.bracket_basis(0, 1)[2]) && is_zero(L.bracket_basis(0, 1)[3]) &&
         is_zero(L.bracket_basis(2, 3)[0]) && is_zero(L.bracket_basis(2, 3)[1]);
}

/// Chevalley-Eilenberg differential on left-invariant forms;
/// d psi(x,y) = -psi([x,y]) on 1-forms, extended as an antiderivation.
template <typename S>
KForm<S> ce_differential(const LieAlgebra4<S>& L, const KForm<S>& omega) {
  const int k = omega.degree();
  if (k >= 4) return KForm<S>(4);  // degree 5 would vanish; guard the table
  KForm<S> out(k + 1);
  if (k + 1 > 4) return out;
  for (const auto& idx : basis4::monomials(k + 1)) {
    S acc = scalar_traits<S>::zero();
    const int n = k + 1;
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) {
        const Vec4<S>& br = L.bracket_basis(idx[r], idx[s]);
        std::vector<int> rest;
        for (int t = 0; t < n; ++t)
          if (t != r && t != s) rest.push_back(idx[t]);
        // omega([e_r,e_s], rest...) expanded over the bracket components.
        S val = scalar_traits<S>::zero();
        for (int b = 0; b < 4; ++b) {
          if (is_zero(br[b])) continue;
          std::vector<int> args{b};
          args.insert(args.end(), rest.begin(), rest.end());
          val = val + br[b] * omega.get(args);
        }
        const int sgn = (r + s) % 2 == 0 ? 1 : -1;  // (-1)^{r+s}, 0-based r<s
        acc = sgn > 0 ? acc + val : acc - val;
      }
    out.set(idx, acc);
  }
  return out;
}

template <typename S>
KForm<S> codifferential(const LieAlgebra4<S>& L, const BasisFrame<S>& fr,
                        const KForm<S>& omega) {
  return -fr.hodge_star(ce_differential(L, fr.hodge_star(omega)));
}

/// Lee form of the model's Kaehler form.
template <typename S>
KForm<S> lee_form(const LieAlgebra4<S>& L, const ModelSpace<S>& m) {
  return codifferential(L, m.frame(), m.omega());
}

/// Weyl 1-form of Theorem-1.2 type: +1/2 J delta(Omega) in the para setting,
/// -1/2 J delta(Omega) in the Hermitian one.
template <typename S>
KForm<S> weyl_one_form(const LieAlgebra4<S>& L, const ModelSpace<S>& m) {
  if (!integrability_predicates(m, L))
    throw std::domain_error("structure not integrable");
  const KForm<S> anti_lee = m.apply_J_covector(lee_form(L, m));
  const S half = scalar_of<S>(Rational(1, 2));
  return m.kind() == ModelKind::Para ? half * anti_lee : (-half) * anti_lee;
}

/// Moves the bracket through a structure-group element, keeping metric and J
/// fixed: [x,y]_new = U^{-1} [Ux, Uy].
template <typename S>
LieAlgebra4<S> pullback_bracket(const LieAlgebra4<S>& L, const UnitaryElement<S>& u) {
  const Mat4<S> inv = mat_inverse(u.T);
  LieAlgebra4<S> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Vec4<S> ui = vec_zero<S>(), uj = vec_zero<S>();
      for (int k = 0; k < 4; ++k) {
        ui[k] = u.T[k][i];
        uj[k] = u.T[k][j];
      }
      const Vec4<S> br = mat_vec(inv, L.bracket(ui, uj));
      for (int k = 0; k < 4; ++k) out.set(i, j, k, br[k]);
    }
  out.set_label(L.label());
  return out;
}

}  // namespace kw4

#endif
