#ifndef KW4_MODEL_HPP
#define KW4_MODEL_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kw4/frame.hpp"
#include "kw4/kform.hpp"

namespace kw4 {

enum class ModelKind { Hermitian, Para };

template <typename S>
Mat4<S> kform2_to_mat(const KForm<S>& xi) {
  Mat4<S> m = mat_zero<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m[i][j] = xi.get({i, j});
  return m;
}

template <typename S>
KForm<S> mat_to_kform2(const Mat4<S>& m) {
  KForm<S> xi(2);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) xi.set({i, j}, m[i][j]);
  return xi;
}

/// The canonical (para-)Hermitian structure on the shared Psi-frame:
/// Hermitian signature (0,4) in the complex Z-basis (Psi1=Z1, Psi3=Z1bar) or
/// para-Hermitian signature (2,2) (Psi_i=e_i). Both carry the hyperbolic
/// pairing <Psi1,Psi3>=<Psi2,Psi4>=1.
template <typename S>
class ModelSpace {
 public:
  static ModelSpace build(ModelKind kind) { return ModelSpace(kind); }

  ModelKind kind() const { return kind_; }
  const BasisFrame<S>& frame() const { return frame_; }
  const Mat4<S>& J() const { return J_; }
  const KForm<S>& omega() const { return omega_; }
  const KForm<S>& theta(int i) const { return theta_.at(i - 1); }  // 1-based

  Vec4<S> apply_J(const Vec4<S>& v) const { return mat_vec(J_, v); }

  /// J on covectors: (J a)(x) = a(Jx).
  KForm<S> apply_J_covector(const KForm<S>& a) const {
    KForm<S> out(1);
    for (int i = 0; i < 4; ++i) {
      S acc = scalar_traits<S>::zero();
      for (int j = 0; j < 4; ++j) acc = acc + a[j] * J_[j][i];
      out[i] = acc;
    }
    return out;
  }

  /// J on 2-forms: (J xi)(x,y) = xi(Jx, Jy).
  KForm<S> apply_J_two_form(const KForm<S>& xi) const {
    const Mat4<S> m = kform2_to_mat(xi);
    return mat_to_kform2(mat_mul(mat_transpose(J_), mat_mul(m, J_)));
  }

  /// Conjugation involution of the complexified space: swaps Psi1<->Psi3 and
  /// Psi2<->Psi4 and conjugates coefficients. In the para model this is just
  /// coefficient conjugation.
  KForm<S> conj_form(const KForm<S>& xi) const {
    if (kind_ == ModelKind::Para) return xi.conj();
    const auto& mons = basis4::monomials(xi.degree());
    KForm<S> out(xi.degree());
    for (const auto& idx : mons) {
      std::vector<int> swapped;
      for (int i : idx) swapped.push_back(i ^ 2);  // 0<->2, 1<->3
      out.set(swapped, conjugate(xi.get(idx)));
    }
    return out;
  }

  bool is_real_form(const KForm<S>& xi) const { return conj_form(xi) == xi; }

 private:
  explicit ModelSpace(ModelKind kind)
      : kind_(kind), frame_(BasisFrame<S>::psi_frame()), omega_(2) {
    J_ = mat_zero<S>();
    if (kind == ModelKind::Para) {
      const S one = scalar_traits<S>::one();
      J_[0][0] = one;
      J_[1][1] = one;
      J_[2][2] = -one;
      J_[3][3] = -one;
    } else {
      const S i = scalar_of<S>(GaussianRational::i());
      J_[0][0] = i;
      J_[1][1] = i;
      J_[2][2] = -i;
      J_[3][3] = -i;
    }
    // Omega(x,y) = g(x, J y); equals -(P^1^P^3 + P^2^P^4) in the para model
    // and -i(Z^1^Z1bar + Z^2^Z2bar) in the Hermitian one.
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        S acc = scalar_traits<S>::zero();
        for (int k = 0; k < 4; ++k) acc = acc + frame_.metric()[a][k] * J_[k][b];
        omega_.set({a, b}, acc);
      }
    build_theta();
  }

  void build_theta() {
    auto mono = [](int i, int j) { return KForm<S>::basis(2, {i, j}); };
    if (kind_ == ModelKind::Para) {
      theta_ = {mono(0, 2) - mono(1, 3), mono(0, 3) + mono(1, 2),
                mono(0, 3) - mono(1, 2), mono(0, 1) + mono(2, 3),
                mono(0, 1) - mono(2, 3)};
    } else {
      const S i = scalar_of<S>(GaussianRational::i());
      theta_ = {i * (mono(0, 2) - mono(1, 3)), mono(0, 3) + mono(2, 1),
                i * (mono(0, 3) - mono(2, 1)), mono(0, 1) + mono(2, 3),
                i * (mono(0, 1) - mono(2, 3))};
    }
  }

  ModelKind kind_;
  BasisFrame<S> frame_;
  Mat4<S> J_;
  KForm<S> omega_;
  std::array<KForm<S>, 5> theta_;
};

/// Coordinates of a 2-form over {Omega, theta1..theta5}.
template <typename S>
struct TwoFormSplit {
  std::array<S, 5> c;
  S omega_coeff;

  KForm<S> chi_part(const ModelSpace<S>& m) const { return omega_coeff * m.omega(); }
  KForm<S> la0_part(const ModelSpace<S>& m) const {
    return c[0] * m.theta(1) + c[1] * m.theta(2) + c[2] * m.theta(3);
  }
  KForm<S> lpm_part(const ModelSpace<S>& m) const {
    return c[3] * m.theta(4) + c[4] * m.theta(5);
  }
  KForm<S> reassemble(const ModelSpace<S>& m) const {
    return chi_part(m) + la0_part(m) + lpm_part(m);
  }
};

/// Expands a 2-form over the {Omega, theta} basis. In the Hermitian model the
/// input must be fixed by the conjugation involution.
template <typename S>
TwoFormSplit<S> split_two_form(const ModelSpace<S>& m, const KForm<S>& xi) {
  if (xi.degree() != 2) throw std::invalid_argument("expected a 2-form");
  if (m.kind() == ModelKind::Hermitian && scalar_traits<S>::exact && !m.is_real_form(xi))
    throw std::domain_error("reality violation");
  std::vector<std::vector<S>> a(6, std::vector<S>(6));
  std::vector<S> b(6);
  for (int row = 0; row < 6; ++row) {
    a[row][0] = m.omega()[row];
    for (int k = 0; k < 5; ++k) a[row][k + 1] = m.theta(k + 1)[row];
    b[row] = xi[row];
  }
  const auto x = solve_square(a, b);
  TwoFormSplit<S> out;
  out.omega_coeff = x[0];
  for (int k = 0; k < 5; ++k) out.c[k] = x[k + 1];
  return out;
}

struct OrbitInvariants {
  double x = 0;
  double y = 0;
};

template <typename S>
struct OrbitInvariantsExact {
  S x;
  S y;
};

/// |Xi_{0,+}|^2 and |Xi_-|^2 -- a complete orbit invariant only in the
/// Hermitian model.
template <typename S>
OrbitInvariantsExact<S> orbit_invariants(const ModelSpace<S>& m, const KForm<S>& xi) {
  if (m.kind() != ModelKind::Hermitian)
    throw std::domain_error(
        "orbit invariants are not a complete invariant in para signature");
  const auto split = split_two_form(m, xi);
  const auto& fr = m.frame();
  return {fr.form_inner(split.la0_part(m), split.la0_part(m)),
          fr.form_inner(split.lpm_part(m), split.lpm_part(m))};
}

/// Element of the structure group U: commutes with J and preserves the metric.
template <typename S>
struct UnitaryElement {
  Mat4<S> T;

  static UnitaryElement identity() { return {mat_identity<S>()}; }

  /// Hermitian: a 2x2 block A on (Z1,Z2), with conj(A) on (Z1bar,Z2bar).
  static UnitaryElement hermitian_block(const std::array<std::array<S, 2>, 2>& a) {
    Mat4<S> t = mat_zero<S>();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        t[i][j] = a[i][j];
        t[i + 2][j + 2] = conjugate(a[i][j]);
      }
    return {t};
  }

  /// Para: an invertible 2x2 block A on (e1,e2) with A^{-T} on (e3,e4).
  static UnitaryElement para_block(const std::array<std::array<S, 2>, 2>& a) {
    const S det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (is_zero(det)) throw std::domain_error("not unitary");
    Mat4<S> t = mat_zero<S>();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) t[i][j] = a[i][j];
    // A^{-T} = adj(A)^T / det
    t[2][2] = a[1][1] / det;
    t[2][3] = -a[1][0] / det;
    t[3][2] = -a[0][1] / det;
    t[3][3] = a[0][0] / det;
    return {t};
  }

  UnitaryElement inverse() const { return {mat_inverse(T)}; }
  friend UnitaryElement operator*(const UnitaryElement& a, const UnitaryElement& b) {
    return {mat_mul(a.T, b.T)};
  }
};

template <typename S>
bool is_unitary(const ModelSpace<S>& m, const UnitaryElement<S>& u, double tol = 0) {
  const Mat4<S> gt = mat_mul(mat_transpose(u.T), mat_mul(m.frame().metric(), u.T));
  const Mat4<S> jt = mat_mul(u.T, m.J());
  const Mat4<S> tj = mat_mul(m.J(), u.T);
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      worst = std::max(worst, approx_abs(gt[i][j] - m.frame().metric()[i][j]));
      worst = std::max(worst, approx_abs(jt[i][j] - tj[i][j]));
    }
  return worst <= tol;
}

/// Natural left action on k-forms: (T . xi)(x_1..x_k) = xi(T^{-1}x_1, ...).
template <typename S>
KForm<S> induced_action(const ModelSpace<S>& m, const UnitaryElement<S>& u,
                        const KForm<S>& xi) {
  static constexpr double kTol = 1e-9;
  if (!is_unitary(m, u, scalar_traits<S>::exact ? 0.0 : kTol))
    throw std::domain_error("not unitary");
  const Mat4<S> b = mat_inverse(u.T);
  const auto& mons = basis4::monomials(xi.degree());
  KForm<S> out(xi.degree());
  if (xi.degree() == 0) {
    out[0] = xi[0];
    return out;
  }
  for (const auto& idx : mons) {
    // out(idx) = xi(B e_{idx_1}, ..., B e_{idx_k}) expanded multilinearly.
    S acc = scalar_traits<S>::zero();
    const int k = static_cast<int>(idx.size());
    std::vector<int> pick(k, 0);
    while (true) {
      S coeff = scalar_traits<S>::one();
      std::vector<int> rows(k);
      for (int t = 0; t < k; ++t) {
        rows[t] = pick[t];
        coeff = coeff * b[pick[t]][idx[t]];
      }
      if (!is_zero(coeff)) acc = acc + coeff * xi.get(rows);
      int t = k - 1;
      while (t >= 0 && pick[t] == 3) pick[t--] = 0;
      if (t < 0) break;
      ++pick[t];
    }
    out.set(idx, acc);
  }
  return out;
}

/// Pullback of a symmetric 2-tensor under the same action.
template <typename S>
Mat4<S> induced_action_sym(const ModelSpace<S>& m, const UnitaryElement<S>& u,
                           const Mat4<S>& s) {
  const Mat4<S> b = mat_inverse(u.T);
  return mat_mul(mat_transpose(b), mat_mul(s, b));
}

/// Split of a symmetric 2-tensor into trace line, S^2_{0,-/+}, and S^2_{+/-}.
template <typename S>
struct SymTwoSplit {
  S trace_coeff;     // multiple of the metric
  Mat4<S> s0_part;   // J-eigenvalue of g's side, orthogonal to g
  Mat4<S> spm_part;  // opposite J-eigenvalue
};

template <typename S>
SymTwoSplit<S> split_sym_two_tensor(const ModelSpace<S>& m, const Mat4<S>& s) {
  const Mat4<S> js = mat_mul(mat_transpose(m.J()), mat_mul(s, m.J()));
  const S half = scalar_of<S>(Rational(1, 2));
  Mat4<S> plus = mat_zero<S>(), minus = mat_zero<S>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      plus[i][j] = half * (s[i][j] + js[i][j]);
      minus[i][j] = half * (s[i][j] - js[i][j]);
    }
  // g lives in the +1 eigenspace for Hermitian J and the -1 eigenspace for para.
  Mat4<S> with_g = m.kind() == ModelKind::Hermitian ? plus : minus;
  const Mat4<S> spm = m.kind() == ModelKind::Hermitian ? minus : plus;
  const auto& ginv = m.frame().metric_inv();
  auto inner = [&](const Mat4<S>& a, const Mat4<S>& b2) {
    S acc = scalar_traits<S>::zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            acc = acc + a[i][j] * b2[k][l] * ginv[i][k] * ginv[j][l];
    return acc;
  };
  const auto& g = m.frame().metric();
  const S lambda = inner(with_g, g) / inner(g, g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) with_g[i][j] = with_g[i][j] - lambda * g[i][j];
  return {lambda, with_g, spm};
}

namespace detail {

/// Measures the coefficient-plane rotation rate of a one-parameter unitary
/// family `gen(t)` in the (theta_i, theta_j) plane, then returns the element
/// rotating (p,q) |-> (0, sqrt(p^2+q^2)) there.
template <typename S, typename Gen>
UnitaryElement<S> plane_zeroer(const ModelSpace<S>& m, Gen gen, int i, int j,
                               double p, double q) {
  if (std::abs(p) < 1e-15 && q >= 0) return UnitaryElement<S>::identity();
  const double probe = 0.25;
  const auto probed = split_two_form(m, induced_action(m, gen(probe), m.theta(i)));
  const double rate =
      std::atan2(scalar_traits<S>::to_double(probed.c[j - 1]),
                 scalar_traits<S>::to_double(probed.c[i - 1])) /
      probe;
  const double delta = std::atan2(p, q);
  return gen(delta / rate);
}

}  // namespace detail

/// Lemma-2.3-style normalization: rotates a para 2-form inside the timelike
/// (theta1, theta2) plane until its theta1 coordinate vanishes. Exact inputs
/// with a nonzero theta1 coefficient require the floating backend.
template <typename S>
std::pair<UnitaryElement<S>, KForm<S>> normalize_theta1(const ModelSpace<S>& m,
                                                        const KForm<S>& xi) {
  if (m.kind() != ModelKind::Para)
    throw std::domain_error("theta1 normalization is a para-model operation");
  const auto split = split_two_form(m, xi);
  if (is_zero(split.c[0])) return {UnitaryElement<S>::identity(), xi};
  if constexpr (scalar_traits<S>::exact) {
    throw std::domain_error("theta1 normalization requires the floating backend");
  } else {
    auto gen = [](double t) {
      const double c = std::cos(t), s = std::sin(t);
      return UnitaryElement<S>::para_block(
          {{{scalar_traits<S>::from_double(c), scalar_traits<S>::from_double(-s)},
            {scalar_traits<S>::from_double(s), scalar_traits<S>::from_double(c)}}});
    };
    const auto u = detail::plane_zeroer(m, gen, 1, 2,
                                        scalar_traits<S>::to_double(split.c[0]),
                                        scalar_traits<S>::to_double(split.c[1]));
    return {u, induced_action(m, u, xi)};
  }
}

/// Constructive Lemma 2.2: a unitary element mapping `source` to `target`,
/// assuming equal orbit invariants. SU(2) handles the Lambda^2_{0,+} sphere,
/// the determinant circle handles Lambda^2_-.
template <typename S>
UnitaryElement<S> align_hermitian(const ModelSpace<S>& m, const KForm<S>& source,
                                  const KForm<S>& target, double tol = 1e-9) {
  static_assert(!scalar_traits<S>::exact,
                "hermitian alignment runs on the floating backend");
  if (m.kind() != ModelKind::Hermitian)
    throw std::domain_error("hermitian alignment is a Hermitian-model operation");
  const auto inv_s = orbit_invariants(m, source);
  const auto inv_t = orbit_invariants(m, target);
  if (std::abs(scalar_traits<S>::to_double(inv_s.x) -
               scalar_traits<S>::to_double(inv_t.x)) > tol ||
      std::abs(scalar_traits<S>::to_double(inv_s.y) -
               scalar_traits<S>::to_double(inv_t.y)) > tol)
    throw std::domain_error("not in the same orbit");

  auto su2_real = [](double t) {
    const double c = std::cos(t), s = std::sin(t);
    return UnitaryElement<S>::hermitian_block(
        {{{scalar_traits<S>::from_double(c), scalar_traits<S>::from_double(-s)},
          {scalar_traits<S>::from_double(s), scalar_traits<S>::from_double(c)}}});
  };
  auto su2_diag = [](double t) {
    const S z = scalar_traits<S>::zero();
    return UnitaryElement<S>::hermitian_block(
        {{{FloatComplex(std::cos(t), std::sin(t)), z},
          {z, FloatComplex(std::cos(t), -std::sin(t))}}});
  };
  auto phase = [](double t) {
    const S z = scalar_traits<S>::zero();
    const S w = FloatComplex(std::cos(t), std::sin(t));
    return UnitaryElement<S>::hermitian_block({{{w, z}, {z, w}}});
  };

  // Canonicalizer: rotates the (c1,c2,c3) part onto the theta2 axis and the
  // (c4,c5) part onto theta4.
  auto canonicalize = [&](const KForm<S>& xi) {
    UnitaryElement<S> u = UnitaryElement<S>::identity();
    KForm<S> cur = xi;
    auto step = [&](auto gen, int i, int j) {
      const auto sp = split_two_form(m, cur);
      const auto w = detail::plane_zeroer(m, gen, i, j,
                                          scalar_traits<S>::to_double(sp.c[i - 1]),
                                          scalar_traits<S>::to_double(sp.c[j - 1]));
      cur = induced_action(m, w, cur);
      u = w * u;
    };
    step(su2_real, 1, 3);  // zero c1 into theta3
    step(su2_diag, 3, 2);  // zero c3 into theta2
    step(phase, 5, 4);     // zero c5 into theta4
    return u;
  };

  const auto us = canonicalize(source);
  const auto ut = canonicalize(target);
  return ut.inverse() * us;
}

}  // namespace kw4

#endif
